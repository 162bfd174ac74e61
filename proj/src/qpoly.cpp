#include "tpverify/qpoly.hpp"

#include <sstream>
#include <utility>

namespace tpv {

namespace {
const mpz_class kZero = 0;
}

QPoly::QPoly(long constant) {
    if (constant != 0) coeffs_.emplace_back(constant);
}

QPoly::QPoly(mpz_class constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPoly QPoly::monomial(mpz_class c, std::size_t degree) {
    QPoly p;
    if (c != 0) {
        p.coeffs_.assign(degree, kZero);
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

QPoly QPoly::from_coeffs(std::vector<mpz_class> coeffs) {
    QPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

const mpz_class& QPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

bool QPoly::is_q_nonnegative() const {
    for (const mpz_class& c : coeffs_)
        if (c < 0) return false;
    return true;
}

QPoly QPoly::operator-() const {
    QPoly p;
    p.coeffs_.reserve(coeffs_.size());
    for (const mpz_class& c : coeffs_) p.coeffs_.push_back(-c);
    return p;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return QPoly{};
    QPoly p;
    p.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            p.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    p.trim();
    return p;
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? "+" : "-");
        mpz_class a = abs(c);
        if (first && c < 0) out << "-";
        if (a != 1 || i == 0) out << a.get_str();
        if (i >= 1) {
            out << "q";
            if (i >= 2) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

bool geq_q(const QPoly& f, const QPoly& g) {
    return (f - g).is_q_nonnegative();
}

}  // namespace tpv
