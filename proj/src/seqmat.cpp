#include "tpverify/seqmat.hpp"

#include <stdexcept>
#include <string>

namespace tpv {

QPoly narayana_b(std::size_t n) {
    // binom(n,k) computed incrementally; squares are exact in mpz.
    std::vector<mpz_class> coeffs(n + 1);
    mpz_class binom = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        coeffs[k] = binom * binom;
        if (k < n) {
            binom *= static_cast<long>(n - k);
            binom /= static_cast<long>(k + 1);
        }
    }
    return QPoly::from_coeffs(std::move(coeffs));
}

namespace {
const QPoly& indexed(const std::vector<QPoly>& seq, std::size_t idx, const char* name,
                     std::size_t display_index) {
    if (idx >= seq.size())
        throw std::invalid_argument(std::string("RecurrenceData: ") + name + "_" +
                                    std::to_string(display_index) +
                                    " requested but only " + std::to_string(seq.size()) +
                                    " terms supplied");
    return seq[idx];
}
}  // namespace

const QPoly& RecurrenceData::r(std::size_t k) const { return indexed(r_sequence, k, "r", k); }
const QPoly& RecurrenceData::s(std::size_t k) const { return indexed(s_sequence, k, "s", k); }

const QPoly& RecurrenceData::t(std::size_t k) const {
    if (k == 0) throw std::invalid_argument("RecurrenceData: t is indexed from 1");
    return indexed(t_sequence, k - 1, "t", k);
}

RecurrenceData narayana_b_data(std::size_t terms) { return generalized_data(1, 1, 2, terms); }

RecurrenceData generalized_data(int variant, long e, long f, std::size_t terms) {
    RecurrenceData d;
    d.r_sequence.assign(terms, QPoly(1L));
    const QPoly q = QPoly::monomial(1, 1);
    if (variant == 1) {
        if (!(f >= e && e >= 0))
            throw std::invalid_argument("generalized_data variant 1 requires f >= e >= 0");
        d.s_sequence.assign(terms, QPoly(1L) + q);
        if (terms > 0) d.s_sequence[0] = QPoly(f - e) + QPoly::monomial(e, 1);
        d.t_sequence.assign(terms, q);
        if (terms > 0) d.t_sequence[0] = QPoly::monomial(f, 1);
    } else if (variant == 2) {
        if (!(e >= 1 && f >= 1))
            throw std::invalid_argument("generalized_data variant 2 requires e >= 1 and f >= 1");
        d.s_sequence.assign(terms, QPoly(1L) + QPoly::monomial(e, 1));
        if (terms > 0) d.s_sequence[0] = QPoly(f - 1) + QPoly::monomial(e, 1);
        d.t_sequence.assign(terms, QPoly::monomial(e, 1));
        if (terms > 0) d.t_sequence[0] = QPoly::monomial(e * f, 1);
    } else {
        throw std::invalid_argument("generalized_data: variant must be 1 or 2");
    }
    return d;
}

PolyMatrix cs_matrix(const RecurrenceData& data, std::size_t order) {
    PolyMatrix c(order + 1, order + 1);
    c.at(0, 0) = QPoly(1L);
    for (std::size_t n = 1; n <= order; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            QPoly acc;
            if (k >= 1) acc += data.r(k - 1) * c.at(n - 1, k - 1);
            if (k <= n - 1) acc += data.s(k) * c.at(n - 1, k);
            if (k + 1 <= n - 1) acc += data.t(k + 1) * c.at(n - 1, k + 1);
            c.at(n, k) = std::move(acc);
        }
    return c;
}

PolyMatrix coefficient_matrix(const RecurrenceData& data, std::size_t order) {
    PolyMatrix l(order + 2, order + 2);
    l.at(0, 0) = QPoly(1L);
    for (std::size_t i = 1; i <= order + 1; ++i) {
        l.at(i, i) = data.r(i - 1);
        l.at(i, i - 1) = data.s(i - 1);
        if (i >= 2) l.at(i, i - 2) = data.t(i - 1);
    }
    return l;
}

PolyMatrix hankel(std::size_t n) {
    std::vector<QPoly> w(2 * n + 1);
    for (std::size_t m = 0; m <= 2 * n; ++m) w[m] = narayana_b(m);
    PolyMatrix h(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) h.at(i, j) = w[i + j];
    return h;
}

PolyMatrix hankel(const RecurrenceData& data, std::size_t n) {
    PolyMatrix c = cs_matrix(data, 2 * n);
    PolyMatrix h(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) h.at(i, j) = c.at(i + j, 0);
    return h;
}

PolyMatrix t_diagonal(const RecurrenceData& data, std::size_t n) {
    PolyMatrix t(n + 1, n + 1);
    QPoly running(1L);
    t.at(0, 0) = running;
    for (std::size_t k = 1; k <= n; ++k) {
        running = running * data.t(k);
        t.at(k, k) = running;
    }
    return t;
}

}  // namespace tpv
