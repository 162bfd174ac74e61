#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace tpv {

/// Polynomial in one variable q with arbitrary-precision integer
/// coefficients, stored densely in ascending degree order.
///
/// The representation is canonical: no trailing zero coefficients are
/// kept, and the zero polynomial is the empty coefficient vector.  All
/// arithmetic is exact; equality is coefficient-wise.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(long constant);
    explicit QPoly(mpz_class constant);

    /// Builds c * q^degree.
    static QPoly monomial(mpz_class c, std::size_t degree);

    /// Builds a polynomial from ascending coefficients, normalizing away
    /// trailing zeros.
    static QPoly from_coeffs(std::vector<mpz_class> coeffs);

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of q^i (zero beyond the degree).
    const mpz_class& coeff(std::size_t i) const;

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    /// True when every coefficient is >= 0.
    bool is_q_nonnegative() const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& rhs);
    QPoly& operator-=(const QPoly& rhs);

    friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
    friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
    friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
    friend bool operator==(const QPoly& lhs, const QPoly& rhs) = default;

    /// Compact human-readable form, e.g. "1+4q+q^2", "2q", "-1+q", "0".
    std::string to_string() const;

private:
    void trim();

    std::vector<mpz_class> coeffs_;
};

/// Coefficient-wise partial order: f >=_q g iff f - g has only
/// nonnegative coefficients.
bool geq_q(const QPoly& f, const QPoly& g);

}  // namespace tpv
