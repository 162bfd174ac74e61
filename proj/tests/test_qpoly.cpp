#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "tpverify/qpoly.hpp"

using tpv::QPoly;
using tpv::geq_q;

namespace {

QPoly poly(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return QPoly::from_coeffs(std::move(v));
}

QPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 12);
    std::uniform_int_distribution<long> coef(-1000000, 1000000);
    std::vector<mpz_class> v;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) v.emplace_back(coef(rng));
    return QPoly::from_coeffs(std::move(v));
}

}  // namespace

TEST_CASE("canonical form") {
    CHECK(QPoly{}.is_zero());
    CHECK(QPoly{}.degree() == -1);
    CHECK(QPoly(0L).is_zero());
    CHECK(poly({1, 2, 0, 0}) == poly({1, 2}));
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(poly({1, 2}).degree() == 1);
    CHECK(QPoly::monomial(2, 3) == poly({0, 0, 0, 2}));
    CHECK(QPoly::monomial(0, 5).is_zero());
    CHECK(poly({5}).coeff(0) == 5);
    CHECK(poly({5}).coeff(7) == 0);
}

TEST_CASE("arithmetic examples") {
    CHECK(poly({1, 1}) + poly({-1}) == poly({0, 1}));
    CHECK(poly({1, 1}) * poly({1, 1}) == poly({1, 2, 1}));
    CHECK(QPoly{} * poly({3, 7, 9}) == QPoly{});
    CHECK(-poly({1, -2}) == poly({-1, 2}));
    CHECK(poly({1, 1}) - poly({1, 1}) == QPoly{});
}

// Order-1 Hankel determinant of the squared-binomial row polynomials,
// expanded by hand: 1*(1+4q+q^2) - (1+q)^2 = 2q.
TEST_CASE("direct expansion witness") {
    QPoly w0 = poly({1});
    QPoly w1 = poly({1, 1});
    QPoly w2 = poly({1, 4, 1});
    CHECK(w0 * w2 - w1 * w1 == poly({0, 2}));
    CHECK((w0 * w2 - w1 * w1).is_q_nonnegative());
}

TEST_CASE("q-nonnegativity") {
    CHECK(poly({1, 1}).is_q_nonnegative());
    CHECK(poly({0, 2}).is_q_nonnegative());
    CHECK(QPoly{}.is_q_nonnegative());
    CHECK_FALSE(poly({-1, 1}).is_q_nonnegative());
    CHECK_FALSE(poly({1, 1, -3, 1}).is_q_nonnegative());
}

TEST_CASE("coefficient-wise partial order") {
    CHECK(geq_q(poly({1, 2}), poly({1, 1})));
    CHECK(geq_q(poly({0, 1}), poly({0, 1})));
    CHECK_FALSE(geq_q(poly({1, 1}), poly({1, 2})));
    // Incomparable pair: neither dominates.
    CHECK_FALSE(geq_q(poly({1, 0}), poly({0, 1})));
    CHECK_FALSE(geq_q(poly({0, 1}), poly({1, 0})));

    QPoly w0 = poly({1});
    QPoly w1 = poly({1, 1});
    QPoly w2 = poly({1, 4, 1});
    CHECK(geq_q(w0 * w2, w1 * w1));
    CHECK_FALSE(geq_q(w1 * w1, w0 * w2));
}

TEST_CASE("ring laws on random inputs") {
    std::mt19937_64 rng(20260816);
    for (int iter = 0; iter < 200; ++iter) {
        QPoly a = random_poly(rng);
        QPoly b = random_poly(rng);
        QPoly c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + QPoly{} == a);
        CHECK(a * QPoly(1L) == a);
        CHECK(a - a == QPoly{});
        CHECK(a + (-a) == QPoly{});
    }
}

TEST_CASE("partial order laws on random inputs") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        QPoly a = random_poly(rng);
        QPoly b = random_poly(rng);
        CHECK(geq_q(a, a));
        if (geq_q(a, b) && geq_q(b, a)) CHECK(a == b);
        // Translation invariance: a >= b iff a + c >= b + c.
        QPoly c = random_poly(rng);
        CHECK(geq_q(a, b) == geq_q(a + c, b + c));
    }
}

TEST_CASE("printing") {
    CHECK(QPoly{}.to_string() == "0");
    CHECK(poly({1, 4, 1}).to_string() == "1+4q+q^2");
    CHECK(poly({0, 2}).to_string() == "2q");
    CHECK(poly({-1, 1}).to_string() == "-1+q");
    CHECK(poly({0, 0, -3}).to_string() == "-3q^2");
    CHECK(poly({7}).to_string() == "7");
}
