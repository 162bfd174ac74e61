#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpverify/constructions.hpp"
#include "tpverify/errors.hpp"
#include "tpverify/netgraph.hpp"
#include "tpverify/polymat.hpp"
#include "tpverify/qpoly.hpp"
#include "tpverify/seqmat.hpp"
#include "tpverify/verifier.hpp"

using namespace tpv;

namespace {

const CheckResult* find_check(const Certificate& cert, const std::string& name,
                              const std::string& inputs) {
    for (const CheckResult& c : cert.checks)
        if (c.name == name && c.inputs == inputs) return &c;
    return nullptr;
}

bool sorted_by_name(const Certificate& cert) {
    return std::is_sorted(cert.checks.begin(), cert.checks.end(),
                          [](const CheckResult& a, const CheckResult& b) {
                              return a.name < b.name;
                          });
}

}  // namespace

TEST_CASE("minor nonnegativity certificate over the order-2 hankel matrix") {
    const Certificate cert = verify_tp(hankel(2), 3, {}, "hankel(2)");
    CHECK(cert.pass);
    CHECK(cert.subject == "q-nonnegativity of minors: hankel(2), max order 3");
    CHECK(cert.checks.size() == 19);  // 9 + 9 + 1 square selections
    CHECK(sorted_by_name(cert));
    const CheckResult* full = find_check(cert, "minor_q_nonnegative", "I=(0,1,2) J=(0,1,2)");
    REQUIRE(full != nullptr);
    CHECK(full->lhs == QPoly::monomial(4, 3));
    CHECK(full->pass);
}

TEST_CASE("constant counterexample matrix fails with the violating minor recorded") {
    PolyMatrix m(2, 2);
    m.at(0, 0) = QPoly(1);
    m.at(0, 1) = QPoly(2);
    m.at(1, 0) = QPoly(3);
    m.at(1, 1) = QPoly(1);
    const Certificate cert = verify_tp(m, 2);
    CHECK(!cert.pass);
    const CheckResult* bad = find_check(cert, "minor_q_nonnegative", "I=(0,1) J=(0,1)");
    REQUIRE(bad != nullptr);
    CHECK(!bad->pass);
    CHECK(bad->lhs == QPoly(-5));
    // the four order-1 minors all pass
    std::size_t passing = 0;
    for (const CheckResult& c : cert.checks) passing += c.pass;
    CHECK(passing == 4);
}

TEST_CASE("flat coefficient matrix minors are q-nonnegative through order 4") {
    const Certificate cert = verify_tp(coefficient_matrix(narayana_b_data(), 4), 4);
    CHECK(cert.pass);
}

TEST_CASE("minor order above the determinant cap is rejected") {
    CHECK_THROWS_AS(verify_tp(hankel(1), 9), OrderCapExceeded);
}

TEST_CASE("block identity certificate for the bottom corner") {
    const std::vector<std::size_t> I = {1};
    const std::vector<std::size_t> J = {0};
    const Certificate cert = verify_thm32(1, I, J);
    CHECK(cert.pass);
    CHECK(cert.checks.size() == 6);
    const CheckResult* fam = find_check(cert, "det_equals_family_sum", "I=(1) J=(0)");
    REQUIRE(fam != nullptr);
    CHECK(fam->lhs == QPoly::from_coeffs({1, 1}));
    const CheckResult* surv = find_check(cert, "det_equals_survivor_sum", "I=(1) J=(0)");
    REQUIRE(surv != nullptr);
    CHECK(surv->rhs == QPoly::from_coeffs({1, 1}));
}

TEST_CASE("block identity certificate for the top-left entry") {
    const std::vector<std::size_t> sel = {0};
    const Certificate cert = verify_thm32(2, sel, sel);
    CHECK(cert.pass);
    const CheckResult* fam = find_check(cert, "det_equals_family_sum", "I=(0) J=(0)");
    REQUIRE(fam != nullptr);
    CHECK(fam->lhs == QPoly(1));
    CHECK(fam->rhs == QPoly(1));
}

TEST_CASE("block identity certificate for a second-order selection") {
    const std::vector<std::size_t> I = {1, 2};
    const std::vector<std::size_t> J = {0, 1};
    const Certificate cert = verify_thm32(2, I, J);
    CHECK(cert.pass);
    const CheckResult* fam = find_check(cert, "det_equals_family_sum", "I=(1,2) J=(0,1)");
    REQUIRE(fam != nullptr);
    CHECK(fam->lhs == QPoly::from_coeffs({1, 0, 1}));
}

TEST_CASE("block identity sweep passes and is deterministic across job counts") {
    RunOptions serial;
    serial.jobs = 1;
    RunOptions parallel;
    parallel.jobs = 4;
    const Certificate a = verify_thm32_sweep(2, 3, serial);
    const Certificate b = verify_thm32_sweep(2, 3, parallel);
    CHECK(a.pass);
    CHECK(a.checks.size() == 6 * (16 + 36 + 16));
    CHECK(sorted_by_name(a));
    CHECK(a.checks == b.checks);
    CHECK(a.subject == b.subject);
    CHECK(a.pass == b.pass);
}

TEST_CASE("hankel identity certificates match the known determinants") {
    const std::vector<std::size_t> pair = {0, 1};
    const Certificate h1 = verify_main(1, pair, pair);
    CHECK(h1.pass);
    const CheckResult* d1 = find_check(h1, "det_equals_family_sum", "I=(0,1) J=(0,1)");
    REQUIRE(d1 != nullptr);
    CHECK(d1->lhs == QPoly::monomial(2, 1));

    const std::vector<std::size_t> zero = {0};
    const Certificate h0 = verify_main(0, zero, zero);
    CHECK(h0.pass);
    const CheckResult* d0 = find_check(h0, "det_equals_family_sum", "I=(0) J=(0)");
    REQUIRE(d0 != nullptr);
    CHECK(d0->lhs == QPoly(1));

    const std::vector<std::size_t> triple = {0, 1, 2};
    const Certificate h2 = verify_main(2, triple, triple);
    CHECK(h2.pass);
    const CheckResult* d2 = find_check(h2, "det_equals_family_sum", "I=(0,1,2) J=(0,1,2)");
    REQUIRE(d2 != nullptr);
    CHECK(d2->lhs == QPoly::monomial(4, 3));
}

TEST_CASE("hankel identity sweep passes for orders up to two") {
    const Certificate cert = verify_main_sweep(2, 3);
    CHECK(cert.pass);
    CHECK(cert.checks.size() == 6 * (9 + 9 + 1));
}

TEST_CASE("two-parameter certification reproduces the standard weights at (1,2)") {
    const Certificate cert = verify_thm43(1, 1, 2, 2);
    CHECK(cert.pass);
    const std::string params = "case=1 e=1 f=2 n=2";
    const CheckResult* fid = find_check(cert, "hankel_fidelity", params);
    REQUIRE(fid != nullptr);
    CHECK(fid->pass);
    const CheckResult* fact = find_check(cert, "triple_factorization", params);
    REQUIRE(fact != nullptr);
    CHECK(fact->pass);
    const CheckResult* top = find_check(cert, "minor_q_nonnegative", "I=(0,1,2) J=(0,1,2)");
    REQUIRE(top != nullptr);
    CHECK(top->lhs == QPoly::monomial(4, 3));
}

TEST_CASE("two-parameter certification handles degenerate and second-case weights") {
    CHECK(verify_thm43(1, 0, 1, 2).pass);
    CHECK(verify_thm43(2, 2, 3, 2).pass);
    CHECK(verify_thm43(2, 1, 1, 1).pass);
}

TEST_CASE("two-parameter constraint violations are rejected") {
    CHECK_THROWS_AS(verify_thm43(1, 3, 2, 2), std::invalid_argument);  // needs f >= e
    CHECK_THROWS_AS(verify_thm43(2, 0, 1, 2), std::invalid_argument);  // needs e >= 1
    CHECK_THROWS_AS(verify_thm43(3, 1, 1, 2), std::invalid_argument);  // no such case
}

TEST_CASE("selection validation in certificates") {
    const std::vector<std::size_t> I = {0, 1};
    const std::vector<std::size_t> J = {1, 0};
    CHECK_THROWS_AS(verify_thm32(1, I, J), std::invalid_argument);
    const std::vector<std::size_t> beyond = {0, 2};
    const std::vector<std::size_t> ok = {0, 1};
    CHECK_THROWS_AS(verify_main(1, beyond, ok), std::invalid_argument);  // index 2 > n
}

TEST_CASE("endpoint compatibility on the glued network and a crossing counterexample") {
    const SegmentedNetwork seg = build_h(1);
    CHECK(verify_compatibility(seg.ported.net, seg.ported.sources, seg.ported.sinks));

    const std::vector<VertexId> single = {seg.ported.sources[0]};
    CHECK(verify_compatibility(seg.ported.net, single, single));

    NetworkBuilder builder;
    const VertexId a1{VertexKind::P, 0, 0}, a2{VertexKind::P, 1, 0};
    const VertexId b1{VertexKind::P, 0, 1}, b2{VertexKind::P, 1, 1};
    builder.add_vertex(a1, 0, 0);
    builder.add_vertex(a2, 1, 0);
    builder.add_vertex(b1, 0, -1);
    builder.add_vertex(b2, 1, -1);
    builder.add_arc(a1, a2, QPoly(1));
    builder.add_arc(b1, b2, QPoly(1));
    const Network rails = builder.finish();
    const std::vector<VertexId> U = {a1, b1};
    const std::vector<VertexId> V = {b2, a2};  // listed in crossing order
    CHECK(!verify_compatibility(rails, U, V));
    const std::vector<VertexId> straight = {a2, b2};
    CHECK(verify_compatibility(rails, U, straight));
}

TEST_CASE("family enumeration budget surfaces as an advisory error") {
    const std::vector<std::size_t> pair = {0, 1};
    RunOptions opts;
    opts.budget = 1;
    CHECK_THROWS_WITH_AS(verify_main(1, pair, pair, opts),
                         doctest::Contains("budget exceeded"), BudgetExceeded);
}

TEST_CASE("parallel kernel keeps serial exception order") {
    std::vector<CheckTask> tasks;
    tasks.push_back({[]() -> std::vector<CheckResult> {
        return {CheckResult{"ok", "", QPoly(1), QPoly(1), true}};
    }});
    tasks.push_back({[]() -> std::vector<CheckResult> {
        throw std::runtime_error("first failure");
    }});
    tasks.push_back({[]() -> std::vector<CheckResult> {
        throw std::runtime_error("second failure");
    }});
    CHECK_THROWS_WITH_AS(run_checks_serial(tasks), "first failure", std::runtime_error);
    CHECK_THROWS_WITH_AS(run_checks_parallel(tasks, 4), "first failure", std::runtime_error);
}

TEST_CASE("serial and parallel kernels produce identical results") {
    std::vector<CheckTask> tasks;
    for (int i = 0; i < 16; ++i) {
        tasks.push_back({[i]() -> std::vector<CheckResult> {
            const QPoly v = QPoly::monomial(i, static_cast<std::size_t>(i % 4));
            return {CheckResult{"value", "i=" + std::to_string(i), v, v, true}};
        }});
    }
    CHECK(run_checks_serial(tasks) == run_checks_parallel(tasks, 3));
}
