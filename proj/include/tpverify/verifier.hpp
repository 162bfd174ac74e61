#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tpverify/netgraph.hpp"
#include "tpverify/polymat.hpp"
#include "tpverify/qpoly.hpp"

namespace tpv {

/// One verified statement.  Equality checks store the two compared
/// values; predicate checks store the value as lhs and encode the
/// predicate outcome (1 = holds) against rhs = 1.
struct CheckResult {
    std::string name;
    std::string inputs;
    QPoly lhs;
    QPoly rhs;
    bool pass = false;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Deterministic record of a verification run: `pass` iff every check
/// passed; checks are ordered by name, ties kept in input order.  Only
/// elapsed_ms varies between identical runs.
struct Certificate {
    std::string subject;
    std::vector<CheckResult> checks;
    bool pass = false;
    std::int64_t elapsed_ms = 0;
};

struct RunOptions {
    std::size_t budget = default_budget();  // family-extension units per check
    int jobs = 1;                           // worker threads for independent checks
    std::size_t det_cap = kDefaultDetCap;
};

/// Independent unit of verification work producing one or more results.
struct CheckTask {
    std::function<std::vector<CheckResult>()> run;
};

/// Reference implementation: tasks in order, results flattened.
std::vector<CheckResult> run_checks_serial(const std::vector<CheckTask>& tasks);

/// OpenMP kernel: same results and exception behavior as the serial
/// reference (first failing task by index wins).
std::vector<CheckResult> run_checks_parallel(const std::vector<CheckTask>& tasks, int jobs);

/// Dispatches on jobs (<= 1 runs the serial reference).
std::vector<CheckResult> run_checks(const std::vector<CheckTask>& tasks, int jobs);

/// Assembles a certificate: orders checks by name (stable within a
/// name), derives `pass`, and stamps the time elapsed since `start`.
Certificate make_certificate(std::string subject, std::vector<CheckResult> checks,
                             std::chrono::steady_clock::time_point start);

/// q-nonnegativity of every minor of order 1..max_order.
Certificate verify_tp(const PolyMatrix& m, std::size_t max_order, const RunOptions& opts = {},
                      std::string_view label = "matrix");

/// Minor identity on the flat block: algebraic determinant, enumerated
/// family sum, and survivor sum all agree; involution laws hold.
Certificate verify_thm32(std::size_t n, std::span<const std::size_t> I,
                         std::span<const std::size_t> J, const RunOptions& opts = {});
Certificate verify_thm32_sweep(std::size_t n, std::size_t kmax, const RunOptions& opts = {});

/// Same identity on the glued Hankel network.
Certificate verify_main(std::size_t n, std::span<const std::size_t> I,
                        std::span<const std::size_t> J, const RunOptions& opts = {});
Certificate verify_main_sweep(std::size_t n, std::size_t kmax, const RunOptions& opts = {});

/// Two-parameter certification: network/recurrence fidelity, the
/// diagonal factorization, involution laws, and minor nonnegativity.
Certificate verify_thm43(int variant, long e, long f, std::size_t n,
                         const RunOptions& opts = {});

/// True iff no vertex-disjoint family connects U to any non-identity
/// permutation of V.
bool verify_compatibility(const Network& net, std::span<const VertexId> U,
                          std::span<const VertexId> V, std::size_t budget = kDefaultBudget);

}  // namespace tpv
