#include "tpverify/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "tpverify/constructions.hpp"
#include "tpverify/errors.hpp"
#include "tpverify/involution.hpp"
#include "tpverify/seqmat.hpp"

namespace tpv {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt_indices(std::span<const std::size_t> idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(idx[i]);
    }
    return s + ")";
}

std::string fmt_selection(std::span<const std::size_t> I, std::span<const std::size_t> J) {
    return "I=" + fmt_indices(I) + " J=" + fmt_indices(J);
}

std::vector<std::vector<std::size_t>> ascending_selections(std::size_t limit, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = next; v <= limit; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

void validate_selection(std::span<const std::size_t> I, std::span<const std::size_t> J,
                        std::size_t max_index, std::size_t det_cap) {
    if (I.size() != J.size())
        throw std::invalid_argument("row and column selections differ in size");
    if (I.size() > det_cap) throw OrderCapExceeded("selection order exceeds the determinant cap");
    for (std::size_t c = 0; c < I.size(); ++c) {
        if (I[c] > max_index || J[c] > max_index)
            throw std::invalid_argument("selection index out of range");
        if (c > 0 && (I[c] <= I[c - 1] || J[c] <= J[c - 1]))
            throw std::invalid_argument("selections must be strictly ascending");
    }
}

std::string render_family(const Network& net, const PathFamily& fam) {
    std::string s;
    for (std::size_t c = 0; c < fam.paths.size(); ++c) {
        if (c) s += " | ";
        const Path& p = fam.paths[c];
        s += to_string(net.vertex(p.source).id);
        for (const int aid : p.arcs) s += "->" + to_string(net.vertex(net.arc(aid).head).id);
    }
    return s;
}

/// Streamed involution audit over every vertex-disjoint family of a
/// selection: accumulates the signed sums and the law predicates,
/// remembering the first violating family for the certificate.
struct InvolutionOutcome {
    QPoly family_sum;
    QPoly survivor_sum;
    bool survivors_nonnegative = true;
    bool involutive = true;
    bool sign_reversing = true;
    bool tag_pairing = true;
    std::string witness;  // first law violation, if any

    bool laws_hold() const {
        return survivors_nonnegative && involutive && sign_reversing && tag_pairing;
    }
};

InvolutionOutcome involution_outcome(
    const Network& net, std::span<const VertexId> U, std::span<const VertexId> V,
    const std::function<PropertyTag(const PathFamily&)>& classify,
    const std::function<PathFamily(const PathFamily&)>& phi, std::size_t budget) {
    InvolutionOutcome out;
    const auto flag = [&](bool& law, bool ok, const PathFamily& fam) {
        if (ok || !law) return;
        law = false;
        if (out.witness.empty()) out.witness = render_family(net, fam);
    };
    visit_families(
        net, U, V,
        [&](const PathFamily& f) {
            const QPoly w = family_weight(net, f);
            out.family_sum += w;
            const PropertyTag tag = classify(f);
            const PathFamily g = phi(f);
            if (tag.kind == PropertyKind::none) {
                out.survivor_sum += w;
                flag(out.involutive, g == f, f);
                flag(out.survivors_nonnegative, w.is_q_nonnegative(), f);
                return;
            }
            flag(out.involutive, !(g == f) && phi(g) == f, f);
            flag(out.sign_reversing, family_weight(net, g) == -w, f);
            const PropertyTag gt = classify(g);
            const bool paired = gt.kind != PropertyKind::none && gt.segment == tag.segment &&
                                gt.mirrored == tag.mirrored &&
                                ((gt.kind == PropertyKind::p1) != (tag.kind == PropertyKind::p1));
            flag(out.tag_pairing, paired, f);
        },
        budget);
    return out;
}

std::vector<CheckResult> identity_checks(const std::string& inputs, const QPoly& algebraic,
                                         const InvolutionOutcome& o) {
    const QPoly one(1);
    const auto boolean = [&](std::string name, bool ok) {
        std::string where = inputs;
        if (!ok && !o.witness.empty()) where += " witness: " + o.witness;
        return CheckResult{std::move(name), std::move(where), QPoly(ok ? 1 : 0), one, ok};
    };
    std::vector<CheckResult> checks;
    checks.push_back({"det_equals_family_sum", inputs, algebraic, o.family_sum,
                      algebraic == o.family_sum});
    checks.push_back({"det_equals_survivor_sum", inputs, algebraic, o.survivor_sum,
                      algebraic == o.survivor_sum});
    checks.push_back(boolean("survivor_weights_q_nonnegative", o.survivors_nonnegative));
    checks.push_back(boolean("involution_involutive", o.involutive));
    checks.push_back(boolean("involution_sign_reversing", o.sign_reversing));
    checks.push_back(boolean("involution_tag_pairing", o.tag_pairing));
    return checks;
}

/// Shared body of the flat-block identity checks for one selection.
std::vector<CheckResult> block_identity_checks(const PortedNetwork& block,
                                               const PolyMatrix& coeffs, std::size_t n,
                                               const std::vector<std::size_t>& I,
                                               const std::vector<std::size_t>& J,
                                               const RunOptions& opts) {
    std::vector<VertexId> U, V;
    for (const std::size_t i : I) U.push_back(VertexId{VertexKind::P, 0, static_cast<int>(i)});
    for (const std::size_t j : J) V.push_back(VertexId{VertexKind::P, 1, static_cast<int>(j)});
    const QPoly algebraic = det(submatrix(coeffs, I, J), opts.det_cap);
    const LbContext ctx{I, J, n};
    const Network& net = block.net;
    const InvolutionOutcome o = involution_outcome(
        net, U, V, [&](const PathFamily& f) { return classify_lb(net, f, ctx); },
        [&](const PathFamily& f) { return phi_lb(net, f, ctx); }, opts.budget);
    return identity_checks(fmt_selection(I, J), algebraic, o);
}

/// Shared body of the glued-network identity checks for one selection.
std::vector<CheckResult> glued_identity_checks(const SegmentedNetwork& seg,
                                               const PolyMatrix& h,
                                               const std::vector<std::size_t>& I,
                                               const std::vector<std::size_t>& J,
                                               const RunOptions& opts) {
    std::vector<VertexId> U, V;
    for (const std::size_t i : I) U.push_back(seg.ported.sources[i]);
    for (const std::size_t j : J) V.push_back(seg.ported.sinks[j]);
    const QPoly algebraic = det(submatrix(h, I, J), opts.det_cap);
    const Network& net = seg.ported.net;
    try {
        const InvolutionOutcome o = involution_outcome(
            net, U, V, [&](const PathFamily& f) { return classify_h(seg, f); },
            [&](const PathFamily& f) { return phi_h(seg, f); }, opts.budget);
        return identity_checks(fmt_selection(I, J), algebraic, o);
    } catch (const BudgetExceeded&) {
        throw BudgetExceeded("family enumeration budget exceeded at " + fmt_selection(I, J) +
                             "; rerun with a smaller order, a smaller selection, or a larger "
                             "budget");
    }
}

std::vector<CheckResult> minor_nonnegativity_checks(const PolyMatrix& m,
                                                    const std::vector<std::size_t>& I,
                                                    const std::vector<std::size_t>& J,
                                                    std::size_t det_cap) {
    const QPoly d = det(submatrix(m, I, J), det_cap);
    return {CheckResult{"minor_q_nonnegative", fmt_selection(I, J), d, d,
                        d.is_q_nonnegative()}};
}

void append_minor_tasks(std::vector<CheckTask>& tasks, const PolyMatrix& m,
                        std::size_t max_order, std::size_t det_cap) {
    for (std::size_t k = 1; k <= max_order; ++k) {
        for (const auto& I : ascending_selections(m.rows() - 1, k)) {
            for (const auto& J : ascending_selections(m.cols() - 1, k)) {
                tasks.push_back({[&m, I, J, det_cap]() {
                    return minor_nonnegativity_checks(m, I, J, det_cap);
                }});
            }
        }
    }
}

CheckResult matrix_equality_check(std::string name, std::string inputs, const PolyMatrix& a,
                                  const PolyMatrix& b) {
    const bool ok = a == b;
    return {std::move(name), std::move(inputs), QPoly(ok ? 1 : 0), QPoly(1), ok};
}

}  // namespace

Certificate make_certificate(std::string subject, std::vector<CheckResult> checks,
                             std::chrono::steady_clock::time_point start) {
    Certificate cert;
    cert.subject = std::move(subject);
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    cert.pass = std::all_of(checks.begin(), checks.end(),
                            [](const CheckResult& c) { return c.pass; });
    cert.checks = std::move(checks);
    cert.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return cert;
}

std::vector<CheckResult> run_checks_serial(const std::vector<CheckTask>& tasks) {
    std::vector<CheckResult> out;
    for (const CheckTask& task : tasks) {
        std::vector<CheckResult> results = task.run();
        out.insert(out.end(), std::make_move_iterator(results.begin()),
                   std::make_move_iterator(results.end()));
    }
    return out;
}

std::vector<CheckResult> run_checks_parallel(const std::vector<CheckTask>& tasks, int jobs) {
    const std::int64_t count = static_cast<std::int64_t>(tasks.size());
    std::vector<std::vector<CheckResult>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    const int threads = std::max(1, jobs);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            results[static_cast<std::size_t>(i)] = tasks[static_cast<std::size_t>(i)].run();
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const std::exception_ptr& err : errors)
        if (err) std::rethrow_exception(err);
    std::vector<CheckResult> out;
    for (std::vector<CheckResult>& chunk : results)
        out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                   std::make_move_iterator(chunk.end()));
    return out;
}

std::vector<CheckResult> run_checks(const std::vector<CheckTask>& tasks, int jobs) {
    return jobs <= 1 ? run_checks_serial(tasks) : run_checks_parallel(tasks, jobs);
}

Certificate verify_tp(const PolyMatrix& m, std::size_t max_order, const RunOptions& opts,
                      std::string_view label) {
    const auto start = Clock::now();
    if (max_order > opts.det_cap)
        throw OrderCapExceeded("minor order exceeds the determinant cap");
    const std::size_t order = std::min({max_order, m.rows(), m.cols()});
    std::vector<CheckTask> tasks;
    append_minor_tasks(tasks, m, order, opts.det_cap);
    return make_certificate("q-nonnegativity of minors: " + std::string(label) +
                                ", max order " + std::to_string(max_order),
                            run_checks(tasks, opts.jobs), start);
}

Certificate verify_thm32(std::size_t n, std::span<const std::size_t> I,
                         std::span<const std::size_t> J, const RunOptions& opts) {
    const auto start = Clock::now();
    validate_selection(I, J, n + 1, opts.det_cap);
    const PortedNetwork block = build_lb(n);
    const PolyMatrix coeffs = coefficient_matrix(narayana_b_data(), n);
    const std::vector<std::size_t> iv(I.begin(), I.end()), jv(J.begin(), J.end());
    std::vector<CheckTask> tasks;
    tasks.push_back(
        {[&]() { return block_identity_checks(block, coeffs, n, iv, jv, opts); }});
    return make_certificate("block minor identity: n=" + std::to_string(n) + ", " +
                                fmt_selection(I, J),
                            run_checks(tasks, opts.jobs), start);
}

Certificate verify_thm32_sweep(std::size_t n, std::size_t kmax, const RunOptions& opts) {
    const auto start = Clock::now();
    const std::size_t cap = std::min(kmax, n + 2);
    if (cap > opts.det_cap)
        throw OrderCapExceeded("selection order exceeds the determinant cap");
    const PortedNetwork block = build_lb(n);
    const PolyMatrix coeffs = coefficient_matrix(narayana_b_data(), n);
    std::vector<CheckTask> tasks;
    for (std::size_t k = 1; k <= cap; ++k) {
        for (const auto& I : ascending_selections(n + 1, k)) {
            for (const auto& J : ascending_selections(n + 1, k)) {
                tasks.push_back({[&block, &coeffs, n, I, J, &opts]() {
                    return block_identity_checks(block, coeffs, n, I, J, opts);
                }});
            }
        }
    }
    return make_certificate("block minor identities: n=" + std::to_string(n) +
                                ", orders 1.." + std::to_string(cap),
                            run_checks(tasks, opts.jobs), start);
}

Certificate verify_main(std::size_t n, std::span<const std::size_t> I,
                        std::span<const std::size_t> J, const RunOptions& opts) {
    const auto start = Clock::now();
    validate_selection(I, J, n, opts.det_cap);
    const SegmentedNetwork seg = build_h(n);
    const PolyMatrix h = hankel(n);
    const std::vector<std::size_t> iv(I.begin(), I.end()), jv(J.begin(), J.end());
    std::vector<CheckTask> tasks;
    tasks.push_back({[&]() { return glued_identity_checks(seg, h, iv, jv, opts); }});
    return make_certificate("hankel minor identity: n=" + std::to_string(n) + ", " +
                                fmt_selection(I, J),
                            run_checks(tasks, opts.jobs), start);
}

Certificate verify_main_sweep(std::size_t n, std::size_t kmax, const RunOptions& opts) {
    const auto start = Clock::now();
    const std::size_t cap = std::min(kmax, n + 1);
    if (cap > opts.det_cap)
        throw OrderCapExceeded("selection order exceeds the determinant cap");
    const SegmentedNetwork seg = build_h(n);
    const PolyMatrix h = hankel(n);
    std::vector<CheckTask> tasks;
    for (std::size_t k = 1; k <= cap; ++k) {
        for (const auto& I : ascending_selections(n, k)) {
            for (const auto& J : ascending_selections(n, k)) {
                tasks.push_back({[&seg, &h, I, J, &opts]() {
                    return glued_identity_checks(seg, h, I, J, opts);
                }});
            }
        }
    }
    return make_certificate("hankel minor identities: n=" + std::to_string(n) + ", orders 1.." +
                                std::to_string(cap),
                            run_checks(tasks, opts.jobs), start);
}

Certificate verify_thm43(int variant, long e, long f, std::size_t n, const RunOptions& opts) {
    const auto start = Clock::now();
    const RecurrenceData data = generalized_data(variant, e, f);
    const LbWeights w = lb_weights_generalized(variant, e, f);
    const std::string params = "case=" + std::to_string(variant) + " e=" + std::to_string(e) +
                               " f=" + std::to_string(f) + " n=" + std::to_string(n);

    const PortedNetwork block = build_lb(n, w);
    const PolyMatrix coeffs = coefficient_matrix(data, n);
    const SegmentedNetwork seg = build_h(n, w, data);
    const PolyMatrix h = hankel(data, n);

    std::vector<CheckTask> tasks;
    tasks.push_back({[&]() {
        return std::vector<CheckResult>{matrix_equality_check(
            "coefficient_matrix_fidelity", params,
            path_matrix(block.net, block.sources, block.sinks), coeffs)};
    }});
    tasks.push_back({[&]() {
        return std::vector<CheckResult>{matrix_equality_check(
            "hankel_fidelity", params,
            path_matrix(seg.ported.net, seg.ported.sources, seg.ported.sinks), h)};
    }});
    tasks.push_back({[&data, &h, &w, n, &params]() {
        // the order-0 triangular factor degenerates to the 1x1 identity
        const PolyMatrix b = n == 0
                                 ? PolyMatrix::identity(1)
                                 : [&]() {
                                       const PortedNetwork bn = build_b(n, w);
                                       return path_matrix(bn.net, bn.sources, bn.sinks);
                                   }();
        const PolyMatrix product = b * t_diagonal(data, n) * transpose(b);
        return std::vector<CheckResult>{
            matrix_equality_check("triple_factorization", params, product, h)};
    }});
    for (std::size_t k = 1; k <= n + 1; ++k) {
        for (const auto& I : ascending_selections(n, k)) {
            for (const auto& J : ascending_selections(n, k)) {
                tasks.push_back({[&seg, &h, I, J, &opts]() {
                    return glued_identity_checks(seg, h, I, J, opts);
                }});
            }
        }
    }
    append_minor_tasks(tasks, h, n + 1, opts.det_cap);
    return make_certificate("two-parameter certification: " + params,
                            run_checks(tasks, opts.jobs), start);
}

bool verify_compatibility(const Network& net, std::span<const VertexId> U,
                          std::span<const VertexId> V, std::size_t budget) {
    if (U.size() != V.size())
        throw std::invalid_argument("source and sink lists differ in size");
    if (U.size() > 8) throw std::invalid_argument("compatibility check capped at 8 endpoints");
    std::vector<std::size_t> perm(V.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<VertexId> permuted(V.size());
    while (std::next_permutation(perm.begin(), perm.end())) {
        for (std::size_t i = 0; i < perm.size(); ++i) permuted[i] = V[perm[i]];
        if (families_exist(net, U, permuted, budget)) return false;
    }
    return true;
}

}  // namespace tpv
