// Command-line front end: builds the networks, runs the exact
// verification sweeps, prints per-check summaries, and writes JSON
// certificates.  Exit codes: 0 all checks pass, 1 some check failed,
// 2 usage error, 3 budget or order-cap guard tripped.
#include <algorithm>
#include <cctype>
#include <chrono>
#include <iostream>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tpverify/errors.hpp"
#include "tpverify/immanant.hpp"
#include "tpverify/json_io.hpp"

namespace {

using namespace tpv;

// Number of indices in the first "I=(...)" group of a check's inputs;
// used to batch sweep output by minor order.
std::size_t selection_order(const std::string& inputs) {
    const auto pos = inputs.find("I=(");
    if (pos == std::string::npos) return 0;
    std::size_t count = 0;
    bool in_number = false;
    for (std::size_t i = pos + 3; i < inputs.size() && inputs[i] != ')'; ++i) {
        const bool digit = std::isdigit(static_cast<unsigned char>(inputs[i])) != 0;
        if (digit && !in_number) ++count;
        in_number = digit;
    }
    return count;
}

std::string value_text(const CheckResult& check) {
    if (check.lhs == check.rhs) return "value=" + check.lhs.to_string();
    return "lhs=" + check.lhs.to_string() + " rhs=" + check.rhs.to_string();
}

void print_check_line(const CheckResult& check) {
    std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name;
    if (!check.inputs.empty()) std::cout << ' ' << check.inputs;
    std::cout << ": " << value_text(check) << '\n';
}

void print_batch(const std::string& name, std::size_t order,
                 const std::vector<const CheckResult*>& batch) {
    std::size_t failed = 0;
    for (const auto* check : batch) failed += check->pass ? 0 : 1;
    std::cout << (failed == 0 ? "[PASS] " : "[FAIL] ") << name;
    if (order > 0) std::cout << " k=" << order;
    if (failed == 0)
        std::cout << " (" << batch.size() << " checks)\n";
    else
        std::cout << " (" << failed << " of " << batch.size() << " failed)\n";
    std::size_t shown = 0;
    for (const auto* check : batch) {
        if (check->pass || shown == 3) continue;
        std::cout << "       at " << check->inputs << ": " << value_text(*check) << '\n';
        ++shown;
    }
}

void print_certificate(const Certificate& cert) {
    std::cout << cert.subject << '\n';
    if (cert.checks.size() <= 12) {
        for (const auto& check : cert.checks) print_check_line(check);
    } else {
        // Checks arrive sorted by name with input order preserved, so
        // equal (name, order) runs are contiguous.
        std::vector<const CheckResult*> batch;
        std::string name;
        std::size_t order = 0;
        for (const auto& check : cert.checks) {
            const auto k = selection_order(check.inputs);
            if (!batch.empty() && (check.name != name || k != order)) {
                print_batch(name, order, batch);
                batch.clear();
            }
            name = check.name;
            order = k;
            batch.push_back(&check);
        }
        if (!batch.empty()) print_batch(name, order, batch);
    }
    std::size_t failed = 0;
    for (const auto& check : cert.checks) failed += check.pass ? 0 : 1;
    if (cert.pass)
        std::cout << "PASS: all " << cert.checks.size() << " checks (" << cert.elapsed_ms
                  << " ms)\n";
    else
        std::cout << "FAIL: " << failed << " of " << cert.checks.size() << " checks failed ("
                  << cert.elapsed_ms << " ms)\n";
}

int finish(const Certificate& cert, const std::string& out_path) {
    print_certificate(cert);
    if (!out_path.empty()) {
        write_json_file(to_json(cert), out_path);
        std::cout << "certificate written to " << out_path << '\n';
    }
    return cert.pass ? 0 : 1;
}

std::string fmt_positions(std::span<const std::size_t> idx) {
    std::string out = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(idx[i]);
    }
    return out + ")";
}

PortedNetwork pick_network(const std::string& which, std::size_t n) {
    if (which == "lb") return build_lb(n);
    if (which == "b") return build_b(n);
    if (which == "t") return build_t(n);
    return build_h(n).ported;
}

std::vector<VertexId> select_ports(const std::vector<VertexId>& ports,
                                   std::vector<std::size_t> idx, const char* side) {
    if (idx.empty()) {
        idx.resize(ports.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
    }
    std::vector<VertexId> out;
    out.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0 && idx[i] <= idx[i - 1])
            throw std::invalid_argument(std::string(side) + " indices must be strictly ascending");
        if (idx[i] >= ports.size())
            throw std::invalid_argument(std::string(side) + " index " + std::to_string(idx[i]) +
                                        " out of range (have " + std::to_string(ports.size()) +
                                        " ports)");
        out.push_back(ports[idx[i]]);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of the type-B Narayana Hankel family"};
    app.require_subcommand(1);

    std::size_t n = 0;
    std::size_t max_order = 0;
    std::size_t kmax = 0;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    int variant = 0;
    long e_param = 0;
    long f_param = 0;
    std::size_t budget = default_budget();
    int jobs = 1;
    std::string out_path;
    std::string which = "h";

    const auto add_common = [&](CLI::App* sub, bool with_budget) {
        if (with_budget)
            sub->add_option("--budget", budget, "family-extension budget per check")
                ->envname("TPVERIFY_BUDGET");
        sub->add_option("--jobs", jobs, "parallel check execution degree")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", out_path, "write the JSON certificate here");
    };
    const auto add_selection = [&](CLI::App* sub) {
        sub->add_option("--rows", rows, "row indices, comma-separated ascending")
            ->delimiter(',');
        sub->add_option("--cols", cols, "column indices, comma-separated ascending")
            ->delimiter(',');
    };

    auto* hankel_cmd =
        app.add_subcommand("hankel", "q-nonnegativity of all Hankel-matrix minors");
    hankel_cmd->add_option("--n", n, "Hankel matrix order parameter")->required();
    hankel_cmd->add_option("--max-order", max_order, "largest minor order (default n+1)");
    add_common(hankel_cmd, false);

    auto* thm32_cmd =
        app.add_subcommand("thm32", "flat-block minor identity and its involution");
    thm32_cmd->add_option("--n", n, "block truncation parameter")->required();
    add_selection(thm32_cmd);
    thm32_cmd->add_option("--kmax", kmax, "sweep cap on the selection order (default full)");
    add_common(thm32_cmd, true);

    auto* main_cmd =
        app.add_subcommand("main", "Hankel minor identity on the glued network");
    main_cmd->add_option("--n", n, "network order parameter")->required();
    add_selection(main_cmd);
    main_cmd->add_option("--kmax", kmax, "sweep cap on the selection order (default full)");
    add_common(main_cmd, true);

    auto* thm43_cmd =
        app.add_subcommand("thm43", "two-parameter weight-family certification");
    thm43_cmd->add_option("--case", variant, "weight family case (1 or 2)")
        ->required()
        ->check(CLI::Range(1, 2));
    thm43_cmd->add_option("--e", e_param, "parameter e")->required();
    thm43_cmd->add_option("--f", f_param, "parameter f")->required();
    thm43_cmd->add_option("--n", n, "network order parameter")->required();
    add_common(thm43_cmd, true);

    auto* imm_cmd =
        app.add_subcommand("immanant", "immanant q-nonnegativity sweep over submatrices");
    imm_cmd->add_option("--n", n, "Hankel matrix order parameter")->required();
    imm_cmd->add_option("--kmax", kmax, "largest submatrix order (default min(n+1, 7))");
    add_common(imm_cmd, false);

    auto* dump_cmd = app.add_subcommand("dump-network", "write a constructed network as JSON");
    dump_cmd->add_option("--which", which, "network to build: lb, b, t, or h")
        ->required()
        ->check(CLI::IsMember({"lb", "b", "t", "h"}));
    dump_cmd->add_option("--n", n, "order parameter")->required();
    dump_cmd->add_option("--out", out_path, "output path (default: standard output)");

    auto* lgv_cmd = app.add_subcommand(
        "lgv-check", "path-matrix determinant vs disjoint-family enumeration");
    lgv_cmd->add_option("--which", which, "network to check: lb, b, t, or h (default h)")
        ->check(CLI::IsMember({"lb", "b", "t", "h"}));
    lgv_cmd->add_option("--n", n, "order parameter")->required();
    add_selection(lgv_cmd);
    add_common(lgv_cmd, true);

    try {
        app.parse(argc, argv);

        RunOptions opts;
        opts.budget = budget;
        opts.jobs = jobs;

        if (app.got_subcommand(hankel_cmd)) {
            const auto order = max_order == 0 ? n + 1 : max_order;
            const auto terms = std::max<std::size_t>(20, 2 * n + 1);
            const auto h = hankel(narayana_b_data(terms), n);
            return finish(verify_tp(h, order, opts, "hankel(" + std::to_string(n) + ")"),
                          out_path);
        }
        if (app.got_subcommand(thm32_cmd) || app.got_subcommand(main_cmd)) {
            const bool flat = app.got_subcommand(thm32_cmd);
            if (rows.empty() != cols.empty())
                throw std::invalid_argument("--rows and --cols must be given together");
            if (!rows.empty()) {
                const auto cert = flat ? verify_thm32(n, rows, cols, opts)
                                       : verify_main(n, rows, cols, opts);
                return finish(cert, out_path);
            }
            const auto full = flat ? n + 2 : n + 1;
            const auto cap = kmax == 0 ? full : kmax;
            const auto cert =
                flat ? verify_thm32_sweep(n, cap, opts) : verify_main_sweep(n, cap, opts);
            return finish(cert, out_path);
        }
        if (app.got_subcommand(thm43_cmd))
            return finish(verify_thm43(variant, e_param, f_param, n, opts), out_path);
        if (app.got_subcommand(imm_cmd)) {
            const auto cap = kmax == 0 ? std::min<std::size_t>(n + 1, kImmanantCap) : kmax;
            return finish(verify_conjecture(n, cap, opts), out_path);
        }
        if (app.got_subcommand(dump_cmd)) {
            const auto j = which == "h" ? to_json(build_h(n)) : to_json(pick_network(which, n).net);
            if (out_path.empty()) {
                std::cout << j.dump(2) << '\n';
            } else {
                write_json_file(j, out_path);
                std::cout << "network written to " << out_path << '\n';
            }
            return 0;
        }
        // lgv-check
        const auto start = std::chrono::steady_clock::now();
        const auto ported = pick_network(which, n);
        const auto U = select_ports(ported.sources, rows, "--rows");
        const auto V = select_ports(ported.sinks, cols, "--cols");
        if (U.size() != V.size())
            throw std::invalid_argument("--rows and --cols must select the same number of ports");
        const auto result = lgv_check(ported.net, U, V, budget);
        std::vector<std::size_t> all(ported.sources.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        const auto row_text = fmt_positions(rows.empty() ? std::span<const std::size_t>(all) : rows);
        all.resize(ported.sinks.size());
        const auto col_text = fmt_positions(cols.empty() ? std::span<const std::size_t>(all) : cols);
        CheckResult check{"det_equals_family_sum", "I=" + row_text + " J=" + col_text,
                          result.lhs, result.rhs, result.equal};
        const auto cert = make_certificate("disjoint-family expansion: " + which +
                                               ", n=" + std::to_string(n),
                                           {check}, start);
        return finish(cert, out_path);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const OrderCapExceeded& e) {
        std::cerr << "order cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
