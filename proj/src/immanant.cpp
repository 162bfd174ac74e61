#include "tpverify/immanant.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "tpverify/errors.hpp"
#include "tpverify/seqmat.hpp"

namespace tpv {

namespace {

void validate_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && p[i] > p[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int partition_sum(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

/// First-column hook encoding of a shape padded to `rows` rows: bit
/// (lambda_i + rows - 1 - i) is set for each row i.  Removing a border
/// strip of length r moves one set bit down by r; its sign is parity of
/// the set bits jumped over.
std::uint32_t beta_mask(const Partition& p, int rows) {
    std::uint32_t mask = 0;
    for (int i = 0; i < rows; ++i) {
        const int part = i < static_cast<int>(p.size()) ? p[i] : 0;
        mask |= std::uint32_t{1} << (part + rows - 1 - i);
    }
    return mask;
}

long strips(std::uint32_t mask, const Partition& mu, std::size_t pos,
            std::unordered_map<std::uint64_t, long>& memo) {
    if (pos == mu.size()) return 1;
    const std::uint64_t key = (std::uint64_t(pos) << 32) | mask;
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = mu[pos];
    long total = 0;
    for (int b = r; b < 32; ++b) {
        if (!(mask & (std::uint32_t{1} << b))) continue;
        if (mask & (std::uint32_t{1} << (b - r))) continue;
        const std::uint32_t between = (std::uint32_t{1} << b) - (std::uint32_t{1} << (b - r + 1));
        const int height = std::popcount(mask & between);
        const std::uint32_t next =
            (mask ^ (std::uint32_t{1} << b)) | (std::uint32_t{1} << (b - r));
        const long sub = strips(next, mu, pos + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(key, total);
    return total;
}

Partition cycle_type(const std::vector<int>& perm) {
    const int k = static_cast<int>(perm.size());
    std::vector<char> seen(perm.size(), 0);
    Partition type;
    for (int i = 0; i < k; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::string fmt_partition(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s + ")";
}

std::string fmt_indices(const std::vector<std::size_t>& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(idx[i]);
    }
    return s + ")";
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

}  // namespace

std::vector<Partition> partitions(int k) {
    if (k < 1) throw std::invalid_argument("partitions: k must be positive");
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

long character(const Partition& lambda, const Partition& mu) {
    validate_partition(lambda);
    validate_partition(mu);
    const int k = partition_sum(lambda);
    if (k != partition_sum(mu))
        throw std::invalid_argument("character: lambda and mu are partitions of different sizes");
    if (k == 0) return 1;
    std::unordered_map<std::uint64_t, long> memo;
    return strips(beta_mask(lambda, k), mu, 0, memo);
}

CharacterTable::CharacterTable(int k) : k_(k), parts_(partitions(k)) {
    table_.resize(parts_.size());
    for (std::size_t l = 0; l < parts_.size(); ++l) {
        table_[l].resize(parts_.size());
        for (std::size_t m = 0; m < parts_.size(); ++m)
            table_[l][m] = character(parts_[l], parts_[m]);
    }
}

std::size_t CharacterTable::index_of(const Partition& p) const {
    const auto it = std::find(parts_.begin(), parts_.end(), p);
    if (it == parts_.end())
        throw std::invalid_argument("character table: not a partition of " + std::to_string(k_));
    return static_cast<std::size_t>(it - parts_.begin());
}

long CharacterTable::value(std::size_t lambda_idx, std::size_t mu_idx) const {
    return table_.at(lambda_idx).at(mu_idx);
}

long CharacterTable::value(const Partition& lambda, const Partition& mu) const {
    return table_[index_of(lambda)][index_of(mu)];
}

std::vector<QPoly> class_diagonal_sums(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("class sums need a square matrix");
    const std::size_t k = m.rows();
    if (k < 1 || k > kImmanantCap)
        throw OrderCapExceeded("matrix order " + std::to_string(k) +
                               " outside the immanant cap");
    const std::vector<Partition> classes = partitions(static_cast<int>(k));
    std::map<Partition, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i], i);

    std::vector<QPoly> sums(classes.size());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        QPoly prod(1);
        for (std::size_t i = 0; i < k; ++i)
            prod = prod * m.at(i, static_cast<std::size_t>(perm[i]));
        sums[index.at(cycle_type(perm))] += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sums;
}

QPoly immanant(const PolyMatrix& m, const Partition& lambda) {
    validate_partition(lambda);
    if (m.rows() != m.cols() || partition_sum(lambda) != static_cast<int>(m.rows()))
        throw std::invalid_argument("immanant: matrix order must equal the partition size");
    const std::vector<QPoly> sums = class_diagonal_sums(m);
    const CharacterTable table(static_cast<int>(m.rows()));
    QPoly acc;
    for (std::size_t c = 0; c < sums.size(); ++c)
        acc += QPoly(table.value(lambda, table.classes()[c])) * sums[c];
    return acc;
}

Certificate verify_conjecture(std::size_t n, std::size_t kmax, const RunOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    if (kmax > std::min(n + 1, kImmanantCap))
        throw OrderCapExceeded("immanant sweep order exceeds min(n+1, " +
                               std::to_string(kImmanantCap) + ")");
    const PolyMatrix h = hankel(n);
    std::vector<CharacterTable> tables;
    tables.reserve(kmax);
    for (std::size_t k = 1; k <= kmax; ++k) tables.emplace_back(static_cast<int>(k));

    std::vector<CheckTask> tasks;
    for (std::size_t k = 1; k <= kmax; ++k) {
        const CharacterTable& table = tables[k - 1];
        for (const auto& I : ascending_selections(n, k)) {
            for (const auto& J : ascending_selections(n, k)) {
                tasks.push_back({[&h, &table, I, J]() {
                    const PolyMatrix sub = submatrix(h, I, J);
                    const std::vector<QPoly> sums = class_diagonal_sums(sub);
                    const std::string where = "I=" + fmt_indices(I) + " J=" + fmt_indices(J);
                    std::vector<CheckResult> checks;
                    for (std::size_t l = 0; l < table.classes().size(); ++l) {
                        QPoly value;
                        for (std::size_t c = 0; c < sums.size(); ++c)
                            value += QPoly(table.value(l, c)) * sums[c];
                        checks.push_back({"immanant_q_nonnegative",
                                          where + " lambda=" + fmt_partition(table.classes()[l]),
                                          value, value, value.is_q_nonnegative()});
                    }
                    return checks;
                }});
            }
        }
    }
    return make_certificate("immanant nonnegativity: hankel(" + std::to_string(n) +
                                "), orders 1.." + std::to_string(kmax),
                            run_checks(tasks, opts.jobs), start);
}

}  // namespace tpv
