#pragma once

#include <cstddef>
#include <vector>

#include "tpverify/polymat.hpp"
#include "tpverify/qpoly.hpp"
#include "tpverify/verifier.hpp"

namespace tpv {

/// Weakly decreasing positive parts; the empty partition has size 0.
using Partition = std::vector<int>;

/// All partitions of k in reverse-lexicographic order, (k) first and
/// (1,...,1) last.  k must be positive.
std::vector<Partition> partitions(int k);

/// Irreducible symmetric-group character chi^lambda evaluated on the
/// conjugacy class with cycle type mu (border-strip recursion).
long character(const Partition& lambda, const Partition& mu);

/// Full character table of the symmetric group on k letters; rows and
/// columns are indexed by partitions(k).
class CharacterTable {
  public:
    explicit CharacterTable(int k);

    int k() const { return k_; }
    const std::vector<Partition>& classes() const { return parts_; }
    long value(std::size_t lambda_idx, std::size_t mu_idx) const;
    long value(const Partition& lambda, const Partition& mu) const;

  private:
    std::size_t index_of(const Partition& p) const;

    int k_ = 0;
    std::vector<Partition> parts_;
    std::vector<std::vector<long>> table_;
};

inline constexpr std::size_t kImmanantCap = 7;

/// Sum of diagonal products over each conjugacy class of permutations,
/// indexed like partitions(k): one pass over all k! permutations serves
/// every character weighting of the same matrix.
std::vector<QPoly> class_diagonal_sums(const PolyMatrix& m);

/// Character-weighted permutation expansion of a square matrix of
/// order |lambda| (order capped at kImmanantCap).
QPoly immanant(const PolyMatrix& m, const Partition& lambda);

/// q-nonnegativity of every immanant of every square submatrix of the
/// order-n Hankel matrix up to order kmax.
Certificate verify_conjecture(std::size_t n, std::size_t kmax, const RunOptions& opts = {});

}  // namespace tpv
