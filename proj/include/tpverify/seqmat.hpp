#pragma once

#include <cstddef>
#include <vector>

#include "tpverify/polymat.hpp"
#include "tpverify/qpoly.hpp"

namespace tpv {

/// n-th row polynomial of the squared-binomial family:
/// sum over k of binom(n,k)^2 q^k.
QPoly narayana_b(std::size_t n);

/// Data (r_k, s_k, t_k) for a three-term lower-triangular recurrence,
/// supplied as explicit finite sequences.  r and s are indexed from 0,
/// t from 1 (t_sequence[i] holds t_{i+1}).  Accessors throw when a
/// requested term is beyond the stored length, so callers always know
/// the sequences are long enough for the matrix order they build.
struct RecurrenceData {
    std::vector<QPoly> r_sequence;
    std::vector<QPoly> s_sequence;
    std::vector<QPoly> t_sequence;

    const QPoly& r(std::size_t k) const;
    const QPoly& s(std::size_t k) const;
    const QPoly& t(std::size_t k) const;  // k >= 1

    friend bool operator==(const RecurrenceData&, const RecurrenceData&) = default;
};

/// Recurrence data with r_k = 1, s_k = 1+q, t_1 = 2q, t_{k>=2} = q,
/// carrying `terms` entries of each sequence.
RecurrenceData narayana_b_data(std::size_t terms = 20);

/// Two-parameter generalization of the recurrence data.
/// variant 1 (requires f >= e >= 0):  s_0 = (f-e) + e q, t_1 = f q,
///   r_k = 1, s_{k>=1} = 1+q, t_{k>=2} = q.
/// variant 2 (requires e, f >= 1):    s_0 = (f-1) + e q, t_1 = e f q,
///   r_k = 1, s_{k>=1} = 1 + e q, t_{k>=2} = e q.
RecurrenceData generalized_data(int variant, long e, long f, std::size_t terms = 20);

/// Lower-triangular matrix (c_{n,k})_{0<=n,k<=order} built from the
/// recurrence c_{n,k} = r_{k-1} c_{n-1,k-1} + s_k c_{n-1,k} + t_{k+1} c_{n-1,k+1}
/// with c_{0,0} = 1 (the k = 0 case drops the r term).
PolyMatrix cs_matrix(const RecurrenceData& data, std::size_t order);

/// Banded square matrix of order `order`+2 whose rows carry the
/// recurrence coefficients: row 0 is (1, 0, ...), row i has t_{i-1} at
/// column i-2, s_{i-1} at i-1, and r_{i-1} at i.
PolyMatrix coefficient_matrix(const RecurrenceData& data, std::size_t order);

/// Hankel matrix (w_{i+j})_{0<=i,j<=n} of the squared-binomial rows.
PolyMatrix hankel(std::size_t n);

/// Hankel matrix of the first column of cs_matrix(data, 2n).
PolyMatrix hankel(const RecurrenceData& data, std::size_t n);

/// Diagonal matrix of the running products of the t sequence:
/// diag(1, t_1, t_1 t_2, ..., t_1 ... t_n), as a full PolyMatrix.
PolyMatrix t_diagonal(const RecurrenceData& data, std::size_t n);

}  // namespace tpv
