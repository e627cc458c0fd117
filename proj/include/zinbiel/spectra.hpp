#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zinbiel/matrix.hpp"
#include "zinbiel/superalgebra.hpp"

namespace zinbiel {

/// Characteristic sequence: descending Jordan-block size partitions of the
/// left multiplication operator on the even part (c0, summing to n) and on
/// the odd part (c1, summing to m). Ordered lexicographically, c0 first.
struct CharSequence {
  std::vector<std::size_t> c0;
  std::vector<std::size_t> c1;

  friend bool operator==(const CharSequence&, const CharSequence&) = default;
  friend bool operator<(const CharSequence& a, const CharSequence& b) {
    if (a.c0 != b.c0) return a.c0 < b.c0;
    return a.c1 < b.c1;
  }
};

/// Matrices of L_x on the even part (n x n, basis e_1..e_n) and on the odd
/// part (m x m, basis f_1..f_m); column j holds the coordinates of x * b_j.
/// Throws std::invalid_argument when x has a nonzero odd part.
std::pair<Matrix, Matrix> left_mult_matrices(const SuperAlgebra& alg, const SuperElement& x);

/// Jordan block sizes of a nilpotent square matrix, recovered from the rank
/// profile (#blocks of size >= k equals rank(M^{k-1}) - rank(M^k)); output
/// descending. Throws std::domain_error when the matrix is not nilpotent.
std::vector<std::size_t> jordan_blocks(const Matrix& m);

/// Characteristic sequence at a specific even element x with x not in Z0^2.
CharSequence char_sequence_at(const SuperAlgebra& alg, const SuperElement& x);

struct CharSequenceScan {
  CharSequence seq;
  SuperElement witness;
  /// True when the scanned maxima of c0 and c1 are attained simultaneously
  /// at the returned witness.
  bool simultaneous;
};

/// Maximum of char_sequence_at over a finite candidate set (basis vectors
/// outside Z0^2, small two-term combinations, then seeded random elements).
/// A certified lower bound for the supremum over all of Z0 \ Z0^2; the
/// witness is the first candidate attaining the maximum. Throws
/// std::domain_error when the even part lies inside Z0^2 (degenerate).
CharSequenceScan characteristic_sequence(const SuperAlgebra& alg, std::uint64_t seed = 0,
                                         std::size_t random_candidates = 200);

enum class FiliformVerdict { yes, no, unknown };

struct FiliformResult {
  FiliformVerdict verdict;
  std::optional<SuperElement> witness;  // present for yes
};

/// Filiform means some single witness x attains c0 = (n-1, 1) and c1 = (m).
/// "no" only with a certificate: either a power-chain upper bound rules the
/// target out, or the scan found a strictly larger c0.
FiliformResult is_filiform(const SuperAlgebra& alg, std::uint64_t seed = 0);

}  // namespace zinbiel
