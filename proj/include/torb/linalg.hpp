/*
  linalg.hpp — exact integer/rational linear algebra.

  Determinants (fraction-free Bareiss), rational inverses, Hermite and
  Smith normal forms with transformation matrices, lattice saturation,
  integer kernels and linear Diophantine solving.  All algorithms are
  deterministic: the SNF pivot is always the minimum-absolute-value
  nonzero entry, ties broken by lowest (row, col).
*/

#ifndef TORB_LINALG_HPP
#define TORB_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "torb/matrix.hpp"

namespace torb {

/// Exact determinant of a square matrix via Bareiss elimination.
Int determinant(const IntMat& a);

/// Inverse over Q; throws SingularMatrixError when det = 0.
RatMat rational_inverse(const IntMat& a);

struct SmithDecomposition {
  IntMat u, d, v;  // u*a*v = d, |det u| = |det v| = 1, d diagonal, d_1 | d_2 | ...

  /// Diagonal of d, including zeros.
  std::vector<Int> diagonal() const;
  /// Nontrivial invariant factors (entries > 1), divisibility chain.
  std::vector<Int> invariant_factors() const;
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMat& a);

struct ColHermite {
  IntMat h, w;  // a*w = h, w unimodular, h in column echelon form
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t rank() const { return pivots.size(); }
};

/// Column-style Hermite form with transformation.  Pivots positive,
/// entries left of a pivot reduced into [0, pivot).
ColHermite hermite_cols(const IntMat& a);

/// Canonical basis (rows, echelon, unique) of the lattice spanned by the
/// rows of `a`.  Zero rows dropped.
IntMat hnf_rows(const IntMat& a);

/// Columns spanning {x : a x = 0}, the full kernel lattice (saturated).
IntMat integer_kernel(const IntMat& a);

/// Basis of span_R(columns of b) ∩ Z^n.  Same rank; throws RankError if the
/// columns are dependent.
IntMat saturate_columns(const IntMat& b);

/// lcm of the denominators of a row of exact rationals; 1 for an all-integer row.
Int lcm_of_denominators(const std::vector<Rat>& row);

/// Canonical b with b·chi = t.  Extended-gcd back-substitution left to right,
/// then b_1 reduced modulo |chi_2|/gcd(chi_1,chi_2) when that modulus exceeds 1.
/// Throws NoSolutionError when gcd(chi) does not divide t.
std::vector<Int> solve_diophantine(const std::vector<Int>& chi, const Int& t);

/// Coordinates of `target` in the row basis `basis_rows` (exact), or nullopt
/// when target is outside the row lattice.
std::optional<std::vector<Int>> coords_in_row_lattice(const IntMat& basis_rows,
                                                      const std::vector<Int>& target);

/// Row lattices equal as sets (compares canonical HNF bases).
bool same_row_lattice(const IntMat& a, const IntMat& b);

/// Rank over Q.
std::size_t rank_rational(const IntMat& a);

bool is_unimodular(const IntMat& a);

/// gcd of the entries is 1 (vector nonzero).
bool is_primitive(const std::vector<Int>& v);

/// v divided by the gcd of its entries; returns the gcd (>= 1).
Int make_primitive(std::vector<Int>& v);

}  // namespace torb

#endif
