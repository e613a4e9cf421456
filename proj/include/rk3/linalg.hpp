/**
 * Exact integer linear algebra: fraction-free determinants, Hermite and
 * Smith normal forms with recorded unimodular transforms, saturated kernels,
 * and finite quotients of nested rational lattices.
 *
 * Conventions fixed repo-wide:
 *   - HNF is row-style: U*m = H with H in row echelon form, pivots positive,
 *     entries above each pivot reduced into [0, pivot).
 *   - SNF: U*m*V = S diagonal, nonnegative, d1 | d2 | ...
 *   - Rational lattices are integer basis rows over a single positive
 *     denominator.
 */

#ifndef RK3_LINALG_HPP
#define RK3_LINALG_HPP

#include "rk3/numeric.hpp"

#include <utility>
#include <vector>

namespace rk3 {

struct HermiteForm {
  IntMat h;
  IntMat u;  // unimodular, u*m = h
};

struct SmithForm {
  IntMat s;
  IntMat u;  // unimodular
  IntMat v;  // unimodular, u*m*v = s
};

/// Finite abelian group as its invariant-factor list d1 | d2 | ..., each >= 2.
/// The empty list is the trivial group.
struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;

  bool trivial() const { return invariant_factors.empty(); }
  Int order() const;
  std::string str() const;  // "4 4", or "1" for the trivial group
  bool operator==(const FiniteAbelianGroup&) const = default;
};

/// Full-rank lattice in Q^n: rows of `basis` divided by `den` generate it.
struct RationalLattice {
  IntMat basis;
  Int den = 1;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument for non-square input or dimension > 8.
Int determinant(const IntMat& m);

HermiteForm hermite_normal_form(const IntMat& m);

SmithForm smith_normal_form(const IntMat& m);

/// v / gcd(entries); same direction. Throws on the zero vector.
IntVec primitive(const IntVec& v);

/// Rows form a basis of the saturated right-kernel lattice {x : m*x = 0}.
IntMat kernel_basis(const IntMat& m);

/// Adjugate: adjugate(m) * m = det(m) * I.  Square input, dimension <= 8.
IntMat adjugate(const IntMat& m);

/// Exact inverse of a matrix with determinant +-1; throws otherwise.
IntMat inverse_unimodular(const IntMat& u);

/// Solves a*x = b for square nonsingular a; returns (num, den) with
/// x = num/den, den = det(a).
std::pair<IntVec, Int> solve_cramer(const IntMat& a, const IntVec& b);

/// Invariant factors of sup/sub for nested full-rank lattices sub <= sup.
/// Throws if either basis is rank deficient or if sub is not contained
/// in sup.
FiniteAbelianGroup lattice_quotient(const RationalLattice& sub, const RationalLattice& sup);

}  // namespace rk3

#endif
