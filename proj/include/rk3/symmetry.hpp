/**
 * Polytope symmetry: automorphism groups inside GL(k,Z), orientation-
 * preserving subgroups, small-group identification, orbits, GL(k,Z)
 * normal forms for equivalence classing, and the exhaustive classification
 * of reflexive polytopes in dimensions 1 and 2.
 */

#ifndef RK3_SYMMETRY_HPP
#define RK3_SYMMETRY_HPP

#include "rk3/polytope.hpp"

#include <map>
#include <string>
#include <vector>

namespace rk3 {

/// Group of unimodular matrices permuting the vertex set of a polytope.
struct PolytopeAutGroup {
  LatticePolytope polytope;
  std::vector<IntMat> elements;  // sorted canonically, identity included

  size_t order() const { return elements.size(); }
};

/// All h in GL(k,Z) with h(vertex set) = vertex set.
PolytopeAutGroup automorphism_group(const LatticePolytope& p);

/// Subgroup of elements with determinant +1.
PolytopeAutGroup orientation_preserving(const PolytopeAutGroup& g);

struct GroupLabel {
  enum class Kind { Trivial, Cyclic, Dihedral, ElementaryAbelian, A4, S4, Other };
  Kind kind = Kind::Trivial;
  long order = 1;
  std::map<long, long> order_histogram;  // element order -> multiplicity

  std::string str() const;
  bool operator==(const GroupLabel& o) const { return kind == o.kind && order == o.order; }
};

/// Isomorphism label decided by group order plus element-order statistics.
/// Requires |g| <= 48.
GroupLabel identify_small_group(const PolytopeAutGroup& g);

/// True iff the vertex set of p is a single orbit under g.
bool is_vertex_transitive(const PolytopeAutGroup& g, const LatticePolytope& p);

/// Orbit partition of a g-stable point set; throws if some image leaves
/// the set.
std::vector<std::vector<IntVec>> orbits(const PolytopeAutGroup& g, const std::vector<IntVec>& pts);

/// Canonical vertex matrix of the GL(k,Z)-equivalence class: the
/// column-major lexicographically minimal row-style HNF of the vertex
/// matrix over all column permutations.
struct NormalForm {
  IntMat matrix;

  std::string key() const { return mat_str(matrix); }
  bool operator==(const NormalForm& o) const { return matrix == o.matrix; }
  bool operator<(const NormalForm& o) const { return lex_less_colmajor(matrix, o.matrix); }
};

NormalForm normal_form(const LatticePolytope& p);

/// The polytope a normal form stands for (its matrix read as vertices).
LatticePolytope polytope_of(const NormalForm& nf);

/// Complete classification of reflexive polytopes in dimension 1 or 2,
/// sorted by normal form.  `box` bounds the vertex search region for
/// dimension 2.  Throws std::invalid_argument for dim >= 3 (3D data comes
/// from ingestion, not enumeration).
std::vector<NormalForm> enumerate_reflexive(int dim, int box = 4);

}  // namespace rk3

#endif
