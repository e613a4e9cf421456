/**
 * Anticanonical hypersurface families in homogeneous coordinates: monomial
 * exponent vectors, symmetry-constrained coefficient classes, finite
 * diagonal (big-torus) symmetry groups acting symplectically, Picard-rank
 * lower bounds from fixed-lattice ranks, and the search for polytopes whose
 * symmetric family is one-parameter.
 */

#ifndef RK3_FAMILIES_HPP
#define RK3_FAMILIES_HPP

#include "rk3/linalg.hpp"
#include "rk3/polytope.hpp"
#include "rk3/symmetry.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rk3 {

/// Monomial prod_j z_j^{<v_j, x> + 1} attached to a dual lattice point x.
struct MonomialExponent {
  IntVec point;      // x in the dual polytope
  IntVec exponents;  // one entry per ray, all >= 0
};

/// Coefficient structure of a symmetry-constrained anticanonical family.
struct FamilySpec {
  LatticePolytope delta;
  std::vector<IntVec> ray_points;                    // nonzero lattice points of delta
  std::vector<std::vector<IntVec>> coefficient_classes;  // partition of the nonzero dual points
  int parameter_count = 0;                           // = number of classes
};

/// Ranks of the fixed-sublattice complement S_G, keyed by invariant factors
/// ("4,4") or by named groups ("A4").  Only externally attested values are
/// shipped; lookups of unknown groups fail loudly.
struct SGRankTable {
  std::map<std::string, long> by_factors;
  std::map<std::string, long> by_name;

  static SGRankTable parse(std::istream& in);
  static SGRankTable load_file(const std::string& path);

  std::optional<long> rank(const FiniteAbelianGroup& g) const;
};

/// One exponent vector per lattice point of polar(delta), in lexicographic
/// point order.  `rays` fixes the coordinate order; every ray must be a
/// nonzero lattice point of delta.
std::vector<MonomialExponent> anticanonical_monomials(const LatticePolytope& delta,
                                                      const std::vector<IntVec>& rays);

/// Coefficient classes = orbits of the nonzero dual lattice points under the
/// dual action of hprime (a subgroup of the automorphism group of delta).
FamilySpec symmetric_family(const LatticePolytope& delta, const PolytopeAutGroup& hprime);

/// Finite group of diagonal coordinate scalings that preserve every monomial
/// of the support up to a common scalar equal to the determinant, modulo the
/// scalings acting trivially on the toric variety.  `support` is a subset of
/// the dual lattice points (each coefficient generic and independent).
FiniteAbelianGroup symplectic_torus_group(const LatticePolytope& delta,
                                          const std::vector<IntVec>& support,
                                          const std::vector<IntVec>& rays);

/// Same, with rays defaulting to all nonzero lattice points of delta.
FiniteAbelianGroup symplectic_torus_group(const LatticePolytope& delta,
                                          const std::vector<IntVec>& support);

/// rho_cor(delta) + rank S_G; throws if the group is not in the table.
long picard_lower_bound(const LatticePolytope& delta, const FiniteAbelianGroup& g,
                        const SGRankTable& table);

struct OneParameterClass {
  NormalForm nf;
  GroupLabel label;
};

/// Classes in the database whose polytope (as the monomial-side polytope)
/// has no lattice points besides vertices and origin and whose orientation-
/// preserving automorphism group is vertex-transitive.
std::vector<OneParameterClass> search_one_parameter(const std::vector<LatticePolytope>& db);

}  // namespace rk3

#endif
