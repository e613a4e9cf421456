/**
 * Fans from polytopes: face fans, normal fans, and fine simplicial
 * subdivisions whose rays are all nonzero lattice points of the polytope.
 */

#ifndef RK3_FAN_HPP
#define RK3_FAN_HPP

#include "rk3/polytope.hpp"

#include <vector>

namespace rk3 {

/// Strongly convex rational cone; columns of `generators` are the primitive
/// extreme rays, lexicographically sorted.
struct Cone {
  IntMat generators;
  int dim = 0;

  bool operator==(const Cone& o) const { return generators == o.generators; }
};

/// Complete fan, stored as the full set of nonzero cones (closed under
/// faces) plus the ray list.
struct Fan {
  int ambient_dim = 0;
  std::vector<Cone> cones;   // all cones of dim >= 1, canonically sorted
  std::vector<IntVec> rays;  // generators of the 1-cones, sorted

  std::vector<Cone> maximal_cones() const;
  std::vector<Cone> cones_of_dim(int d) const;
};

/// Fan over the faces of a polytope with the origin strictly interior:
/// one (j+1)-cone per j-face.  Throws if the origin is not interior.
Fan face_fan(const LatticePolytope& p);

/// Normal fan of a full-dimensional polytope: one (k-j)-cone per j-face,
/// generated by the inward normals of the facets containing the face.
Fan normal_fan(const LatticePolytope& e);

/// Fine simplicial refinement of face_fan(p) whose rays are exactly the
/// nonzero lattice points of p.  Reflexive p, dimension <= 3 only.
Fan max_projective_subdivision(const LatticePolytope& p);

bool is_simplicial(const Fan& f);
bool is_smooth(const Fan& f);

/// Cone-for-cone equality of two fans.
bool same_fan(const Fan& a, const Fan& b);

}  // namespace rk3

#endif
