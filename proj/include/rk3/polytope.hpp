/**
 * Lattice polytopes in dimension 1..4: exact convex hulls, facet data,
 * lattice-point enumeration, face lattices with relative-interior counts,
 * polar duality and face duality for reflexive polytopes.
 *
 * Facets are stored as inward primitive normals with a separate offset:
 * x is in the polytope iff <normal, x> >= -offset for every facet.
 */

#ifndef RK3_POLYTOPE_HPP
#define RK3_POLYTOPE_HPP

#include "rk3/numeric.hpp"

#include <vector>

namespace rk3 {

struct Facet {
  IntVec normal;  // primitive, inward
  Int offset;     // <normal, x> >= -offset

  bool operator==(const Facet&) const = default;
};

/// Full-dimensional lattice polytope given by its extreme points and the
/// complete irredundant facet list.  Immutable value type; construct through
/// convex_hull().
class LatticePolytope {
 public:
  LatticePolytope() = default;

  int dim() const { return dim_; }
  Eigen::Index vertex_count() const { return vertices_.cols(); }
  /// k x n matrix, columns are the vertices in lexicographic order.
  const IntMat& vertex_matrix() const { return vertices_; }
  IntVec vertex(Eigen::Index i) const { return vertices_.col(i); }
  std::vector<IntVec> vertices() const { return columns_of(vertices_); }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const IntVec& x) const;
  bool operator==(const LatticePolytope& other) const {
    return dim_ == other.dim_ && vertices_ == other.vertices_;
  }

 private:
  friend LatticePolytope convex_hull(const std::vector<IntVec>&, int);
  int dim_ = 0;
  IntMat vertices_;
  std::vector<Facet> facets_;
};

/// Proper face of a polytope; identified by its (sorted) vertex index set.
struct Face {
  int dim = 0;
  std::vector<int> vertex_indices;
  std::vector<int> active_facets;   // facets containing the face
  std::vector<IntVec> points;       // all lattice points on the face
  long interior_count = 0;          // l*: points in the relative interior
};

/// All proper faces grouped by dimension 0..k-1, with containment links
/// between consecutive dimensions.
struct FaceLattice {
  std::vector<std::vector<Face>> by_dim;
  /// parents[d][i] = indices into by_dim[d+1] of the faces containing
  /// by_dim[d][i]; empty for d = k-1.
  std::vector<std::vector<std::vector<int>>> parents;

  const std::vector<Face>& faces_of_dim(int d) const { return by_dim.at(static_cast<size_t>(d)); }
};

/// Hull of an integer point set affinely spanning dimension k (k <= 4).
/// Throws std::invalid_argument on degenerate input.
LatticePolytope convex_hull(const std::vector<IntVec>& points, int k);

/// True iff the origin is strictly interior and every facet offset is 1.
bool is_reflexive(const LatticePolytope& p);

/// Polar dual of a reflexive polytope: vertices are the facet normals.
/// Throws std::invalid_argument if p is not reflexive.
LatticePolytope polar(const LatticePolytope& p);

/// All lattice points of p, lexicographically sorted.
std::vector<IntVec> lattice_points(const LatticePolytope& p);

FaceLattice face_lattice(const LatticePolytope& p);

/// The face {m in polar(p) : <v, m> = -1 for all vertices v of f}.
/// dim f + dim dual = k - 1.  The overload taking the precomputed dual
/// polytope and its face lattice avoids recomputation in batch loops.
Face dual_face(const LatticePolytope& p, const Face& f);
Face dual_face(const LatticePolytope& p, const Face& f, const LatticePolytope& dual,
               const FaceLattice& dual_faces);

}  // namespace rk3

#endif
