#include "rk3/polytope.hpp"

#include "rk3/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rk3 {

namespace {

int rank_of(const IntMat& m) {
  HermiteForm hf = hermite_normal_form(m);
  int r = 0;
  for (Eigen::Index i = 0; i < hf.h.rows(); ++i) {
    bool nonzero = false;
    for (Eigen::Index j = 0; j < hf.h.cols(); ++j)
      if (hf.h(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++r;
  }
  return r;
}

/// Rank of the difference lattice of a point set (affine dimension).
int affine_rank(const std::vector<IntVec>& pts) {
  if (pts.size() <= 1) return 0;
  IntMat d(static_cast<Eigen::Index>(pts.size() - 1), pts.front().size());
  for (size_t i = 1; i < pts.size(); ++i) d.row(static_cast<Eigen::Index>(i - 1)) = (pts[i] - pts[0]).transpose();
  return rank_of(d);
}

bool facet_less(const Facet& a, const Facet& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}

/// All index combinations of size k out of n, visited in lexicographic order.
template <typename F>
void for_each_combination(int n, int k, F&& fn) {
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
  }
}

}  // namespace

bool LatticePolytope::contains(const IntVec& x) const {
  for (const Facet& f : facets_)
    if (f.normal.dot(x) < -f.offset) return false;
  return true;
}

LatticePolytope convex_hull(const std::vector<IntVec>& points, int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("convex_hull: dimension must be 1..4");
  std::vector<IntVec> pts;
  for (const IntVec& p : points) {
    if (p.size() != k) throw std::invalid_argument("convex_hull: point dimension mismatch");
    pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end(), VecLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (affine_rank(pts) != k)
    throw std::invalid_argument("convex_hull: input does not affinely span dimension " +
                                std::to_string(k));

  const int n = static_cast<int>(pts.size());

  // Every facet hyperplane is spanned by k affinely independent input points.
  std::vector<Facet> facets;
  std::set<std::string> seen;
  for_each_combination(n, k, [&](const std::vector<int>& idx) {
    IntMat diffs(k - 1, k);
    for (int i = 1; i < k; ++i)
      diffs.row(i - 1) = (pts[static_cast<size_t>(idx[static_cast<size_t>(i)])] -
                          pts[static_cast<size_t>(idx[0])])
                             .transpose();
    if (k > 1 && rank_of(diffs) != k - 1) return;
    IntMat ker = kernel_basis(diffs);
    if (ker.rows() != 1) return;
    IntVec normal = ker.row(0).transpose();
    Int s0 = normal.dot(pts[static_cast<size_t>(idx[0])]);
    bool has_below = false, has_above = false;
    for (const IntVec& p : pts) {
      Int s = normal.dot(p);
      if (s < s0) has_below = true;
      if (s > s0) has_above = true;
      if (has_below && has_above) return;  // not supporting
    }
    if (has_below) {
      normal = -normal;
      s0 = -s0;
    }
    Facet f{normal, -s0};
    std::string key = vec_str(f.normal) + "|" + f.offset.get_str();
    if (seen.insert(key).second) facets.push_back(std::move(f));
  });

  // Vertices: points whose active facet normals span the whole space.
  std::vector<IntVec> verts;
  for (const IntVec& p : pts) {
    std::vector<IntVec> active;
    for (const Facet& f : facets)
      if (f.normal.dot(p) == -f.offset) active.push_back(f.normal);
    if (static_cast<int>(active.size()) < k) continue;
    IntMat a(static_cast<Eigen::Index>(active.size()), k);
    for (size_t i = 0; i < active.size(); ++i) a.row(static_cast<Eigen::Index>(i)) = active[i].transpose();
    if (rank_of(a) == k) verts.push_back(p);
  }

  std::sort(facets.begin(), facets.end(), facet_less);
  LatticePolytope poly;
  poly.dim_ = k;
  poly.vertices_ = from_columns(verts);
  poly.facets_ = std::move(facets);
  return poly;
}

bool is_reflexive(const LatticePolytope& p) {
  if (p.facets().empty()) return false;
  for (const Facet& f : p.facets())
    if (f.offset != 1) return false;
  return true;
}

LatticePolytope polar(const LatticePolytope& p) {
  if (!is_reflexive(p)) throw std::invalid_argument("polar: polytope is not reflexive");
  std::vector<IntVec> normals;
  normals.reserve(p.facets().size());
  for (const Facet& f : p.facets()) normals.push_back(f.normal);
  return convex_hull(normals, p.dim());
}

std::vector<IntVec> lattice_points(const LatticePolytope& p) {
  const int k = p.dim();
  const IntMat& v = p.vertex_matrix();
  IntVec lo(k), hi(k);
  for (int i = 0; i < k; ++i) {
    lo(i) = v(i, 0);
    hi(i) = v(i, 0);
    for (Eigen::Index j = 1; j < v.cols(); ++j) {
      if (v(i, j) < lo(i)) lo(i) = v(i, j);
      if (v(i, j) > hi(i)) hi(i) = v(i, j);
    }
  }
  std::vector<IntVec> out;
  IntVec x(k);
  auto scan = [&](auto&& self, int coord) -> void {
    if (coord == k) {
      if (p.contains(x)) out.push_back(x);
      return;
    }
    for (Int c = lo(coord); c <= hi(coord); ++c) {
      x(coord) = c;
      self(self, coord + 1);
    }
  };
  scan(scan, 0);
  std::sort(out.begin(), out.end(), VecLess{});
  return out;
}

FaceLattice face_lattice(const LatticePolytope& p) {
  const int k = p.dim();
  const auto verts = p.vertices();
  const auto& facets = p.facets();
  const int m = static_cast<int>(facets.size());

  std::vector<std::vector<int>> facet_sets(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    for (size_t j = 0; j < verts.size(); ++j)
      if (facets[static_cast<size_t>(i)].normal.dot(verts[j]) == -facets[static_cast<size_t>(i)].offset)
        facet_sets[static_cast<size_t>(i)].push_back(static_cast<int>(j));

  // Proper faces are exactly the intersections of facet vertex sets; close
  // the facet sets under intersection with a worklist.
  std::set<std::vector<int>> sets(facet_sets.begin(), facet_sets.end());
  std::vector<std::vector<int>> work(sets.begin(), sets.end());
  while (!work.empty()) {
    std::vector<int> t = std::move(work.back());
    work.pop_back();
    for (const auto& f : facet_sets) {
      std::vector<int> inter;
      std::set_intersection(t.begin(), t.end(), f.begin(), f.end(), std::back_inserter(inter));
      if (inter.empty() || inter == t) continue;
      if (sets.insert(inter).second) work.push_back(std::move(inter));
    }
  }

  const auto pts = lattice_points(p);
  std::vector<std::vector<int>> tight(pts.size());
  for (size_t x = 0; x < pts.size(); ++x)
    for (int i = 0; i < m; ++i)
      if (facets[static_cast<size_t>(i)].normal.dot(pts[x]) == -facets[static_cast<size_t>(i)].offset)
        tight[x].push_back(i);

  FaceLattice fl;
  fl.by_dim.assign(static_cast<size_t>(k), {});
  for (const auto& t : sets) {
    Face face;
    face.vertex_indices = t;
    std::vector<IntVec> fverts;
    for (int vi : t) fverts.push_back(verts[static_cast<size_t>(vi)]);
    face.dim = affine_rank(fverts);
    for (int i = 0; i < m; ++i) {
      if (std::includes(facet_sets[static_cast<size_t>(i)].begin(), facet_sets[static_cast<size_t>(i)].end(),
                        t.begin(), t.end()))
        face.active_facets.push_back(i);
    }
    for (size_t x = 0; x < pts.size(); ++x) {
      if (std::includes(tight[x].begin(), tight[x].end(), face.active_facets.begin(),
                        face.active_facets.end())) {
        face.points.push_back(pts[x]);
        if (tight[x] == face.active_facets) ++face.interior_count;
      }
    }
    fl.by_dim[static_cast<size_t>(face.dim)].push_back(std::move(face));
  }
  for (auto& level : fl.by_dim)
    std::sort(level.begin(), level.end(),
              [](const Face& a, const Face& b) { return a.vertex_indices < b.vertex_indices; });

  fl.parents.assign(static_cast<size_t>(k), {});
  for (int d = 0; d + 1 < k; ++d) {
    auto& lower = fl.by_dim[static_cast<size_t>(d)];
    auto& upper = fl.by_dim[static_cast<size_t>(d + 1)];
    fl.parents[static_cast<size_t>(d)].resize(lower.size());
    for (size_t i = 0; i < lower.size(); ++i)
      for (size_t j = 0; j < upper.size(); ++j)
        if (std::includes(upper[j].vertex_indices.begin(), upper[j].vertex_indices.end(),
                          lower[i].vertex_indices.begin(), lower[i].vertex_indices.end()))
          fl.parents[static_cast<size_t>(d)][i].push_back(static_cast<int>(j));
  }
  return fl;
}

Face dual_face(const LatticePolytope& p, const Face& f, const LatticePolytope& dual,
               const FaceLattice& dual_faces) {
  const int k = p.dim();
  std::vector<int> dset;
  for (Eigen::Index j = 0; j < dual.vertex_count(); ++j) {
    bool all = true;
    for (int vi : f.vertex_indices) {
      if (p.vertex(vi).dot(dual.vertex(j)) != -1) {
        all = false;
        break;
      }
    }
    if (all) dset.push_back(static_cast<int>(j));
  }
  const int dd = k - 1 - f.dim;
  for (const Face& g : dual_faces.faces_of_dim(dd))
    if (g.vertex_indices == dset) return g;
  throw std::logic_error("dual_face: no matching face in the dual polytope");
}

Face dual_face(const LatticePolytope& p, const Face& f) {
  LatticePolytope q = polar(p);
  FaceLattice ql = face_lattice(q);
  return dual_face(p, f, q, ql);
}

}  // namespace rk3
