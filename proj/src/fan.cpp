#include "rk3/fan.hpp"

#include "rk3/linalg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace rk3 {

namespace {

int rank_of(const IntMat& m) {
  HermiteForm hf = hermite_normal_form(m);
  int r = 0;
  for (Eigen::Index i = 0; i < hf.h.rows(); ++i)
    for (Eigen::Index j = 0; j < hf.h.cols(); ++j)
      if (hf.h(i, j) != 0) {
        ++r;
        break;
      }
  return r;
}

Cone make_cone(std::vector<IntVec> gens) {
  std::sort(gens.begin(), gens.end(), VecLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Cone c;
  c.generators = from_columns(gens);
  c.dim = rank_of(c.generators);
  return c;
}

bool cone_less(const Cone& a, const Cone& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  return lex_less_colmajor(a.generators, b.generators);
}

void finalize(Fan& fan) {
  std::sort(fan.cones.begin(), fan.cones.end(), cone_less);
  fan.cones.erase(std::unique(fan.cones.begin(), fan.cones.end()), fan.cones.end());
  std::set<IntVec, VecLess> rays;
  for (const Cone& c : fan.cones)
    if (c.dim == 1)
      for (Eigen::Index j = 0; j < c.generators.cols(); ++j) rays.insert(c.generators.col(j));
  fan.rays.assign(rays.begin(), rays.end());
}

bool origin_interior(const LatticePolytope& p) {
  for (const Facet& f : p.facets())
    if (f.offset < 1) return false;
  return !p.facets().empty();
}

/// 2D coordinates of facet lattice points in a basis of the facet plane's
/// saturated lattice, used for triangulating 3D facets exactly.
struct PlaneChart {
  IntMat basis;  // 2 rows spanning {x : <n,x> = 0}
  IntVec origin;
  Eigen::Index r0 = 0, r1 = 0;  // rows of basis^T forming an invertible 2x2
  Int det;

  explicit PlaneChart(const IntVec& normal, const IntVec& base_point) : origin(base_point) {
    IntMat n_row(1, normal.size());
    n_row.row(0) = normal.transpose();
    basis = kernel_basis(n_row);
    if (basis.rows() != 2) throw std::logic_error("PlaneChart: facet plane is not 2-dimensional");
    // pick two coordinates where the 2x3 basis has an invertible minor
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = i + 1; j < 3; ++j) {
        Int d = basis(0, i) * basis(1, j) - basis(0, j) * basis(1, i);
        if (d != 0) {
          r0 = i;
          r1 = j;
          det = d;
          return;
        }
      }
    throw std::logic_error("PlaneChart: degenerate basis");
  }

  IntVec to_plane(const IntVec& x) const {
    IntVec q = x - origin;
    // solve c * basis = q using the chosen coordinate pair
    Int c0 = q(r0) * basis(1, r1) - q(r1) * basis(1, r0);
    Int c1 = basis(0, r0) * q(r1) - basis(0, r1) * q(r0);
    if (c0 % det != 0 || c1 % det != 0)
      throw std::logic_error("PlaneChart: point not in the plane lattice");
    IntVec c(2);
    c(0) = c0 / det;
    c(1) = c1 / det;
    // verify against the remaining coordinate
    IntVec back = origin;
    back += c(0) * basis.row(0).transpose();
    back += c(1) * basis.row(1).transpose();
    if (back != x) throw std::logic_error("PlaneChart: inconsistent chart");
    return c;
  }
};

Int cross2(const IntVec& a, const IntVec& b) { return a(0) * b(1) - a(1) * b(0); }

/// Placing triangulation of the lattice points of a convex polygon (given in
/// exact 2D coordinates): insert points in lexicographic order, connect each
/// to the hull edges it sees.  Every input point ends up a triangle vertex,
/// so the triangulation is fine.
std::vector<std::array<size_t, 3>> placing_triangulation(const std::vector<IntVec>& pts) {
  const size_t n = pts.size();
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return lex_less(pts[a], pts[b]); });

  std::vector<std::array<size_t, 3>> tris;
  std::vector<size_t> hull;  // counterclockwise, keeps collinear chain points
  size_t processed = 0;

  // initial collinear run
  std::vector<size_t> chain;
  while (processed < n) {
    size_t cand = order[processed];
    if (chain.size() >= 2) {
      IntVec u = pts[chain[1]] - pts[chain[0]];
      IntVec v = pts[cand] - pts[chain[0]];
      if (cross2(u, v) != 0) break;
    }
    chain.push_back(cand);
    ++processed;
  }
  if (processed == n)
    throw std::invalid_argument("placing_triangulation: all points collinear");
  {
    size_t p = order[processed];
    ++processed;
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      tris.push_back({chain[i], chain[i + 1], p});
    IntVec u = pts[chain[1]] - pts[chain[0]];
    IntVec v = pts[p] - pts[chain[0]];
    if (cross2(u, v) > 0) {
      hull = chain;  // chain runs clockwise-under p: chain then p is CCW
      hull.push_back(p);
    } else {
      hull.assign(chain.rbegin(), chain.rend());
      hull.push_back(p);
    }
  }

  for (; processed < n; ++processed) {
    size_t p = order[processed];
    const size_t h = hull.size();
    std::vector<bool> visible(h);
    for (size_t i = 0; i < h; ++i) {
      const IntVec& a = pts[hull[i]];
      const IntVec& b = pts[hull[(i + 1) % h]];
      visible[i] = cross2(IntVec(b - a), IntVec(pts[p] - a)) < 0;
    }
    // visible edges form one contiguous cyclic arc
    size_t arc_start = h;  // first visible edge after an invisible one
    for (size_t i = 0; i < h; ++i)
      if (visible[i] && !visible[(i + h - 1) % h]) {
        arc_start = i;
        break;
      }
    if (arc_start == h) throw std::logic_error("placing_triangulation: no visible edge");
    size_t arc_len = 0;
    while (arc_len < h && visible[(arc_start + arc_len) % h]) ++arc_len;
    for (size_t t = 0; t < arc_len; ++t) {
      size_t i = (arc_start + t) % h;
      tris.push_back({hull[i], hull[(i + 1) % h], p});
    }
    // replace the open arc with p
    std::vector<size_t> next;
    next.push_back(hull[arc_start]);
    next.push_back(p);
    for (size_t i = (arc_start + arc_len) % h; i != arc_start; i = (i + 1) % h) next.push_back(hull[i]);
    hull = std::move(next);
  }
  return tris;
}

}  // namespace

std::vector<Cone> Fan::maximal_cones() const {
  int top = 0;
  for (const Cone& c : cones) top = std::max(top, c.dim);
  return cones_of_dim(top);
}

std::vector<Cone> Fan::cones_of_dim(int d) const {
  std::vector<Cone> out;
  for (const Cone& c : cones)
    if (c.dim == d) out.push_back(c);
  return out;
}

Fan face_fan(const LatticePolytope& p) {
  if (!origin_interior(p)) throw std::invalid_argument("face_fan: origin is not interior");
  Fan fan;
  fan.ambient_dim = p.dim();
  FaceLattice fl = face_lattice(p);
  for (const auto& level : fl.by_dim)
    for (const Face& f : level) {
      std::vector<IntVec> gens;
      for (int vi : f.vertex_indices) gens.push_back(primitive(p.vertex(vi)));
      Cone c = make_cone(std::move(gens));
      if (c.dim != f.dim + 1) throw std::logic_error("face_fan: unexpected cone dimension");
      fan.cones.push_back(std::move(c));
    }
  finalize(fan);
  return fan;
}

Fan normal_fan(const LatticePolytope& e) {
  Fan fan;
  fan.ambient_dim = e.dim();
  FaceLattice fl = face_lattice(e);
  for (const auto& level : fl.by_dim)
    for (const Face& f : level) {
      std::vector<IntVec> gens;
      for (int fi : f.active_facets) gens.push_back(e.facets()[static_cast<size_t>(fi)].normal);
      Cone c = make_cone(std::move(gens));
      if (c.dim != e.dim() - f.dim) throw std::logic_error("normal_fan: unexpected cone dimension");
      fan.cones.push_back(std::move(c));
    }
  finalize(fan);
  return fan;
}

Fan max_projective_subdivision(const LatticePolytope& p) {
  const int k = p.dim();
  if (k > 3)
    throw std::invalid_argument("max_projective_subdivision: dimension 4 unsupported");
  if (!is_reflexive(p))
    throw std::invalid_argument("max_projective_subdivision: polytope is not reflexive");
  if (k == 1) return face_fan(p);

  const auto pts = lattice_points(p);
  Fan fan;
  fan.ambient_dim = k;

  for (const Facet& f : p.facets()) {
    std::vector<IntVec> on_facet;
    for (const IntVec& x : pts)
      if (f.normal.dot(x) == -f.offset) on_facet.push_back(x);

    if (k == 2) {
      // facet is a segment; lexicographic order is monotone along it
      std::sort(on_facet.begin(), on_facet.end(), VecLess{});
      for (size_t i = 0; i + 1 < on_facet.size(); ++i) {
        fan.cones.push_back(make_cone({on_facet[i], on_facet[i + 1]}));
        fan.cones.push_back(make_cone({on_facet[i]}));
        fan.cones.push_back(make_cone({on_facet[i + 1]}));
      }
      continue;
    }

    PlaneChart chart(f.normal, on_facet.front());
    std::vector<IntVec> plane_pts;
    plane_pts.reserve(on_facet.size());
    for (const IntVec& x : on_facet) plane_pts.push_back(chart.to_plane(x));
    for (const auto& tri : placing_triangulation(plane_pts)) {
      std::vector<IntVec> gens{on_facet[tri[0]], on_facet[tri[1]], on_facet[tri[2]]};
      fan.cones.push_back(make_cone(gens));
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          fan.cones.push_back(make_cone({gens[static_cast<size_t>(a)], gens[static_cast<size_t>(b)]}));
      for (const IntVec& g : gens) fan.cones.push_back(make_cone({g}));
    }
  }
  finalize(fan);
  return fan;
}

bool is_simplicial(const Fan& f) {
  for (const Cone& c : f.cones)
    if (c.generators.cols() != c.dim) return false;
  return true;
}

bool is_smooth(const Fan& f) {
  for (const Cone& c : f.maximal_cones()) {
    if (c.generators.cols() != c.dim || c.dim != f.ambient_dim) return false;
    Int d = determinant(c.generators);
    if (d != 1 && d != -1) return false;
  }
  return true;
}

bool same_fan(const Fan& a, const Fan& b) {
  if (a.ambient_dim != b.ambient_dim) return false;
  if (a.cones.size() != b.cones.size()) return false;
  for (size_t i = 0; i < a.cones.size(); ++i)
    if (!(a.cones[i] == b.cones[i])) return false;  // both canonically sorted
  return true;
}

}  // namespace rk3
