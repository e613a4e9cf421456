#include "doctest.h"

#include "rk3/polytope.hpp"
#include "test_polytopes_common.hpp"

#include <set>

using namespace rk3;
using namespace rk3::testing;

namespace {

std::vector<long> f_vector(const FaceLattice& fl) {
  std::vector<long> f;
  for (const auto& level : fl.by_dim) f.push_back(static_cast<long>(level.size()));
  return f;
}

bool has_vertex(const LatticePolytope& p, std::initializer_list<long> v) {
  IntVec x = make_vec(v);
  for (const IntVec& w : p.vertices())
    if (w == x) return true;
  return false;
}

}  // namespace

TEST_CASE("convex_hull: simplex absorbs the origin") {
  LatticePolytope p = convex_hull({make_vec({1, 0, 0}), make_vec({0, 1, 0}), make_vec({0, 0, 1}),
                                   make_vec({-1, -1, -1}), make_vec({0, 0, 0})},
                                  3);
  CHECK(p.vertex_count() == 4);
  CHECK(p.facets().size() == 4);
  CHECK_FALSE(has_vertex(p, {0, 0, 0}));
}

TEST_CASE("convex_hull: diamond and cube") {
  LatticePolytope diamond = convex_hull(
      {make_vec({1, 0}), make_vec({-1, 0}), make_vec({0, 1}), make_vec({0, -1})}, 2);
  CHECK(diamond.vertex_count() == 4);
  CHECK(diamond.facets().size() == 4);
  for (const Facet& f : diamond.facets()) CHECK(f.offset == 1);

  LatticePolytope c = cube3();
  CHECK(c.vertex_count() == 8);
  CHECK(c.facets().size() == 6);
}

TEST_CASE("convex_hull: degenerate input is rejected") {
  CHECK_THROWS_AS(convex_hull({make_vec({0, 0}), make_vec({1, 1}), make_vec({2, 2})}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(convex_hull({make_vec({1, 0, 0}), make_vec({0, 1, 0})}, 3),
                  std::invalid_argument);
}

TEST_CASE("is_reflexive") {
  CHECK(is_reflexive(simplex3()));
  CHECK(is_reflexive(cube3()));
  LatticePolytope seg = convex_hull({make_vec({0}), make_vec({2})}, 1);
  CHECK_FALSE(is_reflexive(seg));  // origin on the boundary
}

TEST_CASE("polar: simplex, cross-polytope, segment") {
  LatticePolytope dual = polar(simplex3());
  CHECK(dual == dual_simplex3());

  CHECK(polar(cross3()) == cube3());
  CHECK(polar(cube3()) == cross3());

  LatticePolytope seg = segment1();
  CHECK(polar(seg) == seg);

  LatticePolytope off = convex_hull({make_vec({0}), make_vec({2})}, 1);
  CHECK_THROWS_AS(polar(off), std::invalid_argument);
}

TEST_CASE("polar involution on assorted reflexive polytopes") {
  for (const LatticePolytope& p :
       {simplex3(), dual_simplex3(), cube3(), cross3(), wp1113(), skew_cube(), root_polytope_a3(),
        triangle2(), segment1()}) {
    REQUIRE(is_reflexive(p));
    LatticePolytope pp = polar(polar(p));
    CHECK(pp == p);
    CHECK(polar(p).vertex_count() == static_cast<Eigen::Index>(p.facets().size()));
  }
}

TEST_CASE("lattice_points: counts with independent oracles") {
  CHECK(lattice_points(simplex3()).size() == 5);
  CHECK(lattice_points(cube3()).size() == 27);

  // dual simplex: after the shift y = x + (1,1,1), points satisfy y >= 0 and
  // y1+y2+y3 <= 4, counted directly here
  long oracle = 0;
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b + a <= 4; ++b)
      for (long c = 0; c + b + a <= 4; ++c) ++oracle;
  CHECK(oracle == 35);
  CHECK(lattice_points(dual_simplex3()).size() == 35);
}

TEST_CASE("lattice_points agree with a brute-force box filter (k <= 3)") {
  for (const LatticePolytope& p : {simplex3(), cross3(), wp1113(), root_polytope_a3()}) {
    auto pts = lattice_points(p);
    std::set<std::string> got;
    for (const IntVec& x : pts) {
      CHECK(p.contains(x));
      got.insert(vec_str(x));
    }
    // independent scan of a generous box
    long found = 0;
    for (long x = -5; x <= 5; ++x)
      for (long y = -5; y <= 5; ++y)
        for (long z = -5; z <= 5; ++z) {
          IntVec v = make_vec({x, y, z});
          bool inside = true;
          for (const Facet& f : p.facets())
            if (f.normal.dot(v) < -f.offset) inside = false;
          if (inside) {
            ++found;
            CHECK(got.count(vec_str(v)) == 1);
          }
        }
    CHECK(found == static_cast<long>(pts.size()));
  }
}

TEST_CASE("face_lattice: f-vectors and interior counts") {
  FaceLattice sfl = face_lattice(simplex3());
  CHECK(f_vector(sfl) == std::vector<long>{4, 6, 4});

  FaceLattice cfl = face_lattice(cube3());
  CHECK(f_vector(cfl) == std::vector<long>{8, 12, 6});
  for (const Face& f : cfl.faces_of_dim(2)) CHECK(f.interior_count == 1);
  for (const Face& f : cfl.faces_of_dim(1)) CHECK(f.interior_count == 1);  // length-2 edges

  // octahedron edges are primitive: no interior points
  for (const Face& f : face_lattice(cross3()).faces_of_dim(1)) CHECK(f.interior_count == 0);
}

TEST_CASE("face_lattice: WP(1,1,1,3) has one facet-interior point") {
  LatticePolytope p = wp1113();
  FaceLattice fl = face_lattice(p);
  int facets_with_interior = 0;
  for (const Face& f : fl.faces_of_dim(2)) {
    if (f.interior_count > 0) {
      ++facets_with_interior;
      CHECK(f.interior_count == 1);
      bool found = false;
      for (const IntVec& x : f.points)
        if (x == make_vec({0, 0, -1})) found = true;
      CHECK(found);
    }
  }
  CHECK(facets_with_interior == 1);
}

TEST_CASE("face_lattice: point count identity and Euler relation") {
  for (const LatticePolytope& p :
       {simplex3(), dual_simplex3(), cube3(), cross3(), wp1113(), skew_cube(), root_polytope_a3()}) {
    FaceLattice fl = face_lattice(p);
    long total = 1;  // the origin is the unique interior point of a reflexive polytope
    for (const auto& level : fl.by_dim)
      for (const Face& f : level) total += f.interior_count;
    CHECK(total == static_cast<long>(lattice_points(p).size()));

    auto f = f_vector(fl);
    long euler = 0;
    for (size_t d = 0; d < f.size(); ++d) euler += (d % 2 == 0 ? f[d] : -f[d]);
    CHECK(euler == (p.dim() % 2 == 0 ? 0 : 2));

    // edges: interior count = lattice length - 1
    if (p.dim() >= 2)
      for (const Face& e : fl.faces_of_dim(1))
        CHECK(e.interior_count == static_cast<long>(e.points.size()) - 2);
  }
}

TEST_CASE("face_lattice: incidence links are consistent") {
  LatticePolytope p = cube3();
  FaceLattice fl = face_lattice(p);
  // every vertex lies in exactly 3 edges of the cube, every edge in 2 facets
  for (const auto& up : fl.parents[0]) CHECK(up.size() == 3);
  for (const auto& up : fl.parents[1]) CHECK(up.size() == 2);
}

TEST_CASE("dual_face: examples from the standard simplex") {
  LatticePolytope p = simplex3();
  LatticePolytope q = polar(p);
  FaceLattice fl = face_lattice(p);
  FaceLattice ql = face_lattice(q);

  // vertex (1,0,0) -> facet of the dual spanned by {(-1,3,-1),(-1,-1,3),(-1,-1,-1)}
  for (const Face& v : fl.faces_of_dim(0)) {
    if (p.vertex(v.vertex_indices[0]) != make_vec({1, 0, 0})) continue;
    Face d = dual_face(p, v, q, ql);
    CHECK(d.dim == 2);
    std::set<std::string> got;
    for (int vi : d.vertex_indices) got.insert(vec_str(q.vertex(vi)));
    CHECK(got == std::set<std::string>{"-1,3,-1", "-1,-1,3", "-1,-1,-1"});
  }

  // facet -> the dual vertex equal to its normal
  for (const Face& f : fl.faces_of_dim(2)) {
    Face d = dual_face(p, f, q, ql);
    CHECK(d.dim == 0);
    IntVec normal = p.facets()[static_cast<size_t>(f.active_facets[0])].normal;
    CHECK(q.vertex(d.vertex_indices[0]) == normal);
  }

  // edge conv{e1,e2} -> edge conv{(-1,-1,3),(-1,-1,-1)}
  for (const Face& e : fl.faces_of_dim(1)) {
    std::set<std::string> ev;
    for (int vi : e.vertex_indices) ev.insert(vec_str(p.vertex(vi)));
    if (ev != std::set<std::string>{"1,0,0", "0,1,0"}) continue;
    Face d = dual_face(p, e, q, ql);
    CHECK(d.dim == 1);
    std::set<std::string> got;
    for (int vi : d.vertex_indices) got.insert(vec_str(q.vertex(vi)));
    CHECK(got == std::set<std::string>{"-1,-1,3", "-1,-1,-1"});
  }
}

TEST_CASE("dual_face: involution and dimension pairing") {
  for (const LatticePolytope& p : {simplex3(), cube3(), skew_cube(), root_polytope_a3()}) {
    LatticePolytope q = polar(p);
    FaceLattice fl = face_lattice(p);
    FaceLattice ql = face_lattice(q);
    for (const auto& level : fl.by_dim)
      for (const Face& f : level) {
        Face d = dual_face(p, f, q, ql);
        CHECK(f.dim + d.dim == p.dim() - 1);
        Face back = dual_face(q, d, p, fl);
        CHECK(back.vertex_indices == f.vertex_indices);
      }
  }
}

TEST_CASE("dual_face rejects non-reflexive polytopes") {
  LatticePolytope p = convex_hull({make_vec({0, 0}), make_vec({2, 0}), make_vec({0, 2})}, 2);
  FaceLattice fl = face_lattice(p);
  CHECK_THROWS_AS(dual_face(p, fl.faces_of_dim(0)[0]), std::invalid_argument);
}

TEST_CASE("4D: simplex and products") {
  LatticePolytope s4 = simplex4();
  CHECK(s4.vertex_count() == 5);
  CHECK(s4.facets().size() == 5);
  CHECK(is_reflexive(s4));
  CHECK(lattice_points(s4).size() == 6);

  LatticePolytope d4 = polar(s4);
  // shifted count: y >= 0, sum y <= 5 in 4 variables = C(9,4)
  CHECK(lattice_points(d4).size() == 126);
  CHECK(polar(d4) == s4);

  LatticePolytope t2 = triangle2();
  LatticePolytope t22 = product(t2, t2);
  CHECK(t22.dim() == 4);
  CHECK(t22.vertex_count() == 9);
  CHECK(is_reflexive(t22));
}
