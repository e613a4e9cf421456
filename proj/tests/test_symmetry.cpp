#include "doctest.h"

#include "rk3/symmetry.hpp"
#include "test_helpers.hpp"
#include "test_polytopes_common.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace rk3;
using namespace rk3::testing;

namespace {

PolytopeAutGroup trivial_group(const LatticePolytope& p) {
  PolytopeAutGroup g;
  g.polytope = p;
  IntMat id(p.dim(), p.dim());
  for (int i = 0; i < p.dim(); ++i)
    for (int j = 0; j < p.dim(); ++j) id(i, j) = (i == j) ? 1 : 0;
  g.elements.push_back(id);
  return g;
}

std::multiset<size_t> orbit_sizes(const std::vector<std::vector<IntVec>>& parts) {
  std::multiset<size_t> sizes;
  for (const auto& o : parts) sizes.insert(o.size());
  return sizes;
}

}  // namespace

TEST_CASE("automorphism_group orders: simplex, cross-polytope, segment") {
  CHECK(automorphism_group(simplex3()).order() == 24);
  CHECK(automorphism_group(cross3()).order() == 48);
  CHECK(automorphism_group(cube3()).order() == 48);
  CHECK(automorphism_group(segment1()).order() == 2);
}

TEST_CASE("automorphism_group satisfies the group axioms") {
  PolytopeAutGroup g = automorphism_group(simplex3());
  auto key = [](const IntMat& m) { return mat_str(m); };
  std::set<std::string> keys;
  for (const IntMat& m : g.elements) keys.insert(key(m));
  bool has_identity = false;
  for (const IntMat& m : g.elements) {
    Int d = determinant(m);
    CHECK((d == 1 || d == -1));
    if (m == IntMat(IntMat::Identity(3, 3))) has_identity = true;
    CHECK(keys.count(key(inverse_unimodular(m))) == 1);
    for (const IntMat& n : g.elements) CHECK(keys.count(key(IntMat(m * n))) == 1);
  }
  CHECK(has_identity);
}

TEST_CASE("automorphisms preserve lattice points and fix the origin") {
  for (const LatticePolytope& p : {simplex3(), wp1113(), skew_cube()}) {
    PolytopeAutGroup g = automorphism_group(p);
    auto pts = lattice_points(p);
    for (const IntMat& m : g.elements)
      for (const IntVec& x : pts) {
        IntVec y = m * x;
        CHECK(std::binary_search(pts.begin(), pts.end(), y, VecLess{}));
      }
  }
}

TEST_CASE("aut groups of a polytope and its polar match by inverse transpose") {
  for (const LatticePolytope& p : {simplex3(), cross3(), wp1113(), skew_cube(), root_polytope_a3()}) {
    PolytopeAutGroup g = automorphism_group(p);
    PolytopeAutGroup h = automorphism_group(polar(p));
    REQUIRE(g.order() == h.order());
    std::set<std::string> dual_keys;
    for (const IntMat& m : h.elements) dual_keys.insert(mat_str(m));
    for (const IntMat& m : g.elements)
      CHECK(dual_keys.count(mat_str(IntMat(inverse_unimodular(m).transpose()))) == 1);
  }
}

TEST_CASE("orientation_preserving picks the determinant-one half") {
  PolytopeAutGroup s = orientation_preserving(automorphism_group(simplex3()));
  CHECK(s.order() == 12);
  PolytopeAutGroup c = orientation_preserving(automorphism_group(cross3()));
  CHECK(c.order() == 24);
  PolytopeAutGroup t = orientation_preserving(trivial_group(simplex3()));
  CHECK(t.order() == 1);
}

TEST_CASE("identify_small_group labels") {
  CHECK(identify_small_group(orientation_preserving(automorphism_group(simplex3()))).str() == "A4");
  CHECK(identify_small_group(orientation_preserving(automorphism_group(cross3()))).str() == "S4");
  CHECK(identify_small_group(trivial_group(simplex3())).str() == "trivial");

  // triangle: full group S3 is dihedral of order 6, rotations are C3
  PolytopeAutGroup tri = automorphism_group(triangle2());
  CHECK(tri.order() == 6);
  CHECK(identify_small_group(tri).str() == "Dih6");
  CHECK(identify_small_group(orientation_preserving(tri)).str() == "C3");

  // segment: order 2 cyclic
  CHECK(identify_small_group(automorphism_group(segment1())).str() == "C2");

  // full cube group: order 48, not dihedral or cyclic
  GroupLabel cube_label = identify_small_group(automorphism_group(cube3()));
  CHECK(cube_label.kind == GroupLabel::Kind::Other);
  CHECK(cube_label.order == 48);
}

TEST_CASE("is_vertex_transitive") {
  CHECK(is_vertex_transitive(orientation_preserving(automorphism_group(simplex3())), simplex3()));
  CHECK(is_vertex_transitive(orientation_preserving(automorphism_group(cross3())), cross3()));
  CHECK_FALSE(is_vertex_transitive(trivial_group(simplex3()), simplex3()));
  CHECK_FALSE(is_vertex_transitive(automorphism_group(wp1113()), wp1113()));
}

TEST_CASE("orbits: cube rotations on the 26 nonzero lattice points") {
  LatticePolytope c = cube3();
  PolytopeAutGroup rot = orientation_preserving(automorphism_group(c));
  std::vector<IntVec> pts;
  for (const IntVec& x : lattice_points(c))
    if (x != make_vec({0, 0, 0})) pts.push_back(x);
  REQUIRE(pts.size() == 26);
  auto parts = orbits(rot, pts);
  CHECK(orbit_sizes(parts) == std::multiset<size_t>{6, 8, 12});
  size_t total = 0;
  for (const auto& o : parts) {
    total += o.size();
    CHECK(rot.order() % o.size() == 0);  // orbit sizes divide the group order
  }
  CHECK(total == pts.size());
}

TEST_CASE("orbits: trivial group and transitive simplex action") {
  auto parts = orbits(trivial_group(simplex3()), simplex3().vertices());
  CHECK(parts.size() == 4);

  LatticePolytope d = dual_simplex3();
  auto one = orbits(orientation_preserving(automorphism_group(d)), d.vertices());
  CHECK(orbit_sizes(one) == std::multiset<size_t>{4});
}

TEST_CASE("orbits rejects unstable point sets") {
  PolytopeAutGroup g = automorphism_group(simplex3());
  std::vector<IntVec> pts{make_vec({1, 0, 0})};  // images leave the set
  CHECK_THROWS_AS(orbits(g, pts), std::invalid_argument);
}

TEST_CASE("normal_form is a GL(k,Z) invariant") {
  std::mt19937 rng(42);
  for (const LatticePolytope& p : {simplex3(), cross3(), skew_cube()}) {
    NormalForm nf = normal_form(p);
    for (int trial = 0; trial < 100; ++trial) {
      IntMat u = random_unimodular(rng, 3);
      std::vector<IntVec> moved;
      for (const IntVec& v : p.vertices()) moved.push_back(u * v);
      LatticePolytope q = convex_hull(moved, 3);
      CHECK(normal_form(q) == nf);
    }
  }
}

TEST_CASE("normal_form separates inequivalent polytopes") {
  CHECK_FALSE(normal_form(simplex3()) == normal_form(cross3()));
  CHECK_FALSE(normal_form(cube3()) == normal_form(cross3()));
  // polytope_of rebuilds the class representative
  LatticePolytope rep = polytope_of(normal_form(simplex3()));
  CHECK(normal_form(rep) == normal_form(simplex3()));
}

TEST_CASE("the twelve-vertex fourteen-facet class") {
  LatticePolytope p = root_polytope_a3();
  REQUIRE(is_reflexive(p));
  CHECK(p.vertex_count() == 12);
  CHECK(p.facets().size() == 14);
  CHECK(lattice_points(p).size() == 13);  // vertices plus origin only
  PolytopeAutGroup rot = orientation_preserving(automorphism_group(p));
  CHECK(rot.order() == 24);
  CHECK(identify_small_group(rot).str() == "S4");
  CHECK(is_vertex_transitive(rot, p));
}

TEST_CASE("enumerate_reflexive: dimension 1") {
  auto classes = enumerate_reflexive(1);
  REQUIRE(classes.size() == 1);
  CHECK(polytope_of(classes[0]) == segment1());
  CHECK_THROWS_AS(enumerate_reflexive(3), std::invalid_argument);
}

TEST_CASE("enumerate_reflexive: the sixteen polygon classes") {
  auto classes = enumerate_reflexive(2);
  CHECK(classes.size() == 16);

  std::set<std::string> keys;
  for (const NormalForm& nf : classes) {
    LatticePolytope p = polytope_of(nf);
    CHECK(is_reflexive(p));
    CHECK(keys.insert(nf.key()).second);  // pairwise inequivalent
  }
  // closed under polarity
  for (const NormalForm& nf : classes) {
    NormalForm dual_nf = normal_form(polar(polytope_of(nf)));
    CHECK(keys.count(dual_nf.key()) == 1);
  }
  // contains the projective-plane triangle
  CHECK(keys.count(normal_form(triangle2()).key()) == 1);
}

TEST_CASE("every polygon class obeys the boundary-count-12 law") {
  // classical fact, independent of everything in the implementation:
  // a reflexive polygon and its dual have 12 boundary lattice points total
  for (const NormalForm& nf : enumerate_reflexive(2)) {
    LatticePolytope p = polytope_of(nf);
    LatticePolytope q = polar(p);
    long boundary_p = static_cast<long>(lattice_points(p).size()) - 1;
    long boundary_q = static_cast<long>(lattice_points(q).size()) - 1;
    CHECK(boundary_p + boundary_q == 12);
  }
}

TEST_CASE("enumerate_reflexive: a larger box finds the same classes") {
  auto base = enumerate_reflexive(2, 4);
  auto wide = enumerate_reflexive(2, 6);
  REQUIRE(base.size() == wide.size());
  for (size_t i = 0; i < base.size(); ++i) CHECK(base[i] == wide[i]);
}
