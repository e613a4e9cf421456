#include "rk3/symmetry.hpp"

#include "rk3/linalg.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rk3 {

namespace {

IntMat identity(Eigen::Index n) {
  IntMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = (i == j) ? 1 : 0;
  return m;
}

struct MatLess {
  bool operator()(const IntMat& a, const IntMat& b) const { return lex_less_colmajor(a, b); }
};

/// Greedy selection of k linearly independent vertex columns.
std::vector<Eigen::Index> independent_columns(const IntMat& verts, int k) {
  std::vector<Eigen::Index> picked;
  for (Eigen::Index j = 0; j < verts.cols() && static_cast<int>(picked.size()) < k; ++j) {
    picked.push_back(j);
    IntMat sub(k, static_cast<Eigen::Index>(picked.size()));
    for (size_t c = 0; c < picked.size(); ++c) sub.col(static_cast<Eigen::Index>(c)) = verts.col(picked[c]);
    HermiteForm hf = hermite_normal_form(IntMat(sub.transpose()));
    int rank = 0;
    for (Eigen::Index i = 0; i < hf.h.rows(); ++i) {
      bool nz = false;
      for (Eigen::Index c = 0; c < hf.h.cols(); ++c)
        if (hf.h(i, c) != 0) nz = true;
      if (nz) ++rank;
    }
    if (rank != static_cast<int>(picked.size())) picked.pop_back();
  }
  if (static_cast<int>(picked.size()) != k)
    throw std::invalid_argument("automorphism_group: vertices do not span");
  return picked;
}

long element_order(const IntMat& m) {
  const IntMat id = identity(m.rows());
  IntMat pow = m;
  for (long o = 1; o <= 256; ++o) {
    if (pow == id) return o;
    pow = IntMat(pow * m);
  }
  throw std::logic_error("element_order: order exceeds 256; not a finite polytope symmetry");
}

// --- 2D enumeration helpers (exact angular order around the origin) ---

Int cross2(const IntVec& a, const IntVec& b) { return a(0) * b(1) - a(1) * b(0); }

/// Angular class of u relative to base direction b: 0 on the ray, then
/// counterclockwise classes 1 (0,pi), 2 (= pi), 3 (pi,2pi).
int angular_class(const IntVec& base, const IntVec& u) {
  Int c = cross2(base, u);
  if (c == 0) return base.dot(u) > 0 ? 0 : 2;
  return c > 0 ? 1 : 3;
}

/// Strict "u comes before v" in counterclockwise order starting at base.
bool angle_less(const IntVec& base, const IntVec& u, const IntVec& v) {
  int cu = angular_class(base, u), cv = angular_class(base, v);
  if (cu != cv) return cu < cv;
  return cross2(u, v) > 0;
}

}  // namespace

std::string GroupLabel::str() const {
  switch (kind) {
    case Kind::Trivial:
      return "trivial";
    case Kind::A4:
      return "A4";
    case Kind::S4:
      return "S4";
    case Kind::Cyclic:
      return "C" + std::to_string(order);
    case Kind::Dihedral:
      return "Dih" + std::to_string(order);
    case Kind::ElementaryAbelian: {
      long p = order_histogram.rbegin()->first;
      long e = 0;
      for (long n = order; n > 1; n /= p) ++e;
      return "EA(" + std::to_string(p) + "^" + std::to_string(e) + ")";
    }
    case Kind::Other:
      break;
  }
  std::ostringstream out;
  out << "other(order=" << order << ";orders=";
  bool first = true;
  for (auto [o, c] : order_histogram) {
    if (!first) out << ',';
    out << o << ':' << c;
    first = false;
  }
  out << ')';
  return out.str();
}

PolytopeAutGroup automorphism_group(const LatticePolytope& p) {
  const int k = p.dim();
  const IntMat& verts = p.vertex_matrix();
  const Eigen::Index n = verts.cols();

  auto base_idx = independent_columns(verts, k);
  IntMat w(k, k);
  for (int j = 0; j < k; ++j) w.col(j) = verts.col(base_idx[static_cast<size_t>(j)]);
  const IntMat w_adj = adjugate(w);
  const Int w_det = determinant(w);

  std::vector<IntVec> vertex_list = columns_of(verts);  // lex sorted already

  std::set<IntMat, MatLess> found;
  std::vector<Eigen::Index> choice(static_cast<size_t>(k), 0);
  std::vector<bool> used(static_cast<size_t>(n), false);

  auto try_candidate = [&]() {
    IntMat targets(k, k);
    for (int j = 0; j < k; ++j) targets.col(j) = verts.col(choice[static_cast<size_t>(j)]);
    IntMat num = targets * w_adj;  // candidate * w_det
    for (Eigen::Index i = 0; i < num.rows(); ++i)
      for (Eigen::Index j = 0; j < num.cols(); ++j)
        if (num(i, j) % w_det != 0) return;
    IntMat a = num / w_det;
    Int det = determinant(a);
    if (det != 1 && det != -1) return;
    for (Eigen::Index j = 0; j < n; ++j) {
      IntVec image = a * verts.col(j);
      if (!std::binary_search(vertex_list.begin(), vertex_list.end(), image, VecLess{})) return;
    }
    found.insert(a);
  };

  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      try_candidate();
      return;
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      used[static_cast<size_t>(j)] = true;
      choice[static_cast<size_t>(depth)] = j;
      self(self, depth + 1);
      used[static_cast<size_t>(j)] = false;
    }
  };
  dfs(dfs, 0);

  PolytopeAutGroup g;
  g.polytope = p;
  g.elements.assign(found.begin(), found.end());
  return g;
}

PolytopeAutGroup orientation_preserving(const PolytopeAutGroup& g) {
  PolytopeAutGroup h;
  h.polytope = g.polytope;
  for (const IntMat& m : g.elements)
    if (determinant(m) == 1) h.elements.push_back(m);
  return h;
}

GroupLabel identify_small_group(const PolytopeAutGroup& g) {
  if (g.elements.size() > 48)
    throw std::invalid_argument("identify_small_group: order > 48 unsupported");
  GroupLabel label;
  label.order = static_cast<long>(g.elements.size());
  for (const IntMat& m : g.elements) ++label.order_histogram[element_order(m)];

  const long n = label.order;
  auto count = [&](long o) {
    auto it = label.order_histogram.find(o);
    return it == label.order_histogram.end() ? 0L : it->second;
  };
  bool abelian = true;
  for (const IntMat& a : g.elements) {
    for (const IntMat& b : g.elements)
      if (IntMat(a * b) != IntMat(b * a)) {
        abelian = false;
        break;
      }
    if (!abelian) break;
  }

  if (n == 1) {
    label.kind = GroupLabel::Kind::Trivial;
  } else if (count(n) > 0) {
    label.kind = GroupLabel::Kind::Cyclic;
  } else if (abelian && label.order_histogram.size() == 2) {
    long p = label.order_histogram.rbegin()->first;
    bool prime = p >= 2;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    long power = 1;
    while (power < n) power *= p;
    label.kind = (prime && power == n) ? GroupLabel::Kind::ElementaryAbelian : GroupLabel::Kind::Other;
  } else if (n == 12 && count(2) == 3 && count(3) == 8) {
    label.kind = GroupLabel::Kind::A4;
  } else if (n == 24 && count(2) == 9 && count(3) == 8 && count(4) == 6) {
    label.kind = GroupLabel::Kind::S4;
  } else if (!abelian && n % 2 == 0 && count(n / 2) > 0 && count(2) >= n / 2) {
    label.kind = GroupLabel::Kind::Dihedral;
  } else {
    label.kind = GroupLabel::Kind::Other;
  }
  return label;
}

bool is_vertex_transitive(const PolytopeAutGroup& g, const LatticePolytope& p) {
  auto parts = orbits(g, p.vertices());
  return parts.size() == 1;
}

std::vector<std::vector<IntVec>> orbits(const PolytopeAutGroup& g, const std::vector<IntVec>& pts) {
  std::vector<IntVec> sorted = pts;
  std::sort(sorted.begin(), sorted.end(), VecLess{});
  auto index_of = [&](const IntVec& v) -> int {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v, VecLess{});
    if (it == sorted.end() || lex_less(v, *it)) return -1;
    return static_cast<int>(it - sorted.begin());
  };

  const int n = static_cast<int>(sorted.size());
  std::vector<int> parent(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };

  for (const IntMat& m : g.elements) {
    for (int i = 0; i < n; ++i) {
      IntVec image = m * sorted[static_cast<size_t>(i)];
      int j = index_of(image);
      if (j < 0) throw std::invalid_argument("orbits: point set is not stable under the group");
      int ri = find(i), rj = find(j);
      if (ri != rj) parent[static_cast<size_t>(ri)] = rj;
    }
  }

  std::map<int, std::vector<IntVec>> buckets;
  for (int i = 0; i < n; ++i) buckets[find(i)].push_back(sorted[static_cast<size_t>(i)]);
  std::vector<std::vector<IntVec>> out;
  for (auto& [root, pts_in_orbit] : buckets) out.push_back(std::move(pts_in_orbit));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return lex_less(a.front(), b.front()); });
  return out;
}

namespace {

/// DFS state for the normal form search: HNF of the chosen column prefix
/// together with the accumulated unimodular transform and its rank.
struct NfState {
  IntMat h;  // k x j prefix in HNF
  IntMat u;  // k x k
  int rank = 0;
};

/// Appends u*col to the state, restoring HNF (new pivot if independent).
void nf_append(NfState& st, const IntVec& col) {
  const Eigen::Index k = st.u.rows();
  IntVec c = st.u * col;
  Eigen::Index r = st.rank;
  bool below = false;
  for (Eigen::Index i = r; i < k; ++i)
    if (c(i) != 0) below = true;
  if (below) {
    while (true) {
      Eigen::Index p = -1;
      for (Eigen::Index i = r; i < k; ++i) {
        if (c(i) == 0) continue;
        if (p < 0 || abs(c(i)) < abs(c(p))) p = i;
      }
      if (p != r) {
        std::swap(c(r), c(p));
        st.u.row(r).swap(st.u.row(p));
      }
      bool again = false;
      for (Eigen::Index i = r + 1; i < k; ++i) {
        if (c(i) == 0) continue;
        Int q = trunc_div(c(i), c(r));
        if (q != 0) {
          c(i) -= q * c(r);
          st.u.row(i) -= q * st.u.row(r);
        }
        if (c(i) != 0) again = true;
      }
      if (!again) break;
    }
    if (c(r) < 0) {
      c(r) = -c(r);
      st.u.row(r) = -st.u.row(r);
    }
    for (Eigen::Index i = 0; i < r; ++i) {
      Int q = floor_div(c(i), c(r));
      if (q != 0) {
        c(i) -= q * c(r);
        st.u.row(i) -= q * st.u.row(r);
      }
    }
    st.rank += 1;
  }
  IntMat h2(k, st.h.cols() + 1);
  h2.leftCols(st.h.cols()) = st.h;
  h2.col(st.h.cols()) = c;
  st.h = std::move(h2);
}

/// True if prefix is strictly worse than the same-size prefix of best.
bool prefix_worse(const IntMat& prefix, const IntMat& best) {
  for (Eigen::Index j = 0; j < prefix.cols(); ++j)
    for (Eigen::Index i = 0; i < prefix.rows(); ++i) {
      if (prefix(i, j) != best(i, j)) return prefix(i, j) > best(i, j);
    }
  return false;
}

}  // namespace

NormalForm normal_form(const LatticePolytope& p) {
  const int k = p.dim();
  const IntMat& verts = p.vertex_matrix();
  const Eigen::Index n = verts.cols();

  std::optional<IntMat> best;
  std::vector<bool> used(static_cast<size_t>(n), false);

  auto finish = [&](const NfState& st) {
    std::vector<IntVec> rest;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!used[static_cast<size_t>(j)]) rest.push_back(st.u * verts.col(j));
    std::sort(rest.begin(), rest.end(), VecLess{});
    IntMat full(k, n);
    full.leftCols(st.h.cols()) = st.h;
    for (size_t i = 0; i < rest.size(); ++i) full.col(st.h.cols() + static_cast<Eigen::Index>(i)) = rest[i];
    if (!best || lex_less_colmajor(full, *best)) best = full;
  };

  auto dfs = [&](auto&& self, const NfState& st) -> void {
    if (best && prefix_worse(st.h, *best)) return;
    if (st.rank == k) {
      finish(st);
      return;
    }
    if (st.h.cols() == n) return;  // cannot happen for full-dimensional input
    for (Eigen::Index j = 0; j < n; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      NfState next = st;
      nf_append(next, verts.col(j));
      used[static_cast<size_t>(j)] = true;
      self(self, next);
      used[static_cast<size_t>(j)] = false;
    }
  };

  NfState init;
  init.h = IntMat(k, 0);
  init.u = identity(k);
  dfs(dfs, init);
  return NormalForm{*best};
}

LatticePolytope polytope_of(const NormalForm& nf) {
  return convex_hull(columns_of(nf.matrix), static_cast<int>(nf.matrix.rows()));
}

std::vector<NormalForm> enumerate_reflexive(int dim, int box) {
  if (dim != 1 && dim != 2)
    throw std::invalid_argument(
        "enumerate_reflexive: only dimensions 1 and 2 are classified here; "
        "3D data comes from ingestion");
  if (dim == 1) {
    // The only reflexive segment: both facets at lattice distance 1.
    LatticePolytope seg = convex_hull({make_vec({-1}), make_vec({1})}, 1);
    return {normal_form(seg)};
  }

  // Vertices of reflexive polygons are primitive, and every edge lies on a
  // line <n,x> = -1.  Enumerate convex single-winding cycles in the directed
  // graph of such edges inside the box, then dedupe by normal form.
  std::vector<IntVec> pts;
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y) {
      if (x == 0 && y == 0) continue;
      IntVec v = make_vec({x, y});
      if (content(v) == 1) pts.push_back(v);
    }
  std::sort(pts.begin(), pts.end(), VecLess{});
  const int n = static_cast<int>(pts.size());

  // edge a->b is valid iff cross(a,b) = gcd(b-a): the line through a and b
  // then lies at lattice distance exactly 1 on the origin side.
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Int cr = cross2(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)]);
      if (cr <= 0) continue;
      if (cr == content(IntVec(pts[static_cast<size_t>(j)] - pts[static_cast<size_t>(i)])))
        adj[static_cast<size_t>(i)].push_back(j);
    }

  std::set<std::string> seen;
  std::vector<NormalForm> classes;
  std::vector<int> path;

  auto emit_cycle = [&]() {
    std::vector<IntVec> cycle;
    for (int idx : path) cycle.push_back(pts[static_cast<size_t>(idx)]);
    LatticePolytope poly = convex_hull(cycle, 2);
    if (!is_reflexive(poly)) return;  // cannot happen; cheap belt
    NormalForm nf = normal_form(poly);
    if (seen.insert(nf.key()).second) classes.push_back(nf);
  };

  auto turn_ok = [&](int a, int b, int c) {
    IntVec u = pts[static_cast<size_t>(b)] - pts[static_cast<size_t>(a)];
    IntVec v = pts[static_cast<size_t>(c)] - pts[static_cast<size_t>(b)];
    return cross2(u, v) > 0;
  };

  auto dfs = [&](auto&& self, int start) -> void {
    int last = path.back();
    for (int next : adj[static_cast<size_t>(last)]) {
      if (next == start) {
        if (path.size() >= 3 && turn_ok(path[path.size() - 2], last, start) &&
            turn_ok(last, start, path[1]))
          emit_cycle();
        continue;
      }
      if (next < start) continue;  // canonical start: lexicographic minimum
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      // single winding: angular position strictly increases from the start
      if (!angle_less(pts[static_cast<size_t>(start)], pts[static_cast<size_t>(last)],
                      pts[static_cast<size_t>(next)]) &&
          last != start)
        continue;
      if (path.size() >= 2 && !turn_ok(path[path.size() - 2], last, next)) continue;
      path.push_back(next);
      self(self, start);
      path.pop_back();
    }
  };

  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    dfs(dfs, s);
  }

  std::sort(classes.begin(), classes.end());
  return classes;
}

}  // namespace rk3
