#include "rk3/families.hpp"

#include "rk3/invariants.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rk3 {

namespace {

std::vector<IntVec> nonzero_lattice_points(const LatticePolytope& p) {
  std::vector<IntVec> out;
  for (const IntVec& x : lattice_points(p)) {
    bool zero = true;
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (x(i) != 0) zero = false;
    if (!zero) out.push_back(x);
  }
  return out;
}

bool is_zero(const IntVec& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i) != 0) return false;
  return true;
}

void validate_rays(const LatticePolytope& delta, const std::vector<IntVec>& rays,
                   const char* what) {
  if (rays.empty()) throw std::invalid_argument(std::string(what) + ": empty ray list");
  for (const IntVec& v : rays) {
    if (v.size() != delta.dim())
      throw std::invalid_argument(std::string(what) + ": ray dimension mismatch");
    if (is_zero(v) || !delta.contains(v))
      throw std::invalid_argument(std::string(what) +
                                  ": rays must be nonzero lattice points of the polytope");
  }
}

std::string factor_key(const FiniteAbelianGroup& g) {
  std::ostringstream out;
  for (size_t i = 0; i < g.invariant_factors.size(); ++i) {
    if (i) out << ',';
    out << g.invariant_factors[i];
  }
  return out.str();
}

}  // namespace

SGRankTable SGRankTable::parse(std::istream& in) {
  SGRankTable t;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = line;
    s.erase(0, s.find_first_not_of(" \t"));
    if (s.empty() || s[0] == '#') continue;
    size_t colon = s.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("sg-rank table line " + std::to_string(line_no) + ": missing ':'");
    std::string key = s.substr(0, colon);
    long rank = 0;
    try {
      rank = std::stol(s.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::runtime_error("sg-rank table line " + std::to_string(line_no) + ": bad rank");
    }
    if (!key.empty() && (key[0] < '0' || key[0] > '9'))
      t.by_name[key] = rank;
    else
      t.by_factors[key] = rank;
  }
  return t;
}

SGRankTable SGRankTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("sg-rank table: cannot open " + path);
  return parse(in);
}

std::optional<long> SGRankTable::rank(const FiniteAbelianGroup& g) const {
  if (g.trivial()) return 0;  // S_G vanishes for the trivial action
  auto it = by_factors.find(factor_key(g));
  if (it == by_factors.end()) return std::nullopt;
  return it->second;
}

std::vector<MonomialExponent> anticanonical_monomials(const LatticePolytope& delta,
                                                      const std::vector<IntVec>& rays) {
  validate_rays(delta, rays, "anticanonical_monomials");
  LatticePolytope dual = polar(delta);
  std::vector<MonomialExponent> out;
  for (const IntVec& x : lattice_points(dual)) {
    MonomialExponent m;
    m.point = x;
    m.exponents.resize(static_cast<Eigen::Index>(rays.size()));
    for (size_t j = 0; j < rays.size(); ++j) {
      Int e = rays[j].dot(x) + 1;
      if (e < 0)
        throw std::invalid_argument(
            "anticanonical_monomials: negative exponent; point outside the dual polytope");
      m.exponents(static_cast<Eigen::Index>(j)) = e;
    }
    out.push_back(std::move(m));
  }
  return out;
}

FamilySpec symmetric_family(const LatticePolytope& delta, const PolytopeAutGroup& hprime) {
  // subgroup check: every element must be a vertex-set symmetry of delta
  const auto verts = delta.vertices();
  for (const IntMat& h : hprime.elements) {
    Int d = determinant(h);
    if (d != 1 && d != -1)
      throw std::invalid_argument("symmetric_family: group element is not unimodular");
    for (const IntVec& v : verts) {
      IntVec image = h * v;
      if (!std::binary_search(verts.begin(), verts.end(), image, VecLess{}))
        throw std::invalid_argument(
            "symmetric_family: group is not a subgroup of the polytope's automorphisms");
    }
  }

  LatticePolytope dual = polar(delta);
  // h acts on the dual lattice by the inverse transpose
  PolytopeAutGroup dual_action;
  dual_action.polytope = dual;
  for (const IntMat& h : hprime.elements)
    dual_action.elements.push_back(IntMat(inverse_unimodular(h).transpose()));

  FamilySpec spec;
  spec.delta = delta;
  spec.ray_points = nonzero_lattice_points(delta);
  spec.coefficient_classes = orbits(dual_action, nonzero_lattice_points(dual));
  spec.parameter_count = static_cast<int>(spec.coefficient_classes.size());
  return spec;
}

FiniteAbelianGroup symplectic_torus_group(const LatticePolytope& delta,
                                          const std::vector<IntVec>& support,
                                          const std::vector<IntVec>& rays) {
  if (delta.dim() != 3 || !is_reflexive(delta))
    throw std::invalid_argument("symplectic_torus_group: requires a 3D reflexive polytope");
  if (support.empty()) throw std::invalid_argument("symplectic_torus_group: empty support");
  validate_rays(delta, rays, "symplectic_torus_group");

  const int k = delta.dim();
  const Eigen::Index q = static_cast<Eigen::Index>(rays.size());
  LatticePolytope dual = polar(delta);
  for (const IntVec& x : support)
    if (!dual.contains(x))
      throw std::invalid_argument("symplectic_torus_group: support point outside the dual polytope");

  std::vector<IntVec> s = support;
  std::sort(s.begin(), s.end(), VecLess{});
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const IntVec x0 = s.front();

  // exponent vectors E(x), entries <v_j, x> + 1
  IntMat ray_rows(q, k);
  for (Eigen::Index j = 0; j < q; ++j) ray_rows.row(j) = rays[static_cast<size_t>(j)].transpose();
  auto exponents = [&](const IntVec& x) {
    IntVec e = ray_rows * x;
    for (Eigen::Index j = 0; j < q; ++j) e(j) += 1;
    return e;
  };
  const IntVec e0 = exponents(x0);

  // Scaling constraints in phase space (Q/Z)^q, one row per monomial plus
  // the determinant row; and the same constraints written in the dual
  // lattice after factoring out the torus kernel.
  const Eigen::Index m = static_cast<Eigen::Index>(s.size());
  IntMat phase_rows(m, q);
  IntMat reduced(m, k);  // = phase_rows * ray_rows^T factored through x-space
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    const IntVec& x = s[static_cast<size_t>(i + 1)];
    phase_rows.row(i) = (exponents(x) - e0).transpose();
    reduced.row(i) = (x - x0).transpose();
  }
  // det(D) = lambda: row 1 - E(x0); depends only on -x0 after reduction
  for (Eigen::Index j = 0; j < q; ++j) phase_rows(m - 1, j) = 1 - e0(j);
  reduced.row(m - 1) = -x0.transpose();

  if (IntMat(reduced * ray_rows.transpose()) != phase_rows)
    throw std::logic_error("symplectic_torus_group: constraint factorization mismatch");
  // with the full product monomial in the support, the det row is implied
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    if (is_zero(s[static_cast<size_t>(i + 1)])) {
      if (IntVec(phase_rows.row(i).transpose()) != IntVec(phase_rows.row(m - 1).transpose()))
        throw std::logic_error("symplectic_torus_group: determinant row disagrees with x = 0");
    }
  }

  // Solutions b in (Q/Z)^k of reduced * b = 0: the lattice {b : reduced*b
  // integral} over Z^k carries exactly A/K.
  SmithForm sf = smith_normal_form(reduced);
  IntVec d(k);
  for (int i = 0; i < k; ++i) {
    d(i) = (i < std::min<Eigen::Index>(m, k)) ? sf.s(i, i) : 0;
    if (d(i) == 0)
      throw std::invalid_argument(
          "symplectic_torus_group: support does not determine a finite group");
  }
  Int common = 1;
  for (int i = 0; i < k; ++i) common = lcm(common, d(i));
  IntMat sup(k, k);
  for (int i = 0; i < k; ++i) sup.row(i) = Int(common / d(i)) * sf.v.transpose().row(i);

  RationalLattice sub{IntMat(IntMat::Identity(k, k)), 1};
  RationalLattice sup_lattice{sup, common};
  return lattice_quotient(sub, sup_lattice);
}

FiniteAbelianGroup symplectic_torus_group(const LatticePolytope& delta,
                                          const std::vector<IntVec>& support) {
  return symplectic_torus_group(delta, support, nonzero_lattice_points(delta));
}

long picard_lower_bound(const LatticePolytope& delta, const FiniteAbelianGroup& g,
                        const SGRankTable& table) {
  auto r = table.rank(g);
  if (!r)
    throw std::invalid_argument("picard_lower_bound: no attested S_G rank for invariant factors (" +
                                factor_key(g) + ")");
  return rho_tor(delta) + rk3::delta(delta) + *r;  // rho_cor + rank S_G
}

std::vector<OneParameterClass> search_one_parameter(const std::vector<LatticePolytope>& db) {
  std::vector<OneParameterClass> out;
  std::set<std::string> seen;
  for (const LatticePolytope& p : db) {
    if (p.dim() != 3)
      throw std::invalid_argument("search_one_parameter: database entries must be 3-dimensional");
    if (!is_reflexive(p))
      throw std::invalid_argument("search_one_parameter: database entries must be reflexive");
    const auto pts = lattice_points(p);
    if (static_cast<Eigen::Index>(pts.size()) != p.vertex_count() + 1) continue;
    PolytopeAutGroup rot = orientation_preserving(automorphism_group(p));
    if (!is_vertex_transitive(rot, p)) continue;
    NormalForm nf = normal_form(p);
    if (!seen.insert(nf.key()).second) continue;
    out.push_back({nf, identify_small_group(rot)});
  }
  std::sort(out.begin(), out.end(),
            [](const OneParameterClass& a, const OneParameterClass& b) { return a.nf < b.nf; });
  return out;
}

}  // namespace rk3
