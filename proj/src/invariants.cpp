#include "rk3/invariants.hpp"

#include <stdexcept>

namespace rk3 {

namespace {

void require_dim(const LatticePolytope& p, int k, const char* what) {
  if (p.dim() != k)
    throw std::invalid_argument(std::string(what) + ": requires dimension " + std::to_string(k));
  if (!is_reflexive(p)) throw std::invalid_argument(std::string(what) + ": requires a reflexive polytope");
}

long facet_interior_sum(const FaceLattice& fl, int k) {
  long s = 0;
  for (const Face& f : fl.faces_of_dim(k - 1)) s += f.interior_count;
  return s;
}

/// Sum over codimension-2 faces of l*(face) * l*(dual face).
long codim2_correction(const LatticePolytope& p, const FaceLattice& fl, const LatticePolytope& dual,
                       const FaceLattice& dual_fl) {
  const int k = p.dim();
  long s = 0;
  for (const Face& f : fl.faces_of_dim(k - 2)) {
    Face df = dual_face(p, f, dual, dual_fl);
    s += f.interior_count * df.interior_count;
  }
  return s;
}

long rho_tor_counts(long l, const FaceLattice& fl, int k) { return l - 4 - facet_interior_sum(fl, k); }

long h11_counts(long l, const LatticePolytope& p, const FaceLattice& fl, const LatticePolytope& dual,
                const FaceLattice& dual_fl) {
  const int k = p.dim();
  return l - k - 1 - facet_interior_sum(fl, k) + codim2_correction(p, fl, dual, dual_fl);
}

}  // namespace

long rho_tor(const LatticePolytope& p) {
  require_dim(p, 3, "rho_tor");
  FaceLattice fl = face_lattice(p);
  return rho_tor_counts(static_cast<long>(lattice_points(p).size()), fl, 3);
}

long delta(const LatticePolytope& p) {
  require_dim(p, 3, "delta");
  FaceLattice fl = face_lattice(p);
  LatticePolytope q = polar(p);
  FaceLattice ql = face_lattice(q);
  return codim2_correction(p, fl, q, ql);
}

long h11(const LatticePolytope& p) {
  require_dim(p, 4, "h11");
  FaceLattice fl = face_lattice(p);
  LatticePolytope q = polar(p);
  FaceLattice ql = face_lattice(q);
  return h11_counts(static_cast<long>(lattice_points(p).size()), p, fl, q, ql);
}

long h_k21(const LatticePolytope& p) {
  require_dim(p, 4, "h_k21");
  return h11(polar(p));
}

MirrorCheck mirror_rank_check(const LatticePolytope& p) {
  require_dim(p, 3, "mirror_rank_check");
  LatticePolytope q = polar(p);
  FaceLattice fl = face_lattice(p);
  FaceLattice ql = face_lattice(q);
  MirrorCheck c;
  c.rho_tor = rho_tor_counts(static_cast<long>(lattice_points(p).size()), fl, 3);
  c.rho_tor_dual = rho_tor_counts(static_cast<long>(lattice_points(q).size()), ql, 3);
  // the two correction terms are computed independently, once from each side
  c.delta = codim2_correction(p, fl, q, ql);
  c.delta_dual = codim2_correction(q, ql, p, fl);
  c.ok = (c.rho_tor + c.delta + c.rho_tor_dual == 20) && (c.delta == c.delta_dual);
  return c;
}

InvariantRecord compute_invariants(const LatticePolytope& p) {
  if (!is_reflexive(p))
    throw std::invalid_argument("compute_invariants: requires a reflexive polytope");
  const int k = p.dim();
  LatticePolytope q = polar(p);

  InvariantRecord rec;
  rec.k = k;
  rec.nf_key = normal_form(p).key();
  rec.mirror_nf_key = normal_form(q).key();
  rec.l = static_cast<long>(lattice_points(p).size());
  rec.l_dual = static_cast<long>(lattice_points(q).size());

  if (k == 3) {
    FaceLattice fl = face_lattice(p);
    FaceLattice ql = face_lattice(q);
    rec.rho_tor = rho_tor_counts(rec.l, fl, 3);
    rec.delta = codim2_correction(p, fl, q, ql);
    rec.rho_cor = rec.rho_tor + rec.delta;
    long rho_dual = rho_tor_counts(rec.l_dual, ql, 3);
    long delta_dual = codim2_correction(q, ql, p, fl);
    rec.mirror_ok = (rec.rho_tor + rec.delta + rho_dual == 20) && (rec.delta == delta_dual);
  } else if (k == 4) {
    rec.h11 = h11(p);
    rec.h_k21 = h_k21(p);
    rec.mirror_ok = (*rec.h11 == h_k21(q)) && (*rec.h_k21 == h11(q));
  } else {
    rec.mirror_ok = true;
  }
  return rec;
}

}  // namespace rk3
