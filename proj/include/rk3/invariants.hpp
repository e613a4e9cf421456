/**
 * Numerical invariants of reflexive polytopes and the hypersurfaces they
 * define: lattice-point counts, toric Picard rank, the toric correction
 * term, corrected rank, the rank-20 mirror identity for K3 surfaces (k=3),
 * and the Hodge numbers h^{1,1}, h^{k-2,1} for k=4.
 */

#ifndef RK3_INVARIANTS_HPP
#define RK3_INVARIANTS_HPP

#include "rk3/polytope.hpp"
#include "rk3/symmetry.hpp"

#include <optional>
#include <string>

namespace rk3 {

/// rank Pic_tor = l(p) - 4 - sum of facet interior counts.  3D reflexive only.
long rho_tor(const LatticePolytope& p);

/// Toric correction term: sum over edges of l*(edge) * l*(dual edge).
/// 3D reflexive only.
long delta(const LatticePolytope& p);

/// Anticanonical h^{1,1} count: l(p) - k - 1 - sum_{codim 1} l* + sum_{codim 2} l* l*-dual
/// at k = 4.
long h11(const LatticePolytope& p);

/// The dual-side count; equals h11(polar(p)).  k = 4 only.
long h_k21(const LatticePolytope& p);

struct MirrorCheck {
  long rho_tor = 0;
  long delta = 0;
  long rho_tor_dual = 0;
  long delta_dual = 0;
  bool ok = false;  // rho + delta + rho_dual = 20 and delta = delta_dual
};

MirrorCheck mirror_rank_check(const LatticePolytope& p);

/// Per-polytope results; what gets persisted by the result store.
struct InvariantRecord {
  std::string nf_key;
  std::string mirror_nf_key;
  int k = 0;
  long l = 0;
  long l_dual = 0;
  long rho_tor = 0;  // k = 3 fields; zero otherwise
  long delta = 0;
  long rho_cor = 0;
  std::optional<long> h11;  // k = 4 only
  std::optional<long> h_k21;
  bool mirror_ok = false;

  bool operator==(const InvariantRecord&) const = default;
};

/// One-pass computation sharing the polar polytope and both face lattices.
/// Requires a reflexive polytope; k = 3 fills the rank fields, k = 4 the
/// Hodge fields, lower dimensions only the counts.
InvariantRecord compute_invariants(const LatticePolytope& p);

}  // namespace rk3

#endif
