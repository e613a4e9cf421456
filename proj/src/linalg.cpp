#include "rk3/linalg.hpp"

#include <algorithm>
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

bool row_is_zero(const IntMat& m, Eigen::Index i) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    if (m(i, j) != 0) return false;
  return true;
}

}  // namespace

Int FiniteAbelianGroup::order() const {
  Int o = 1;
  for (const Int& d : invariant_factors) o *= d;
  return o;
}

std::string FiniteAbelianGroup::str() const {
  if (invariant_factors.empty()) return "1";
  std::ostringstream out;
  for (size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) out << ' ';
    out << invariant_factors[i];
  }
  return out.str();
}

Int determinant(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n > 8) throw std::invalid_argument("determinant: dimension capped at 8");
  if (n == 0) return 1;
  IntMat a = m;
  Int sign = 1;
  Int prev = 1;
  for (Eigen::Index t = 0; t + 1 < n; ++t) {
    if (a(t, t) == 0) {
      Eigen::Index p = -1;
      for (Eigen::Index i = t + 1; i < n; ++i)
        if (a(i, t) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.row(t).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = t + 1; i < n; ++i)
      for (Eigen::Index j = t + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(t, t) - a(i, t) * a(t, j)) / prev;  // exact by Bareiss
    prev = a(t, t);
  }
  return sign * a(n - 1, n - 1);
}

HermiteForm hermite_normal_form(const IntMat& m) {
  IntMat h = m;
  const Eigen::Index rows = h.rows(), cols = h.cols();
  IntMat u = identity(rows);
  Eigen::Index r = 0;
  for (Eigen::Index j = 0; j < cols && r < rows; ++j) {
    // gcd-reduce column j among rows >= r until a single nonzero remains
    bool have_pivot = false;
    while (true) {
      Eigen::Index p = -1;
      for (Eigen::Index i = r; i < rows; ++i) {
        if (h(i, j) == 0) continue;
        if (p < 0 || abs(h(i, j)) < abs(h(p, j))) p = i;
      }
      if (p < 0) break;
      have_pivot = true;
      if (p != r) {
        h.row(r).swap(h.row(p));
        u.row(r).swap(u.row(p));
      }
      bool again = false;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (h(i, j) == 0) continue;
        Int q = trunc_div(h(i, j), h(r, j));
        if (q != 0) {
          h.row(i) -= q * h.row(r);
          u.row(i) -= q * u.row(r);
        }
        if (h(i, j) != 0) again = true;
      }
      if (!again) break;
    }
    if (!have_pivot) continue;
    if (h(r, j) < 0) {
      h.row(r) = -h.row(r);
      u.row(r) = -u.row(r);
    }
    for (Eigen::Index i = 0; i < r; ++i) {
      Int q = floor_div(h(i, j), h(r, j));
      if (q != 0) {
        h.row(i) -= q * h.row(r);
        u.row(i) -= q * u.row(r);
      }
    }
    ++r;
  }
  return {h, u};
}

SmithForm smith_normal_form(const IntMat& m) {
  IntMat s = m;
  const Eigen::Index rows = s.rows(), cols = s.cols();
  IntMat u = identity(rows);
  IntMat v = identity(cols);
  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing submatrix into the pivot slot
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j) {
          if (s(i, j) == 0) continue;
          if (pi < 0 || abs(s(i, j)) < abs(s(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        pi = t;  // trailing submatrix all zero; done with this t
        break;
      }
      if (pi != t) {
        s.row(t).swap(s.row(pi));
        u.row(t).swap(u.row(pi));
      }
      if (pj != t) {
        s.col(t).swap(s.col(pj));
        v.col(t).swap(v.col(pj));
      }
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Int q = trunc_div(s(i, t), s(t, t));
        if (q != 0) {
          s.row(i) -= q * s.row(t);
          u.row(i) -= q * u.row(t);
        }
        if (s(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Int q = trunc_div(s(t, j), s(t, t));
        if (q != 0) {
          s.col(j) -= q * s.col(t);
          v.col(j) -= q * v.col(t);
        }
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the rest of the submatrix for d1 | d2 | ...
      bool fixed = false;
      for (Eigen::Index i = t + 1; i < rows && !fixed; ++i)
        for (Eigen::Index j = t + 1; j < cols && !fixed; ++j) {
          if (s(i, j) % s(t, t) != 0) {
            s.row(t) += s.row(i);
            u.row(t) += u.row(i);
            fixed = true;
          }
        }
      if (!fixed) break;
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      u.row(t) = -u.row(t);
    }
  }
  return {s, u, v};
}

IntVec primitive(const IntVec& v) {
  Int g = content(v);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  IntVec w = v;
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) /= g;
  return w;
}

IntMat kernel_basis(const IntMat& m) {
  HermiteForm hf = hermite_normal_form(IntMat(m.transpose()));
  std::vector<Eigen::Index> zero_rows;
  for (Eigen::Index i = 0; i < hf.h.rows(); ++i)
    if (row_is_zero(hf.h, i)) zero_rows.push_back(i);
  IntMat k(static_cast<Eigen::Index>(zero_rows.size()), m.cols());
  for (size_t r = 0; r < zero_rows.size(); ++r) k.row(static_cast<Eigen::Index>(r)) = hf.u.row(zero_rows[r]);
  return k;
}

std::pair<IntVec, Int> solve_cramer(const IntMat& a, const IntVec& b) {
  if (a.rows() != a.cols() || a.rows() != b.size())
    throw std::invalid_argument("solve_cramer: shape mismatch");
  Int det = determinant(a);
  if (det == 0) throw std::invalid_argument("solve_cramer: singular matrix");
  IntVec x(a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    IntMat aj = a;
    aj.col(j) = b;
    x(j) = determinant(aj);
  }
  return {x, det};
}

IntMat adjugate(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("adjugate: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n > 8) throw std::invalid_argument("adjugate: dimension capped at 8");
  if (n == 0) return m;
  IntMat adj(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc) = m(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      adj(i, j) = cof;
    }
  return adj;
}

IntMat inverse_unimodular(const IntMat& u) {
  Int det = determinant(u);
  if (det != 1 && det != -1)
    throw std::invalid_argument("inverse_unimodular: determinant is not +-1");
  IntMat inv = adjugate(u);
  if (det == -1) inv = -inv;
  return inv;
}

FiniteAbelianGroup lattice_quotient(const RationalLattice& sub, const RationalLattice& sup) {
  if (sub.basis.rows() != sub.basis.cols() || sup.basis.rows() != sup.basis.cols())
    throw std::invalid_argument("lattice_quotient: bases must be square");
  if (sub.basis.rows() != sup.basis.rows())
    throw std::invalid_argument("lattice_quotient: dimension mismatch");
  if (sub.den <= 0 || sup.den <= 0)
    throw std::invalid_argument("lattice_quotient: denominators must be positive");
  const Eigen::Index n = sub.basis.rows();
  if (determinant(sub.basis) == 0 || determinant(sup.basis) == 0)
    throw std::invalid_argument("lattice_quotient: rank-deficient basis");

  // X * (sup.basis/sup.den) = sub.basis/sub.den with X integer iff sub <= sup.
  IntMat at = (sup.basis * sub.den).transpose();
  IntMat bt = (sub.basis * sup.den).transpose();
  IntMat x(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    auto [num, den] = solve_cramer(at, IntVec(bt.col(j)));
    for (Eigen::Index i = 0; i < n; ++i) {
      if (num(i) % den != 0)
        throw std::invalid_argument("lattice_quotient: sub-lattice not contained in sup-lattice");
      x(j, i) = num(i) / den;
    }
  }

  SmithForm sf = smith_normal_form(x);
  FiniteAbelianGroup g;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (sf.s(i, i) == 0) throw std::invalid_argument("lattice_quotient: rank-deficient quotient");
    if (sf.s(i, i) >= 2) g.invariant_factors.push_back(sf.s(i, i));
  }
  return g;
}

}  // namespace rk3
