/**
 * Arbitrary-precision integer scalar and dense matrix/vector types shared by
 * every module.  All arithmetic in this project is exact: the scalar is
 * GMP's mpz_class and Eigen supplies the dense containers and expression
 * templates on top of it.  No floating point anywhere.
 */

#ifndef RK3_NUMERIC_HPP
#define RK3_NUMERIC_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <initializer_list>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

}  // namespace Eigen

namespace rk3 {

using Int = mpz_class;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int trunc_div(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

IntVec make_vec(std::initializer_list<long> entries);
IntMat make_mat(std::initializer_list<std::initializer_list<long>> rows);

/// gcd of all entries, nonnegative; 0 for the zero vector.
Int content(const IntVec& v);

bool lex_less(const IntVec& a, const IntVec& b);
bool lex_less_colmajor(const IntMat& a, const IntMat& b);

struct VecLess {
  bool operator()(const IntVec& a, const IntVec& b) const { return lex_less(a, b); }
};

IntMat from_columns(const std::vector<IntVec>& cols);
std::vector<IntVec> columns_of(const IntMat& m);

/// Columns sorted lexicographically; canonical storage order for vertex sets.
IntMat sorted_columns(const IntMat& m);

std::string vec_str(const IntVec& v);
/// Compact matrix literal, e.g. "[2x3]1,0,-1;0,1,2".
std::string mat_str(const IntMat& m);
/// Inverse of mat_str; throws std::invalid_argument on malformed input.
IntMat mat_from_str(const std::string& s);

}  // namespace rk3

#endif
