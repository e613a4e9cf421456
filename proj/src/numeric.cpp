#include "rk3/numeric.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rk3 {

IntVec make_vec(std::initializer_list<long> entries) {
  IntVec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long e : entries) v(i++) = e;
  return v;
}

IntMat make_mat(std::initializer_list<std::initializer_list<long>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r > 0 ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  IntMat m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c)
      throw std::invalid_argument("make_mat: ragged rows");
    Eigen::Index j = 0;
    for (long e : row) m(i, j++) = e;
    ++i;
  }
  return m;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

bool lex_less(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

bool lex_less_colmajor(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

IntMat from_columns(const std::vector<IntVec>& cols) {
  if (cols.empty()) return IntMat(0, 0);
  IntMat m(cols.front().size(), static_cast<Eigen::Index>(cols.size()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (cols[static_cast<size_t>(j)].size() != m.rows())
      throw std::invalid_argument("from_columns: mixed dimensions");
    m.col(j) = cols[static_cast<size_t>(j)];
  }
  return m;
}

std::vector<IntVec> columns_of(const IntMat& m) {
  std::vector<IntVec> cols;
  cols.reserve(static_cast<size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return cols;
}

IntMat sorted_columns(const IntMat& m) {
  auto cols = columns_of(m);
  std::sort(cols.begin(), cols.end(), VecLess{});
  return from_columns(cols);
}

std::string vec_str(const IntVec& v) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v(i);
  }
  return out.str();
}

std::string mat_str(const IntMat& m) {
  std::ostringstream out;
  out << '[' << m.rows() << 'x' << m.cols() << ']';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out << ';';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j);
    }
  }
  return out.str();
}

IntMat mat_from_str(const std::string& s) {
  if (s.empty() || s[0] != '[') throw std::invalid_argument("mat_from_str: missing shape prefix");
  const size_t close = s.find(']');
  const size_t x = s.find('x');
  if (close == std::string::npos || x == std::string::npos || x > close)
    throw std::invalid_argument("mat_from_str: malformed shape prefix");
  long r = 0, c = 0;
  try {
    r = std::stol(s.substr(1, x - 1));
    c = std::stol(s.substr(x + 1, close - x - 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("mat_from_str: malformed shape prefix");
  }
  if (r < 0 || c < 0) throw std::invalid_argument("mat_from_str: negative shape");
  IntMat m(r, c);
  std::string body = s.substr(close + 1);
  std::istringstream rows(body);
  std::string row;
  long i = 0;
  while (std::getline(rows, row, ';')) {
    if (i >= r) throw std::invalid_argument("mat_from_str: too many rows");
    std::istringstream cells(row);
    std::string cell;
    long j = 0;
    while (std::getline(cells, cell, ',')) {
      if (j >= c) throw std::invalid_argument("mat_from_str: too many columns");
      try {
        m(i, j) = Int(cell);
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("mat_from_str: bad integer '" + cell + "'");
      }
      ++j;
    }
    if (j != c) throw std::invalid_argument("mat_from_str: short row");
    ++i;
  }
  if (i != r && !(r == 0 || c == 0)) throw std::invalid_argument("mat_from_str: short matrix");
  return m;
}

}  // namespace rk3
