#include "rk3/ks_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rk3 {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

bool skippable(const std::string& line) {
  std::string t = trim(line);
  return t.empty() || t[0] == '#';
}

[[noreturn]] void parse_fail(long line_no, const std::string& msg) {
  throw std::runtime_error("ks parse error at line " + std::to_string(line_no) + ": " + msg);
}

bool parse_int_token(const std::string& tok, Int& out) {
  if (tok.empty()) return false;
  size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (start == tok.size()) return false;
  for (size_t i = start; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9') return false;
  out = Int(tok);
  return true;
}

}  // namespace

std::vector<IntVec> KSEntry::vertex_list() const {
  std::vector<IntVec> verts;
  if (vertices_are_columns()) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) verts.push_back(matrix.col(j));
  } else {
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) verts.push_back(matrix.row(i).transpose());
  }
  return verts;
}

LatticePolytope KSEntry::polytope() const { return convex_hull(vertex_list(), dim()); }

std::vector<KSEntry> parse_ks(std::istream& in) {
  std::vector<KSEntry> entries;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;

    KSEntry e;
    e.source_line = line_no;
    std::istringstream header(line);
    std::string tok_r, tok_c;
    if (!(header >> tok_r >> tok_c)) parse_fail(line_no, "malformed header '" + trim(line) + "'");
    Int r, c;
    if (!parse_int_token(tok_r, r) || !parse_int_token(tok_c, c))
      parse_fail(line_no, "malformed header '" + trim(line) + "'");
    if (r <= 0 || c <= 0 || r > 64 || c > 64) parse_fail(line_no, "implausible matrix shape");
    e.rows = static_cast<int>(r.get_si());
    e.cols = static_cast<int>(c.get_si());
    if (std::min(e.rows, e.cols) > 4)
      parse_fail(line_no, "polytope dimension " + std::to_string(std::min(e.rows, e.cols)) +
                              " out of range 1..4");
    std::string rest;
    std::getline(header, rest);
    e.annotation = trim(rest);

    e.matrix = IntMat(e.rows, e.cols);
    for (int i = 0; i < e.rows; ++i) {
      std::string data;
      do {
        if (!std::getline(in, data)) parse_fail(line_no, "unexpected end of file inside matrix");
        ++line_no;
      } while (skippable(data));
      std::istringstream cells(data);
      std::string tok;
      int j = 0;
      while (cells >> tok) {
        if (j >= e.cols) parse_fail(line_no, "too many entries in matrix row");
        Int v;
        if (!parse_int_token(tok, v)) parse_fail(line_no, "non-integer token '" + tok + "'");
        e.matrix(i, j++) = v;
      }
      if (j != e.cols)
        parse_fail(line_no, "expected " + std::to_string(e.cols) + " entries, got " +
                                std::to_string(j));
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<KSEntry> parse_ks_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_ks(in);
}

void emit_ks(std::ostream& out, const KSEntry& e) {
  out << e.rows << ' ' << e.cols;
  if (!e.annotation.empty()) out << ' ' << e.annotation;
  out << '\n';
  for (int i = 0; i < e.rows; ++i) {
    for (int j = 0; j < e.cols; ++j) {
      if (j) out << ' ';
      out << e.matrix(i, j);
    }
    out << '\n';
  }
}

KSEntry make_ks_entry(const LatticePolytope& p, std::string annotation) {
  KSEntry e;
  e.rows = p.dim();
  e.cols = static_cast<int>(p.vertex_count());
  e.matrix = p.vertex_matrix();
  e.annotation = std::move(annotation);
  return e;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace {

std::string record_line(const InvariantRecord& r) {
  std::ostringstream out;
  out << "record nf=" << r.nf_key << " mirror_nf=" << r.mirror_nf_key << " k=" << r.k
      << " l=" << r.l << " l_dual=" << r.l_dual;
  if (r.k == 3)
    out << " rho_tor=" << r.rho_tor << " delta=" << r.delta << " rho_cor=" << r.rho_cor;
  if (r.h11) out << " h11=" << *r.h11;
  if (r.h_k21) out << " h_k21=" << *r.h_k21;
  out << " mirror_ok=" << (r.mirror_ok ? 1 : 0);
  return out.str();
}

InvariantRecord record_from_line(const std::string& line, long line_no) {
  std::istringstream in(line);
  std::string word;
  in >> word;  // "record"
  InvariantRecord r;
  bool have_nf = false, have_k = false, have_l = false, have_ld = false, have_mirror = false;
  while (in >> word) {
    size_t eq = word.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("store line " + std::to_string(line_no) + ": bad field '" + word +
                               "'");
    std::string key = word.substr(0, eq);
    std::string val = word.substr(eq + 1);
    try {
      if (key == "nf") {
        r.nf_key = val;
        have_nf = true;
      } else if (key == "mirror_nf") {
        r.mirror_nf_key = val;
      } else if (key == "k") {
        r.k = std::stoi(val);
        have_k = true;
      } else if (key == "l") {
        r.l = std::stol(val);
        have_l = true;
      } else if (key == "l_dual") {
        r.l_dual = std::stol(val);
        have_ld = true;
      } else if (key == "rho_tor") {
        r.rho_tor = std::stol(val);
      } else if (key == "delta") {
        r.delta = std::stol(val);
      } else if (key == "rho_cor") {
        r.rho_cor = std::stol(val);
      } else if (key == "h11") {
        r.h11 = std::stol(val);
      } else if (key == "h_k21") {
        r.h_k21 = std::stol(val);
      } else if (key == "mirror_ok") {
        r.mirror_ok = (val == "1");
        have_mirror = true;
      } else {
        throw std::runtime_error("unknown field '" + key + "'");
      }
    } catch (const std::runtime_error&) {
      throw;
    } catch (const std::exception&) {
      throw std::runtime_error("store line " + std::to_string(line_no) + ": bad value for '" + key +
                               "'");
    }
  }
  if (!have_nf || !have_k || !have_l || !have_ld || !have_mirror)
    throw std::runtime_error("store line " + std::to_string(line_no) + ": missing required fields");
  return r;
}

constexpr const char* kStoreMagic = "rk3-store 1";

}  // namespace

void write_records(std::ostream& out, const ResultStore& store) {
  out << kStoreMagic << '\n';
  std::string digest_input;
  for (const auto& [key, rec] : store.records) {
    (void)key;
    digest_input += record_line(rec);
    digest_input += '\n';
  }
  for (const auto& [k, v] : store.metadata) {
    if (k == "records_digest") continue;  // always recomputed
    out << "meta " << k << ' ' << v << '\n';
  }
  out << "meta records_digest fnv1a64:" << fnv1a64_hex(digest_input) << '\n';
  out << digest_input;
}

ResultStore read_records(std::istream& in, std::vector<std::string>* warnings) {
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };
  ResultStore store;
  std::string line;
  long line_no = 0;
  bool first = true;
  std::string digest_input;
  std::string declared_digest;
  while (std::getline(in, line)) {
    ++line_no;
    if (first) {
      first = false;
      if (line != kStoreMagic) {
        warn("store version mismatch: expected '" + std::string(kStoreMagic) + "', got '" + line +
             "'");
        if (line.rfind("rk3-store", 0) == 0) continue;
        // not even a store header: treat as malformed
        throw std::runtime_error("store line 1: missing 'rk3-store' header");
      }
      continue;
    }
    if (trim(line).empty()) continue;
    if (line.rfind("meta ", 0) == 0) {
      std::istringstream meta(line.substr(5));
      std::string key;
      meta >> key;
      std::string val;
      std::getline(meta, val);
      val = trim(val);
      if (key == "records_digest") {
        declared_digest = val;
      } else {
        store.metadata.emplace_back(key, val);
      }
      continue;
    }
    if (line.rfind("record", 0) == 0) {
      InvariantRecord rec = record_from_line(line, line_no);
      digest_input += line;
      digest_input += '\n';
      if (!store.records.emplace(rec.nf_key, rec).second)
        throw std::runtime_error("store line " + std::to_string(line_no) + ": duplicate key " +
                                 rec.nf_key);
      continue;
    }
    throw std::runtime_error("store line " + std::to_string(line_no) + ": unrecognized line");
  }
  if (!declared_digest.empty() && declared_digest != "fnv1a64:" + fnv1a64_hex(digest_input))
    warn("records digest mismatch: store contents changed since it was written");
  return store;
}

void write_records_file(const std::string& path, const ResultStore& store) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_records(out, store);
}

ResultStore read_records_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_records(in, warnings);
}

}  // namespace rk3
