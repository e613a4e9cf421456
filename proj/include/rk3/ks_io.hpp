/**
 * Kreuzer-Skarke text format ingestion/emission and the line-oriented
 * result store.
 *
 * KS entries are a header "rows cols [annotation]" followed by a rows x cols
 * integer block.  The polytope dimension is min(rows, cols); vertices are
 * the columns when rows <= cols, the rows otherwise.  Blank lines and lines
 * starting with '#' are skipped.
 */

#ifndef RK3_KS_IO_HPP
#define RK3_KS_IO_HPP

#include "rk3/invariants.hpp"
#include "rk3/polytope.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rk3 {

struct KSEntry {
  int rows = 0;
  int cols = 0;
  IntMat matrix;  // exactly as given in the file
  std::string annotation;
  long source_line = 0;  // header line number, 1-based

  int dim() const { return rows < cols ? rows : cols; }
  /// Vertices are columns iff rows <= cols (square resolves to columns).
  bool vertices_are_columns() const { return rows <= cols; }
  std::vector<IntVec> vertex_list() const;
  LatticePolytope polytope() const;

  bool operator==(const KSEntry& o) const {
    return rows == o.rows && cols == o.cols && matrix == o.matrix && annotation == o.annotation;
  }
};

/// Parses every entry of a stream; errors carry 1-based line numbers.
std::vector<KSEntry> parse_ks(std::istream& in);
std::vector<KSEntry> parse_ks_file(const std::string& path);

void emit_ks(std::ostream& out, const KSEntry& e);
KSEntry make_ks_entry(const LatticePolytope& p, std::string annotation = "");

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

/// Persistent invariant records keyed by normal form, plus tool metadata.
struct ResultStore {
  std::vector<std::pair<std::string, std::string>> metadata;  // ordered key/value
  std::map<std::string, InvariantRecord> records;             // nf_key -> record
};

/// Line-delimited text serialization; deterministic apart from the
/// "created" metadata line, which is excluded from the records digest.
void write_records(std::ostream& out, const ResultStore& store);
ResultStore read_records(std::istream& in, std::vector<std::string>* warnings = nullptr);

void write_records_file(const std::string& path, const ResultStore& store);
ResultStore read_records_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

}  // namespace rk3

#endif
