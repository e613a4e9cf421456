#include "doctest.h"

#include "rk3/ks_io.hpp"
#include "test_polytopes_common.hpp"

#include <set>
#include <sstream>

using namespace rk3;
using namespace rk3::testing;

namespace {

const char* kSamplePath = RK3_DATA_DIR "/sample_ks.txt";

}  // namespace

TEST_CASE("parse_ks: the quartic simplex, both orientations") {
  std::istringstream in("3 4\n1 0 0 -1\n0 1 0 -1\n0 0 1 -1\n");
  auto entries = parse_ks(in);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].dim() == 3);
  CHECK(entries[0].vertices_are_columns());
  CHECK(entries[0].polytope() == simplex3());

  std::istringstream transposed("4 3\n1 0 0\n0 1 0\n0 0 1\n-1 -1 -1\n");
  auto t = parse_ks(transposed);
  REQUIRE(t.size() == 1);
  CHECK_FALSE(t[0].vertices_are_columns());
  CHECK(t[0].polytope() == simplex3());
}

TEST_CASE("parse_ks: comments, blank lines, annotations, multiple entries") {
  std::istringstream in(
      "# leading comment\n"
      "\n"
      "3 4 first entry\n"
      "1 0 0 -1\n"
      "# interior comment\n"
      "0 1 0 -1\n"
      "0 0 1 -1\n"
      "\n"
      "1 2 a segment\n"
      "-1 1\n");
  auto entries = parse_ks(in);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].annotation == "first entry");
  CHECK(entries[0].source_line == 3);
  CHECK(entries[1].annotation == "a segment");
  CHECK(entries[1].dim() == 1);
}

TEST_CASE("parse_ks: database-style annotations survive") {
  std::istringstream in(
      "3 4  M:35 4 N:5 4\n"
      "   1   0   0  -1\n"
      "   0   1   0  -1\n"
      "   0   0   1  -1\n");
  auto entries = parse_ks(in);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].annotation == "M:35 4 N:5 4");
  CHECK(entries[0].polytope() == simplex3());
}

TEST_CASE("parse_ks: errors carry line numbers") {
  std::istringstream bad_header("3 banana\n");
  CHECK_THROWS_WITH_AS(parse_ks(bad_header), doctest::Contains("line 1"), std::runtime_error);

  std::istringstream short_row("3 4\n1 0 0 -1\n0 1 0\n0 0 1 -1\n");
  CHECK_THROWS_WITH_AS(parse_ks(short_row), doctest::Contains("line 3"), std::runtime_error);

  std::istringstream bad_token("2 2\n1 x\n0 1\n");
  CHECK_THROWS_WITH_AS(parse_ks(bad_token), doctest::Contains("non-integer"), std::runtime_error);

  std::istringstream truncated("3 4\n1 0 0 -1\n");
  CHECK_THROWS_AS(parse_ks(truncated), std::runtime_error);

  std::istringstream huge("7 9\n");
  CHECK_THROWS_WITH_AS(parse_ks(huge), doctest::Contains("dimension"), std::runtime_error);
}

TEST_CASE("emit/parse round trip is the identity") {
  auto entries = parse_ks_file(kSamplePath);
  CHECK(entries.size() == 20);
  for (const KSEntry& e : entries) {
    std::ostringstream out;
    emit_ks(out, e);
    std::istringstream in(out.str());
    auto back = parse_ks(in);
    REQUIRE(back.size() == 1);
    CHECK(back[0] == e);
  }
}

TEST_CASE("the bundled sample is entirely 3D reflexive with distinct classes") {
  auto entries = parse_ks_file(kSamplePath);
  std::set<std::string> keys;
  for (const KSEntry& e : entries) {
    REQUIRE(e.dim() == 3);
    LatticePolytope p = e.polytope();
    CHECK(is_reflexive(p));
    CHECK(keys.insert(normal_form(p).key()).second);
  }
}

TEST_CASE("make_ks_entry produces parseable output") {
  KSEntry e = make_ks_entry(cross3(), "cross");
  std::ostringstream out;
  emit_ks(out, e);
  std::istringstream in(out.str());
  auto back = parse_ks(in);
  REQUIRE(back.size() == 1);
  CHECK(back[0].polytope() == cross3());
  CHECK(back[0].annotation == "cross");
}

TEST_CASE("result store: round trips") {
  ResultStore empty;
  empty.metadata.emplace_back("tool_version", "0.1.0");
  std::ostringstream out;
  write_records(out, empty);
  std::istringstream in(out.str());
  ResultStore back = read_records(in);
  CHECK(back.records.empty());
  CHECK(back.metadata == empty.metadata);

  ResultStore store;
  store.metadata.emplace_back("tool_version", "0.1.0");
  store.metadata.emplace_back("created", "2026-08-11T00:00:00Z");
  InvariantRecord rec = compute_invariants(simplex3());
  store.records[rec.nf_key] = rec;
  InvariantRecord quintic = compute_invariants(simplex4());
  store.records[quintic.nf_key] = quintic;

  std::ostringstream o2;
  write_records(o2, store);
  std::istringstream i2(o2.str());
  std::vector<std::string> warnings;
  ResultStore b2 = read_records(i2, &warnings);
  CHECK(warnings.empty());
  REQUIRE(b2.records.size() == 2);
  CHECK(b2.records.at(rec.nf_key) == rec);
  CHECK(b2.records.at(quintic.nf_key) == quintic);
  CHECK(b2.records.at(rec.nf_key).rho_tor == 1);
  CHECK(b2.records.at(rec.nf_key).delta == 0);

  // write(read(write(s))) is byte-identical
  std::ostringstream o3;
  write_records(o3, b2);
  CHECK(o3.str() == o2.str());
}

TEST_CASE("result store: warnings and malformed input") {
  std::istringstream wrong_version("rk3-store 2\nmeta tool_version 9\n");
  std::vector<std::string> warnings;
  read_records(wrong_version, &warnings);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("version") != std::string::npos);

  std::istringstream not_a_store("hello\n");
  CHECK_THROWS_AS(read_records(not_a_store), std::runtime_error);

  std::istringstream bad_record("rk3-store 1\nrecord nf=[1x1]1 k=zzz l=1\n");
  CHECK_THROWS_WITH_AS(read_records(bad_record), doctest::Contains("line 2"), std::runtime_error);

  std::istringstream missing("rk3-store 1\nrecord nf=[1x1]1 k=3\n");
  CHECK_THROWS_WITH_AS(read_records(missing), doctest::Contains("missing required"),
                       std::runtime_error);

  // tampered record line: digest mismatch warning
  ResultStore store;
  InvariantRecord rec = compute_invariants(simplex3());
  store.records[rec.nf_key] = rec;
  std::ostringstream out;
  write_records(out, store);
  std::string text = out.str();
  size_t pos = text.find("l=5");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 3, "l=6");
  std::istringstream tampered(text);
  warnings.clear();
  read_records(tampered, &warnings);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("digest") != std::string::npos);
}

TEST_CASE("fnv1a64 is stable") {
  CHECK(fnv1a64("") == 14695981039346656037ULL);
  CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));
}
