/**
 * Command-line surface: Kreuzer-Skarke file queries (polar duals, invariant
 * reports, mirror-rank checks, symmetry searches, symplectic groups), the
 * low-dimension classifications, and batch ingestion into a result store.
 *
 * Exit codes: 0 success, 1 check failure, 2 usage or parse error.
 */

#include "CLI11.hpp"

#include "rk3/families.hpp"
#include "rk3/fan.hpp"
#include "rk3/invariants.hpp"
#include "rk3/ks_io.hpp"
#include "rk3/symmetry.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

constexpr const char* kVersion = "0.1.0";

std::string resolve_input(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("RK3_KS_PATH"); env && *env) return env;
  throw CLI::ValidationError("--in", "no input file given and RK3_KS_PATH is not set");
}

std::vector<rk3::KSEntry> load_entries(const std::string& path) {
  auto entries = rk3::parse_ks_file(path);
  for (const auto& e : entries)
    if (e.rows == e.cols)
      std::cerr << "note: entry at line " << e.source_line
                << " has a square matrix; interpreting columns as vertices\n";
  return entries;
}

const rk3::KSEntry& entry_at(const std::vector<rk3::KSEntry>& entries, long index) {
  if (index < 0 || static_cast<size_t>(index) >= entries.size())
    throw std::runtime_error("entry index " + std::to_string(index) + " out of range (file has " +
                             std::to_string(entries.size()) + " entries)");
  return entries[static_cast<size_t>(index)];
}

std::string iso_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return "fnv1a64:" + rk3::fnv1a64_hex(buf.str());
}

std::string invariant_line(long index, const rk3::InvariantRecord& rec) {
  std::ostringstream out;
  out << "entry=" << index << " k=" << rec.k << " l=" << rec.l << " l_dual=" << rec.l_dual;
  if (rec.k == 3)
    out << " rho_tor=" << rec.rho_tor << " delta=" << rec.delta << " rho_cor=" << rec.rho_cor;
  if (rec.h11) out << " h11=" << *rec.h11;
  if (rec.h_k21) out << " h_k21=" << *rec.h_k21;
  return out.str();
}

int run_polar(const std::string& in_path, std::optional<long> index) {
  auto entries = load_entries(in_path);
  auto emit_one = [&](long i) {
    rk3::LatticePolytope dual = rk3::polar(entry_at(entries, i).polytope());
    rk3::emit_ks(std::cout, rk3::make_ks_entry(dual, "polar of entry " + std::to_string(i)));
  };
  if (index) {
    emit_one(*index);
  } else {
    for (size_t i = 0; i < entries.size(); ++i) emit_one(static_cast<long>(i));
  }
  return 0;
}

int run_invariants(const std::string& in_path, std::optional<long> index) {
  auto entries = load_entries(in_path);
  auto report = [&](long i) {
    std::cout << invariant_line(i, rk3::compute_invariants(entry_at(entries, i).polytope()))
              << '\n';
  };
  if (index) {
    report(*index);
  } else {
    for (size_t i = 0; i < entries.size(); ++i) report(static_cast<long>(i));
  }
  return 0;
}

int run_mirror_check(const std::string& in_path, std::optional<long> index) {
  auto entries = load_entries(in_path);
  bool all_ok = true;
  auto check_one = [&](long i) {
    rk3::MirrorCheck c = rk3::mirror_rank_check(entry_at(entries, i).polytope());
    std::cout << "entry=" << i << " rho_tor=" << c.rho_tor << " delta=" << c.delta
              << " rho_tor_dual=" << c.rho_tor_dual << " delta_dual=" << c.delta_dual
              << " ok=" << (c.ok ? "yes" : "no") << '\n';
    all_ok = all_ok && c.ok;
  };
  if (index) {
    check_one(*index);
  } else {
    for (size_t i = 0; i < entries.size(); ++i) check_one(static_cast<long>(i));
  }
  return all_ok ? 0 : 1;
}

int run_enumerate(int dim) {
  auto classes = rk3::enumerate_reflexive(dim);
  for (size_t i = 0; i < classes.size(); ++i) {
    rk3::LatticePolytope p = rk3::polytope_of(classes[i]);
    rk3::emit_ks(std::cout, rk3::make_ks_entry(p, "class " + std::to_string(i) + " of " +
                                                      std::to_string(classes.size())));
  }
  return 0;
}

int run_search_one_param(const std::string& in_path) {
  auto entries = load_entries(in_path);
  std::vector<rk3::LatticePolytope> db;
  db.reserve(entries.size());
  for (const auto& e : entries) db.push_back(e.polytope());
  auto hits = rk3::search_one_parameter(db);
  for (const auto& hit : hits) {
    rk3::LatticePolytope p = rk3::polytope_of(hit.nf);
    rk3::emit_ks(std::cout, rk3::make_ks_entry(p, "group=" + hit.label.str()));
  }
  return 0;
}

int run_sympl_torus(const std::string& in_path, long index, const std::string& support_kind) {
  auto entries = load_entries(in_path);
  rk3::LatticePolytope p = entry_at(entries, index).polytope();
  rk3::LatticePolytope dual = rk3::polar(p);
  std::vector<rk3::IntVec> support;
  if (support_kind == "vertices") {
    support = dual.vertices();
    support.push_back(rk3::IntVec(rk3::IntVec::Zero(p.dim())));
  } else {
    support = rk3::lattice_points(dual);
  }
  rk3::FiniteAbelianGroup g = rk3::symplectic_torus_group(p, support);
  std::cout << g.str() << '\n';
  return 0;
}

int run_ingest(const std::string& in_path, const std::string& out_path, int jobs) {
  auto entries = load_entries(in_path);
  std::vector<rk3::InvariantRecord> results(entries.size());
  std::vector<std::string> errors(entries.size());

  if (jobs < 1) jobs = 1;
  auto worker = [&](int t) {
    for (size_t i = static_cast<size_t>(t); i < entries.size(); i += static_cast<size_t>(jobs)) {
      try {
        results[i] = rk3::compute_invariants(entries[i].polytope());
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  bool failed = false;
  rk3::ResultStore store;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << "entry " << i << " (line " << entries[i].source_line << "): " << errors[i]
                << '\n';
      failed = true;
      continue;
    }
    auto [it, inserted] = store.records.emplace(results[i].nf_key, results[i]);
    if (!inserted)
      std::cerr << "note: entry " << i << " duplicates an earlier equivalence class; kept first\n";
  }
  store.metadata.emplace_back("tool_version", kVersion);
  store.metadata.emplace_back("source", in_path);
  store.metadata.emplace_back("source_digest", file_digest(in_path));
  store.metadata.emplace_back("created", iso_timestamp());
  rk3::write_records_file(out_path, store);
  std::cout << "wrote " << store.records.size() << " records to " << out_path << '\n';
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of reflexive polytopes and toric K3 hypersurfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string in_path, out_path, support_kind = "vertices";
  long index = 0;
  int dim = 0, jobs = 1;
  bool all = false;
  std::optional<long> opt_index;

  auto add_in = [&](CLI::App* cmd) {
    cmd->add_option("--in", in_path, "KS-format input file (default: $RK3_KS_PATH)");
  };
  auto add_index = [&](CLI::App* cmd) {
    return cmd->add_option("--index", index, "0-based entry index");
  };

  auto* polar_cmd = app.add_subcommand("polar", "print polar dual vertices in KS format");
  add_in(polar_cmd);
  auto* polar_idx = add_index(polar_cmd);

  auto* inv_cmd = app.add_subcommand("invariants", "print l, rho_tor, delta, rho_cor or Hodge numbers");
  add_in(inv_cmd);
  auto* inv_idx = add_index(inv_cmd);

  auto* mirror_cmd = app.add_subcommand("mirror-check", "verify the rank-20 mirror identity");
  add_in(mirror_cmd);
  auto* mirror_idx = add_index(mirror_cmd);
  mirror_cmd->add_flag("--all", all, "check every entry (default when --index is absent)");

  auto* enum_cmd = app.add_subcommand("enumerate", "emit all reflexive classes of a dimension");
  enum_cmd->add_option("--dim", dim, "dimension (1 or 2)")->required();

  auto* search_cmd = app.add_subcommand("search-one-param", "find one-parameter symmetric classes");
  add_in(search_cmd);

  auto* sympl_cmd = app.add_subcommand("sympl-torus", "diagonal symplectic group of a pencil");
  add_in(sympl_cmd);
  add_index(sympl_cmd)->required();
  sympl_cmd->add_option("--support", support_kind, "monomial support: vertices|all")
      ->check(CLI::IsMember({"vertices", "all"}));

  auto* ingest_cmd = app.add_subcommand("ingest", "batch-compute invariants into a result store");
  add_in(ingest_cmd);
  ingest_cmd->add_option("--out", out_path, "result store path")->required();
  ingest_cmd->add_option("--jobs", jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (polar_cmd->parsed()) {
      if (*polar_idx) opt_index = index;
      return run_polar(resolve_input(in_path), opt_index);
    }
    if (inv_cmd->parsed()) {
      if (*inv_idx) opt_index = index;
      return run_invariants(resolve_input(in_path), opt_index);
    }
    if (mirror_cmd->parsed()) {
      if (*mirror_idx) opt_index = index;
      return run_mirror_check(resolve_input(in_path), opt_index);
    }
    if (enum_cmd->parsed()) return run_enumerate(dim);
    if (search_cmd->parsed()) return run_search_one_param(resolve_input(in_path));
    if (sympl_cmd->parsed()) return run_sympl_torus(resolve_input(in_path), index, support_kind);
    if (ingest_cmd->parsed()) return run_ingest(resolve_input(in_path), out_path, jobs);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
