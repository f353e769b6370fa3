#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "schublas/bases.hpp"
#include "schublas/limits.hpp"
#include "schublas/polynomial.hpp"

using namespace schublas;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

// Keeps global limits untouched across a test.
struct LimitsGuard {
  std::size_t term = limits::term_limit();
  std::size_t step = limits::step_limit();
  std::size_t cache = limits::cache_entries();
  int threads = limits::threads();
  ~LimitsGuard() {
    limits::set_term_limit(term);
    limits::set_step_limit(step);
    limits::set_cache_entries(cache);
    limits::set_threads(threads);
  }
};

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("cli computes polynomials") {
  RunResult r = run({"schubert", "--perm", "2,1,4,3"});
  CHECK(r.code == 0);
  CHECK(r.out == "x1*x3 + x1*x2 + x1^2\n");
  CHECK(r.err.empty());

  CHECK(run({"key", "--comp", "0,2"}).out == "x2^2 + x1*x2 + x1^2\n");

  RunResult rec = run({"toplascoux", "--comp", "0,3,0,2"});
  RunResult via_bpd = run({"toplascoux", "--comp", "0,3,0,2", "--method", "bpd"});
  RunResult via_rev = run({"toplascoux", "--comp", "0,3,0,2", "--method", "reverse"});
  CHECK(rec.code == 0);
  CHECK(rec.out == via_bpd.out);
  CHECK(rec.out == via_rev.out);
}

TEST_CASE("cli json output") {
  RunResult r = run({"schubert", "--perm", "2,1", "--format", "json"});
  CHECK(r.code == 0);
  Polynomial f = Polynomial::from_json(r.out);
  CHECK(f == Polynomial::variable(1));
  // The flag may come before the subcommand too.
  RunResult r2 = run({"--format", "json", "schubert", "--perm", "2,1"});
  CHECK(r2.out == r.out);
}

TEST_CASE("cli grid listings") {
  RunResult r = run({"bpd", "--perm", "2,1,4,3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("count 3") == 0);
  CHECK(r.out.find("sum x1*x3 + x1*x2 + x1^2\n") != std::string::npos);
  RunResult drawn = run({"bpd", "--perm", "2,1,4,3", "--render", "ascii"});
  CHECK(drawn.out.find("r-+-") != std::string::npos);

  RunResult lt = run({"ltbpd", "--comp", "0,3,0,2"});
  CHECK(lt.code == 0);
  CHECK(lt.out.find("count 5") == 0);
}

TEST_CASE("cli support and snp") {
  RunResult s = run({"support", "--schubert", "3,1,5,2,4"});
  CHECK(s.code == 0);
  CHECK(s.out.find("(2,2)") != std::string::npos);

  std::filesystem::path good =
      write_temp("snp_good.json", Polynomial::variable(1).to_json());
  RunResult ok = run({"snp", "--input", good.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("saturated") == 0);

  Polynomial gap;
  gap.add_term(WeakComposition{2}, 1);
  gap.add_term(WeakComposition{0, 2}, 1);
  std::filesystem::path bad = write_temp("snp_bad.json", gap.to_json());
  RunResult missing = run({"snp", "--input", bad.string()});
  CHECK(missing.code == 1);
  CHECK(missing.out.find("not saturated, missing exponent (1,1)") == 0);

  RunResult absent = run({"snp", "--input", "/nonexistent/file.json"});
  CHECK(absent.code == 2);
}

TEST_CASE("cli products and expansions") {
  RunResult p = run({"product", "--basis", "schubert", "--left", "2,1", "--right",
                     "1,3,2"});
  CHECK(p.code == 0);
  // Indices iterate tail-lex descending on inversion codes: (1,1) before (2,0).
  CHECK(p.out == "S[2,3,1] + S[3,1,2]\n");

  RunResult d = run({"product", "--basis", "toplascoux", "--left", "2,3,1,4",
                     "--right", "2,1,4,3"});
  CHECK(d.code == 0);
  CHECK(d.out.find("L(8,6,5,7)") != std::string::npos);

  RunResult sc = run({"structconst", "--alpha", "2,3,1,4", "--gamma", "2,1,4,3",
                      "--m1", "4", "--m2", "4", "--n", "4", "--delta", "8,6,5,7"});
  CHECK(sc.code == 0);
  CHECK(sc.out == "1\n");

  RunResult full = run({"structconst", "--alpha", "2,3,1,4", "--gamma", "2,1,4,3",
                        "--m1", "4", "--m2", "4", "--n", "4"});
  CHECK(full.code == 0);
  CHECK(full.out.find("u [1,4,2,3]") == 0);
  CHECK(full.out.find("all equal\n") != std::string::npos);

  RunResult ke = run({"keyexpand", "--comp", "0,2", "--m", "2", "--n", "2"});
  CHECK(ke.code == 0);
  CHECK(ke.out == "K(1,2)\n");
}

TEST_CASE("cli hilbert and verify") {
  RunResult h = run({"hilbert", "--max-degree", "4"});
  CHECK(h.code == 0);
  CHECK(h.out == "1, 1, 2, 4, 7\n");

  RunResult v = run({"verify", "--suite", "hilbert", "--max-n", "2"});
  CHECK(v.code == 0);
  CHECK(v.out.find("suite hilbert:") != std::string::npos);
  CHECK(v.out.find("FAIL") == std::string::npos);

  RunResult vj = run({"verify", "--suite", "hilbert", "--max-n", "2", "--format",
                      "json"});
  CHECK(vj.code == 0);
  CHECK(vj.out.find("\"all_passed\": true") != std::string::npos);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"schubert"}).code == 2);                       // missing --perm
  CHECK(run({"schubert", "--perm"}).code == 2);             // missing value
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);     // not a suite
  CHECK(run({"toplascoux", "--comp", "1", "--method", "psychic"}).code == 2);
  CHECK(run({"support"}).code == 2);                        // needs a source
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"schubert", "--help"}).code == 0);
}

TEST_CASE("cli computation errors") {
  RunResult r = run({"toplascoux", "--comp", "1,1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") == 0);
  // A malformed word passes option parsing and fails in the library.
  CHECK(run({"schubert", "--perm", "2,2"}).code == 1);
}

TEST_CASE("cli config file") {
  LimitsGuard guard;
  std::filesystem::path cfg = write_temp(
      "cli_cfg.json",
      "{\"term_limit\": 500000, \"parallelism\": 2, \"format\": \"json\"}");
  RunResult r = run({"--config", cfg.string(), "schubert", "--perm", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"terms\"") != std::string::npos);  // json via config
  CHECK(limits::term_limit() == 500000);

  // Explicit flag beats the config file.
  RunResult t = run({"--config", cfg.string(), "--format", "text", "schubert",
                     "--perm", "2,1"});
  CHECK(t.out == "x1\n");

  std::filesystem::path broken = write_temp("cli_cfg_bad.json", "{\"nope\": 1}");
  CHECK(run({"--config", broken.string(), "schubert", "--perm", "2,1"}).code == 1);
}

TEST_CASE("cli resource limit exit code") {
  LimitsGuard guard;
  clear_basis_caches();  // a cached polynomial would dodge the ceiling
  std::filesystem::path cfg = write_temp("cli_tiny.json", "{\"term_limit\": 2}");
  RunResult r = run({"--config", cfg.string(), "schubert", "--perm", "3,1,5,2,4"});
  CHECK(r.code == 3);
  CHECK(r.err.find("error:") == 0);
}

TEST_CASE("cli output is deterministic across thread counts") {
  LimitsGuard guard;
  std::vector<std::string> args = {"verify", "--suite", "examples", "--max-n", "2"};
  limits::set_threads(1);
  RunResult single = run(args);
  limits::set_threads(4);
  RunResult quad = run(args);
  CHECK(single.code == 0);
  CHECK(quad.code == 0);
  CHECK(single.out == quad.out);
}
