#pragma once

#include <string>
#include <vector>

namespace schublas {

/// One executed check: a stable name, what was compared, and the outcome.
/// Detail is deterministic (no timings, no addresses) so runs are
/// byte-for-byte reproducible.
struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;
  bool all_passed() const;
  std::string to_text() const;  // "ok <name>: <detail>" / "FAIL ..." lines + summary
  std::string to_json() const;
};

/// Cross-checks computed objects against each other and against fixed
/// worked instances. max_n bounds the exhaustive sweeps (permutations in
/// S_max_n, compositions in small boxes).
///   examples:  fixed polynomial, diagram, grid, and expansion instances.
///   operators: operator identities (idempotence, braid, commutation with
///              the box reverse complement) on sampled polynomials.
///   bpd:       grid sums equal recursive polynomials; subgrid rotation is a
///              weight-matching bijection between the two grid families.
///   support:   tableau supports match polynomial supports; saturation holds.
///   structure: product expansions match the standardized constants.
///   hilbert:   series coefficients match direct enumeration.
VerifyReport run_verify_suite(const std::string& suite, int max_n);

/// Suite names accepted by run_verify_suite, "all" excluded.
std::vector<std::string> verify_suite_names();

}  // namespace schublas
