#pragma once

// Property suites: randomized and exhaustive checks of the laws the word
// calculus, the space builder and the flag calculus must satisfy.  Runs are
// reproducible from (suite, seed, cases, bounds); each case draws from its
// own generator seeded by (seed, case index), so a failing case can be
// replayed alone.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace psn {

struct SuiteConfig {
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  int n_max = 3;
  std::size_t word_len_max = 8;
  std::size_t split_len_max = 3;
  // Step budget for bounded strong-reduction searches.
  std::size_t max_steps = 50000;
  // Combined-length cap for ≺ decisions made by the suites.
  std::size_t prec_cap = 24;
};

struct LawStats {
  std::string law;
  bool bounded = false;  // reported as "sampled/bounded"
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t undecided = 0;  // bound hit before a verdict
};

struct Failure {
  std::string law;
  std::string inputs;
  std::string observed;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::size_t cases = 0;
  std::vector<LawStats> laws;
  std::vector<Failure> failures;  // capped; LawStats keeps the full count
  double elapsed_seconds = 0;

  bool pass() const;
};

const std::vector<std::string>& suite_names();

// Throws unknown-suite for names outside suite_names().
SuiteReport run_suite(const SuiteConfig& config);

// JSON text; elapsed time is left out unless requested so that identical
// configurations give byte-identical reports.
std::string report_to_json(const SuiteReport& report, bool with_elapsed = false);

}  // namespace psn
