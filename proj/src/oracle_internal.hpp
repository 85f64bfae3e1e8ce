#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "psn/flags.hpp"
#include "psn/oracle.hpp"
#include "psn/space.hpp"
#include "psn/word.hpp"

namespace psn::oracle {

inline constexpr std::size_t kMaxRecordedFailures = 50;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream)
      : gen_(seed * 0x9E3779B97F4A7C15ULL + stream * 0xBF58476D1CE4E5B9ULL + 1) {}

  // Uniform in [0, n).  Plain modulo keeps the stream identical across
  // standard libraries; the bias is irrelevant at these sizes.
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(gen_() % n); }
  // Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 1; }
  std::uint64_t next() { return gen_(); }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(xs.size())];
  }

 private:
  std::mt19937_64 gen_;
};

class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  void declare(const std::string& law, bool bounded = false);
  void check(const std::string& law, bool ok, const std::string& inputs,
             const std::string& observed = "");
  void undecided(const std::string& law);

 private:
  LawStats& stats(const std::string& law);
  SuiteReport& report_;
  std::map<std::string, std::size_t> index_;
};

// Generators.
Word random_word(Rng& rng, int n, std::size_t max_len);
Word random_reduced(Rng& rng, int n, std::size_t max_len);
// A random member of the commutation class of u.
Word shuffle_commuting(Rng& rng, const Word& u);
// Random replacement of letters of v by products of proper subletters, at
// least one genuine replacement when possible; result is ⪯ v (≺ when
// `replaced` comes back true).
Word random_descendant(Rng& rng, const Word& v, bool& replaced);
struct AlphaOp {
  Letter s;
  Anchor lo = Anchor::bottom();
  Anchor hi = Anchor::top();
};
// Valid operations on the space, grouped by letter (letters without a valid
// anchor pair are left out).
std::vector<std::vector<AlphaOp>> valid_ops(const ColoredSpace& space);
// Letter uniform among applicable letters, then anchors uniform for it.
AlphaOp random_op(Rng& rng, const ColoredSpace& space);
// Random build script: up to max_ops operations, anchors uniform among the
// currently valid pairs.
ColoredSpace random_space(Rng& rng, int n, std::size_t max_ops);
// The space every space/flag suite case starts from, so that suites run
// with the same seed see the same spaces.
ColoredSpace case_space(const SuiteConfig& config, std::size_t index, Rng& rng);

std::string show(const Word& w);
std::string show_space(const ColoredSpace& space);

// Independent reference implementations.
bool trace_prefix(const Word& prefix, const Word& w, Word* rest = nullptr);
std::vector<Word> linear_extensions(const Word& w, std::size_t cap);

// Suites.
void suite_words_confluence(const SuiteConfig&, Recorder&, std::size_t& cases);
void suite_words_absorption(const SuiteConfig&, Recorder&, std::size_t& cases);
void suite_words_decomposition(const SuiteConfig&, Recorder&, std::size_t& cases);
void suite_words_strong(const SuiteConfig&, Recorder&, std::size_t& cases);
void suite_words_order(const SuiteConfig&, Recorder&, std::size_t& cases);
void suite_ranks(const SuiteConfig&, Recorder&, std::size_t& cases);
void suite_space_axioms(const SuiteConfig&, Recorder&, std::size_t& cases);
void suite_flags_paths(const SuiteConfig&, Recorder&, std::size_t& cases);
void suite_flags_forking(const SuiteConfig&, Recorder&, std::size_t& cases);
void suite_ample(const SuiteConfig&, Recorder&, std::size_t& cases);

}  // namespace psn::oracle
