#include "psn/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>

#include <json.hpp>

#include "oracle_internal.hpp"
#include "psn/error.hpp"
#include "psn/space_io.hpp"

namespace psn {

namespace oracle {

void Recorder::declare(const std::string& law, bool bounded) {
  stats(law).bounded = bounded;
}

LawStats& Recorder::stats(const std::string& law) {
  auto it = index_.find(law);
  if (it == index_.end()) {
    it = index_.emplace(law, report_.laws.size()).first;
    report_.laws.push_back({law, false, 0, 0, 0});
  }
  return report_.laws[it->second];
}

void Recorder::check(const std::string& law, bool ok, const std::string& inputs,
                     const std::string& observed) {
  LawStats& s = stats(law);
  ++s.checked;
  if (ok) return;
  ++s.failed;
  if (report_.failures.size() < kMaxRecordedFailures) {
    report_.failures.push_back({law, inputs, observed});
  }
}

void Recorder::undecided(const std::string& law) { ++stats(law).undecided; }

Word random_word(Rng& rng, int n, std::size_t max_len) {
  static thread_local std::map<int, std::vector<Letter>> alphabets;
  auto& letters = alphabets[n];
  if (letters.empty()) letters = all_letters(n);
  std::size_t len = rng.below(max_len + 1);
  Word w(n);
  for (std::size_t i = 0; i < len; ++i) w.push_back(rng.pick(letters));
  return w;
}

Word random_reduced(Rng& rng, int n, std::size_t max_len) {
  return reduce(random_word(rng, n, max_len));
}

Word shuffle_commuting(Rng& rng, const Word& u) {
  std::vector<Letter> w = u.letters();
  if (w.size() < 2) return u;
  for (std::size_t k = 0; k < 4 * w.size(); ++k) {
    std::size_t i = rng.below(w.size() - 1);
    if (commutes(w[i], w[i + 1])) std::swap(w[i], w[i + 1]);
  }
  return Word(u.dim(), std::move(w));
}

Word random_descendant(Rng& rng, const Word& v, bool& replaced) {
  replaced = false;
  if (v.empty()) return v;
  const int n = v.dim();
  std::size_t forced = rng.below(v.size());
  Word out(n);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Letter s = v[k];
    if (k != forced && rng.below(3) != 0) {
      out.push_back(s);
      continue;
    }
    replaced = true;
    std::vector<Letter> subs;
    for (Letter t : all_letters(n)) {
      if (contains(s, t, true)) subs.push_back(t);
    }
    std::size_t len = subs.empty() ? 0 : rng.below(3);
    for (std::size_t i = 0; i < len; ++i) out.push_back(rng.pick(subs));
  }
  return shuffle_commuting(rng, out);
}

std::vector<std::vector<AlphaOp>> valid_ops(const ColoredSpace& space) {
  const int n = space.dim();
  std::vector<std::vector<AlphaOp>> by_letter;
  for (Letter s : all_letters(n)) {
    std::vector<Anchor> los, his;
    if (s.lo == 0) {
      los.push_back(Anchor::bottom());
    } else {
      for (VertexId v : space.at_level(s.lo - 1)) los.push_back(Anchor::real(v));
    }
    if (s.hi == n) {
      his.push_back(Anchor::top());
    } else {
      for (VertexId v : space.at_level(s.hi + 1)) his.push_back(Anchor::real(v));
    }
    std::vector<AlphaOp> ops;
    for (Anchor a : los) {
      for (Anchor b : his) {
        if (!a.is_real() || !b.is_real() || lies_over(space, a, b)) ops.push_back({s, a, b});
      }
    }
    if (!ops.empty()) by_letter.push_back(std::move(ops));
  }
  return by_letter;
}

AlphaOp random_op(Rng& rng, const ColoredSpace& space) {
  auto by_letter = valid_ops(space);
  return rng.pick(rng.pick(by_letter));
}

ColoredSpace random_space(Rng& rng, int n, std::size_t max_ops) {
  ColoredSpace space(n);
  std::size_t ops = 1 + rng.below(max_ops);
  for (std::size_t k = 0; k < ops; ++k) {
    AlphaOp op = random_op(rng, space);
    space.apply_alpha(op.s, op.lo, op.hi);
  }
  return space;
}

ColoredSpace case_space(const SuiteConfig& config, std::size_t index, Rng& rng) {
  (void)index;
  int n = rng.between(1, config.n_max);
  return random_space(rng, n, 8);
}

std::string show(const Word& w) {
  return w.to_string() + " (N=" + std::to_string(w.dim()) + ")";
}

std::string show_space(const ColoredSpace& space) {
  nlohmann::json j;
  j["n"] = space.dim();
  j["ops"] = nlohmann::json::array();
  for (const BuildStep& step : space.build_log()) {
    j["ops"].push_back({{"letter", to_string(step.letter)},
                        {"lo", anchor_to_json(step.lo)},
                        {"hi", anchor_to_json(step.hi)}});
  }
  return j.dump();
}

bool trace_prefix(const Word& prefix, const Word& w, Word* rest) {
  std::vector<Letter> left = w.letters();
  for (Letter x : prefix) {
    bool found = false;
    for (std::size_t p = 0; p < left.size(); ++p) {
      if (left[p] == x) {
        left.erase(left.begin() + static_cast<std::ptrdiff_t>(p));
        found = true;
        break;
      }
      if (!commutes(left[p], x)) break;
    }
    if (!found) return false;
  }
  if (rest) *rest = Word(w.dim(), std::move(left));
  return true;
}

std::vector<Word> linear_extensions(const Word& w, std::size_t cap) {
  std::set<std::vector<Letter>> seen{w.letters()};
  std::deque<std::vector<Letter>> queue{w.letters()};
  while (!queue.empty() && seen.size() < cap) {
    auto x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
      if (!commutes(x[k], x[k + 1])) continue;
      auto y = x;
      std::swap(y[k], y[k + 1]);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<Word> out;
  for (const auto& x : seen) out.emplace_back(w.dim(), x);
  return out;
}

void suite_ample(const SuiteConfig& config, Recorder& rec, std::size_t& cases) {
  for (int n = 1; n <= config.n_max; ++n) {
    ++cases;
    for (const CheckRecord& r : ample_report(n)) {
      std::string law = r.check.rfind("sr(", 0) == 0 ? "right stabilizer identity"
                                                      : "canonical base of realized type";
      rec.check(law, r.pass, "N=" + std::to_string(n) + ": " + r.check, r.witness);
    }
  }
}

}  // namespace oracle

bool SuiteReport::pass() const {
  if (!failures.empty()) return false;
  return std::all_of(laws.begin(), laws.end(), [](const LawStats& s) { return s.failed == 0; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "words-confluence", "words-absorption", "words-decomposition", "words-strong",
      "words-order",      "space-axioms",     "flags-paths",         "flags-forking",
      "ranks",            "ample"};
  return names;
}

SuiteReport run_suite(const SuiteConfig& config) {
  using Suite = void (*)(const SuiteConfig&, oracle::Recorder&, std::size_t&);
  static const std::map<std::string, Suite> suites{
      {"words-confluence", oracle::suite_words_confluence},
      {"words-absorption", oracle::suite_words_absorption},
      {"words-decomposition", oracle::suite_words_decomposition},
      {"words-strong", oracle::suite_words_strong},
      {"words-order", oracle::suite_words_order},
      {"space-axioms", oracle::suite_space_axioms},
      {"flags-paths", oracle::suite_flags_paths},
      {"flags-forking", oracle::suite_flags_forking},
      {"ranks", oracle::suite_ranks},
      {"ample", oracle::suite_ample},
  };
  auto it = suites.find(config.suite);
  if (it == suites.end()) {
    throw Error(Errc::unknown_suite, "unknown suite '" + config.suite + "'");
  }
  if (config.cases < 1 || config.n_max < 1 || config.word_len_max < 1 ||
      config.split_len_max < 1) {
    throw Error(Errc::precondition_violated, "suite bounds must be at least 1");
  }
  if (config.n_max > kMaxDimension) check_dimension(config.n_max);
  SuiteReport report;
  report.suite = config.suite;
  report.config = config;
  oracle::Recorder rec(report);
  auto start = std::chrono::steady_clock::now();
  it->second(config, rec, report.cases);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_to_json(const SuiteReport& report, bool with_elapsed) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["config"] = {{"seed", report.config.seed},
                 {"cases", report.config.cases},
                 {"n_max", report.config.n_max},
                 {"word_len_max", report.config.word_len_max},
                 {"split_len_max", report.config.split_len_max},
                 {"max_steps", report.config.max_steps},
                 {"prec_cap", report.config.prec_cap}};
  j["cases"] = report.cases;
  j["pass"] = report.pass();
  j["laws"] = nlohmann::json::array();
  for (const LawStats& s : report.laws) {
    j["laws"].push_back({{"law", s.law},
                         {"label", s.bounded ? "sampled/bounded" : "checked"},
                         {"checked", s.checked},
                         {"failed", s.failed},
                         {"undecided", s.undecided}});
  }
  j["failures"] = nlohmann::json::array();
  for (const Failure& f : report.failures) {
    j["failures"].push_back({{"law", f.law}, {"inputs", f.inputs}, {"observed", f.observed}});
  }
  if (with_elapsed) j["elapsed_seconds"] = report.elapsed_seconds;
  return j.dump(2);
}

}  // namespace psn
