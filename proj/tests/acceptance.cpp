// Acceptance run: one PASS/FAIL line per criterion.  Time limits and case
// counts are fixed here; exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "psn/error.hpp"
#include "psn/flags.hpp"
#include "psn/oracle.hpp"
#include "psn/word.hpp"

using namespace psn;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

SuiteConfig suite(const std::string& name, std::size_t cases) {
  SuiteConfig c;
  c.suite = name;
  c.seed = 1;
  c.cases = cases;
  c.n_max = 3;
  c.word_len_max = 8;
  c.split_len_max = 3;
  c.max_steps = 50000;
  return c;
}

const LawStats* find_law(const SuiteReport& r, const std::string& law) {
  for (const LawStats& s : r.laws) {
    if (s.law == law) return &s;
  }
  return nullptr;
}

// The whole suite passes, and each named law was actually exercised.
Outcome suite_outcome(const SuiteConfig& config, const std::vector<std::string>& laws,
                      std::size_t min_cases = 0) {
  const SuiteReport r = run_suite(config);
  std::size_t checked = 0, failed = 0, undecided = 0;
  for (const LawStats& s : r.laws) {
    checked += s.checked;
    failed += s.failed;
    undecided += s.undecided;
  }
  std::string detail = std::to_string(r.cases) + " cases, " + std::to_string(checked) +
                       " checks, " + std::to_string(failed) + " failed, " +
                       std::to_string(undecided) + " undecided";
  if (!r.failures.empty()) {
    const Failure& f = r.failures.front();
    detail += "; first failure: " + f.law + " on " + f.inputs + " (" + f.observed + ")";
  }
  bool ok = r.pass() && r.cases >= min_cases;
  for (const std::string& law : laws) {
    const LawStats* s = find_law(r, law);
    if (!s || s->checked == 0) {
      ok = false;
      detail += "; law never checked: " + law;
    }
  }
  return {ok, detail};
}

Word W(const char* text, int n) { return Word::parse(text, n); }

Outcome rank_values() {
  std::vector<std::string> bad;
  auto expect = [&](const std::string& what, const CnfOrdinal& got, const char* want) {
    if (got != CnfOrdinal::parse(want)) bad.push_back(what + " = " + got.to_string());
  };
  expect("ord [0,1].[1,3]", ord_rank(W("[0,1].[1,3]", 3)), "w^2+w");
  expect("rd [0,2] (N=2)", rd_closed_form(W("[0,2]", 2)), "w^2");
  expect("rd [0,2].[3]", rd_closed_form(W("[0,2].[3]", 3)), "w^2+1");

  // Every reduced word with N <= 3 and length <= 4 whose sizes can be
  // arranged non-increasingly: closed form equals ord.
  std::size_t monotone = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<Word> layer{Word(n)};
    for (int len = 1; len <= 4; ++len) {
      std::vector<Word> next;
      for (const Word& w : layer) {
        for (Letter s : all_letters(n)) {
          Word x = w;
          x.push_back(s);
          if (!is_reduced(x)) continue;
          next.push_back(x);
          try {
            CnfOrdinal rd = rd_closed_form(x);
            ++monotone;
            if (rd != ord_rank(x)) bad.push_back("rd " + x.to_string() + " = " + rd.to_string());
          } catch (const Error& e) {
            if (e.code() != Errc::not_monotone) bad.push_back(x.to_string() + ": " + e.what());
          }
        }
      }
      layer = std::move(next);
    }
  }
  Outcome suite_part = suite_outcome(suite("ranks", 5000), {"fixed rank values",
                                                            "closed form equals ord on monotone words"});
  std::string detail = std::to_string(monotone) + " monotone words; ranks suite: " + suite_part.detail;
  if (!bad.empty()) detail += "; mismatch: " + bad.front();
  return {bad.empty() && monotone > 0 && suite_part.pass, detail};
}

Outcome stabilizer_identities() {
  std::vector<std::string> bad;
  std::size_t checks = 0;
  for (int n = 2; n <= 3; ++n) {
    for (int i = 1; i < n; ++i) {
      const Word u(n, {{0, i}, {i + 1, n}});
      ++checks;
      if (right_stabilizer(u) != (IndexSet::interval(0, i - 1) | IndexSet::interval(i + 1, n))) {
        bad.push_back("sr(" + u.to_string() + ") = " + right_stabilizer(u).to_string());
      }
    }
    const Word u(n, {{0, n - 1}, {1, n}});
    ++checks;
    if (right_stabilizer(u) != IndexSet::interval(1, n)) {
      bad.push_back("sr(" + u.to_string() + ") = " + right_stabilizer(u).to_string());
    }
    for (const CheckRecord& r : ample_report(n)) {
      ++checks;
      if (!r.pass) bad.push_back(r.check + ": " + r.witness);
    }
  }
  std::string detail = std::to_string(checks) + " identities";
  if (!bad.empty()) detail += "; " + bad.front();
  return {bad.empty(), detail};
}

Outcome strong_example() {
  const Word u = W("[0,1].[1,2].[1,2].[0,1].[1,2]", 2);
  const Word goal = W("[0,1].[1,2]", 2);
  const TargetStatus found = strong_reduces_to_bounded(u, goal, 2, 50000);
  const StrongReducts all = strong_reducts_bounded(u, 2, 50000);
  bool member = false;
  for (const Word& w : all.reducts) member = member || w == goal;
  std::string detail = std::string("goal-directed ") +
                       (found == TargetStatus::found       ? "found"
                        : found == TargetStatus::not_found ? "not found"
                                                           : "budget exhausted") +
                       ", enumeration " + (member ? "contains" : "misses") + " [0,1].[1,2] among " +
                       std::to_string(all.reducts.size()) + " reducts";
  return {found == TargetStatus::found && member, detail};
}

}  // namespace

int main() {
  SuiteConfig strong = suite("words-strong", 2000);
  strong.split_len_max = 3;
  strong.max_steps = 50000;

  const std::vector<Criterion> criteria{
      {1, "reduct uniqueness under random cancellation strategies", 30,
       [] {
         return suite_outcome(suite("words-confluence", 10000),
                              {"random cancellation order gives the same reduct",
                               "adjacent cancellation in the class gives the same reduct"},
                              10000);
       }},
      {2, "absorption law, exhaustive for N <= 2 and length <= 3", 60,
       [] {
         return suite_outcome(suite("words-absorption", 1), {"left absorption iff u·v = v"});
       }},
      {3, "decomposition and symmetric decomposition", 60,
       [] {
         return suite_outcome(suite("words-decomposition", 5000),
                              {"fine: u' left-absorbed by v1", "fine: v' properly right-absorbed by u1",
                               "fine: u' and v' commute", "fine: u1·v1 reduced",
                               "fine: reduct of u·v is u1·v1",
                               "symmetric: reduct of u·v is u1·w·v1"},
                              5000);
       }},
      {4, "splitting penalty over bounded strong reducts", 120,
       [strong] {
         return suite_outcome(strong, {"splitting reducts lie strictly below the reduct"}, 2000);
       }},
      {5, "rank values", 60, rank_values},
      {6, "canonical-base stabilizer identities for N = 2, 3", 1, stabilizer_identities},
      {7, "space axioms on random build scripts", 120,
       [] {
         return suite_outcome(suite("space-axioms", 500),
                              {"built spaces are simply connected", "built spaces are complete",
                               "distances survive every operation", "adjacent levels form a forest"},
                              500);
       }},
      {8, "flag-path theory on the same spaces", 120,
       [] {
         return suite_outcome(suite("flags-paths", 500),
                              {"no nontrivial closed reduced path",
                               "path word independent of search order",
                               "open pairs at the last flag are the final segment"},
                              500);
       }},
      {9, "forking calculus on realized configurations", 120,
       [] {
         return suite_outcome(suite("flags-forking", 1000),
                              {"independent realizations are independent", "restricted transitivity",
                               "unreduced converse fails on the counterexample"},
                              1000);
       }},
      {10, "strong reduction of (s.t).(t.s.t) to s.t", 5, strong_example},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = out.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s %2d %s: %s; %.3f s (limit %g s%s)\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), out.detail.c_str(), secs, c.limit_seconds,
                in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
