#include <doctest.h>

#include <cstdlib>

#include "psn/alphabet.hpp"
#include "psn/error.hpp"

using namespace psn;

namespace {

Letter L(const char* text, int n = 3) { return parse_letter(text, n); }

// Level distance between two intervals, straight from the sets.
int gap(Letter s, Letter t) {
  int best = 1 << 20;
  for (int i = s.lo; i <= s.hi; ++i) {
    for (int j = t.lo; j <= t.hi; ++j) best = std::min(best, std::abs(i - j));
  }
  return best;
}

}  // namespace

TEST_CASE("commutes") {
  CHECK(commutes(L("[0]"), L("[2,3]")));
  CHECK_FALSE(commutes(L("[0,1]"), L("[1,3]")));
  CHECK_FALSE(commutes(L("[0,1]", 2), L("[0,1]", 2)));
  CHECK_FALSE(commutes(L("[0]"), L("[1]")));
}

TEST_CASE("contains") {
  CHECK(contains(L("[0,1]"), L("[0]"), true));
  CHECK_FALSE(contains(L("[0,1]"), L("[0,1]"), true));
  CHECK(contains(L("[0,1]"), L("[0,1]")));
  CHECK_FALSE(contains(L("[1,3]"), L("[0,1]")));
}

TEST_CASE("letter_lt") {
  CHECK(letter_lt(L("[0]"), L("[2,3]")));
  CHECK_FALSE(letter_lt(L("[2,3]"), L("[0]")));
  CHECK_FALSE(letter_lt(L("[0,1]"), L("[1,3]")));
}

TEST_CASE("centralizer") {
  CHECK(centralizer({L("[1,2]")}, 3).empty());
  CHECK(centralizer({L("[0]")}, 3) == IndexSet::interval(2, 3));
  CHECK(centralizer({}, 3) == IndexSet::full(3));
}

TEST_CASE("letter laws over every pair, N <= 4") {
  for (int n = 0; n <= 4; ++n) {
    const auto letters = all_letters(n);
    CHECK(letters.size() == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
    for (Letter s : letters) {
      CHECK_FALSE(commutes(s, s));
      for (Letter t : letters) {
        CHECK(commutes(s, t) == (gap(s, t) >= 2));
        CHECK(commutes(s, t) == commutes(t, s));
        if (letter_lt(s, t)) CHECK(commutes(s, t));
        CHECK_FALSE((letter_lt(s, t) && letter_lt(t, s)));
        if (commutes(s, t)) CHECK((letter_lt(s, t) || letter_lt(t, s)));
        if (contains(s, t) && contains(t, s)) CHECK(s == t);
        if (contains(s, t, true)) CHECK_FALSE(commutes(s, t));

        const IndexSet both = centralizer({s, t}, n);
        CHECK(both == (centralizer({s}, n) & centralizer({t}, n)));
        for (int i = 0; i <= n; ++i) {
          CHECK(both.contains(i) == (gap(s, {i, i}) >= 2 && gap(t, {i, i}) >= 2));
        }
      }
    }
  }
}

TEST_CASE("letter syntax is strict") {
  CHECK(to_string(L("[1,3]")) == "[1,3]");
  CHECK(to_string(L("[2]")) == "[2]");
  CHECK(to_string(L("[2,2]")) == "[2]");
  for (const char* bad : {"[1, 3]", "[3,1]", "1", "[4]", "[-1]", "[]", "[1,3", "[a]", " [1]"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_letter(bad, 3), Error);
  }
  try {
    parse_letter("[4]", 3);
  } catch (const Error& e) {
    CHECK(std::string(e.name()) == "invalid-letter");
  }
}

TEST_CASE("index sets") {
  IndexSet s = IndexSet::parse("{0,2,3}", 3);
  CHECK(s.to_string() == "{0,2,3}");
  CHECK(s.size() == 3);
  CHECK(IndexSet{}.to_string() == "{}");
  CHECK(IndexSet::interval(2, 1).empty());
  CHECK((s - IndexSet::interval(2, 2)) == (IndexSet::interval(0, 0) | IndexSet::interval(3, 3)));
  CHECK((s & IndexSet::interval(1, 2)).members() == std::vector<int>{2});
  CHECK_THROWS_AS(IndexSet::parse("{4}", 3), Error);
  CHECK_THROWS_AS(check_dimension(kMaxDimension + 1), Error);
  CHECK_THROWS_AS(check_dimension(-1), Error);
}
