#include "psn/alphabet.hpp"

#include <bit>
#include <charconv>

#include "psn/error.hpp"

namespace psn {

void check_dimension(int n) {
  if (n < 0 || n > kMaxDimension) {
    throw Error(Errc::invalid_dimension,
                "dimension " + std::to_string(n) + " outside [0," +
                    std::to_string(kMaxDimension) + "]");
  }
}

IndexSet IndexSet::interval(int lo, int hi) {
  IndexSet s;
  for (int i = lo; i <= hi; ++i) s.insert(i);
  return s;
}

int IndexSet::size() const { return std::popcount(bits_); }

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

namespace {

// Parses a decimal natural at the front of text, advancing it.
bool take_number(std::string_view& text, int& value) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr == text.data() || value < 0) return false;
  text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
  return true;
}

bool take(std::string_view& text, char c) {
  if (text.empty() || text.front() != c) return false;
  text.remove_prefix(1);
  return true;
}

}  // namespace

IndexSet IndexSet::parse(std::string_view text, int n) {
  std::string_view rest = text;
  IndexSet s;
  auto fail = [&] {
    return Error(Errc::parse_error, "bad index set '" + std::string(text) + "'");
  };
  if (!take(rest, '{')) throw fail();
  if (take(rest, '}')) return rest.empty() ? s : throw fail();
  for (;;) {
    int i = 0;
    if (!take_number(rest, i)) throw fail();
    if (i > n) {
      throw Error(Errc::invalid_letter, "index " + std::to_string(i) +
                                            " exceeds dimension " + std::to_string(n));
    }
    s.insert(i);
    if (take(rest, '}')) break;
    if (!take(rest, ',')) throw fail();
  }
  if (!rest.empty()) throw fail();
  return s;
}

Letter parse_letter(std::string_view text, int n) {
  std::string_view rest = text;
  auto fail = [&] {
    return Error(Errc::parse_error, "bad letter '" + std::string(text) + "'");
  };
  Letter s;
  if (!take(rest, '[') || !take_number(rest, s.lo)) throw fail();
  s.hi = s.lo;
  if (take(rest, ',') && !take_number(rest, s.hi)) throw fail();
  if (!take(rest, ']') || !rest.empty()) throw fail();
  if (!s.valid_for(n)) {
    throw Error(Errc::invalid_letter, "letter " + std::string(text) +
                                          " is not a nonempty interval in [0," +
                                          std::to_string(n) + "]");
  }
  return s;
}

std::string to_string(Letter s) {
  if (s.lo == s.hi) return "[" + std::to_string(s.lo) + "]";
  return "[" + std::to_string(s.lo) + "," + std::to_string(s.hi) + "]";
}

bool commutes(Letter s, Letter t) {
  return t.lo >= s.hi + 2 || s.lo >= t.hi + 2;
}

bool contains(Letter s, Letter t, bool proper) {
  bool sub = s.lo <= t.lo && t.hi <= s.hi;
  return proper ? sub && s != t : sub;
}

bool letter_lt(Letter s, Letter t) { return t.lo >= s.hi + 2; }

IndexSet centralizer(const std::vector<Letter>& letters, int n) {
  IndexSet out;
  for (int i = 0; i <= n; ++i) {
    bool ok = true;
    for (Letter s : letters) {
      if (!(i <= s.lo - 2 || i >= s.hi + 2)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(i);
  }
  return out;
}

std::vector<Letter> all_letters(int n) {
  std::vector<Letter> out;
  for (int lo = 0; lo <= n; ++lo) {
    for (int hi = lo; hi <= n; ++hi) out.push_back({lo, hi});
  }
  return out;
}

}  // namespace psn
