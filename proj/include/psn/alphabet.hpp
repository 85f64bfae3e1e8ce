#pragma once

// Letters are nonempty intervals of levels in [0,N].  They are stored as the
// closed set [lo,hi]; the open-interval notation (l,r) used elsewhere for the
// same letter has l = lo-1 and r = hi+1, so the sentinel levels -1 and N+1
// never appear in the monoid layer.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace psn {

inline constexpr int kMaxDimension = 62;

// Throws invalid-dimension unless 0 <= n <= kMaxDimension.
void check_dimension(int n);

class IndexSet {
 public:
  constexpr IndexSet() = default;
  static constexpr IndexSet from_bits(std::uint64_t bits) {
    IndexSet s;
    s.bits_ = bits;
    return s;
  }
  // {lo,...,hi}; empty when lo > hi.
  static IndexSet interval(int lo, int hi);
  static IndexSet full(int n) { return interval(0, n); }

  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const;
  bool contains(int i) const {
    return i >= 0 && i < 64 && ((bits_ >> i) & 1U);
  }
  void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  std::vector<int> members() const;

  IndexSet operator|(IndexSet o) const { return from_bits(bits_ | o.bits_); }
  IndexSet operator&(IndexSet o) const { return from_bits(bits_ & o.bits_); }
  IndexSet operator-(IndexSet o) const { return from_bits(bits_ & ~o.bits_); }
  IndexSet& operator|=(IndexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  IndexSet& operator&=(IndexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  bool operator==(const IndexSet&) const = default;

  // "{1,2}"; "{}" when empty.
  std::string to_string() const;
  static IndexSet parse(std::string_view text, int n);

 private:
  std::uint64_t bits_ = 0;
};

struct Letter {
  int lo = 0;
  int hi = 0;

  int size() const { return hi - lo + 1; }
  IndexSet levels() const { return IndexSet::interval(lo, hi); }
  bool valid_for(int n) const { return 0 <= lo && lo <= hi && hi <= n; }

  bool operator==(const Letter&) const = default;
  // Lexicographic on (lo, hi); only used for containers and tie-breaking.
  auto operator<=>(const Letter&) const = default;
};

// "[a]" or "[a,b]", strict: decimal digits only, no whitespace.
Letter parse_letter(std::string_view text, int n);
std::string to_string(Letter s);

bool commutes(Letter s, Letter t);
// t ⊆ s, and t != s when proper.
bool contains(Letter s, Letter t, bool proper = false);
// s commutes with t and lies entirely below it.
bool letter_lt(Letter s, Letter t);
IndexSet centralizer(const std::vector<Letter>& letters, int n);

// All letters valid for dimension n, ordered by (lo, hi).
std::vector<Letter> all_letters(int n);

}  // namespace psn
