#pragma once

// Ordinals below ω^ω in Cantor normal form.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace psn {

class CnfOrdinal {
 public:
  struct Term {
    std::uint64_t exponent;
    std::uint64_t coefficient;
    bool operator==(const Term&) const = default;
  };

  CnfOrdinal() = default;
  static CnfOrdinal finite(std::uint64_t k);
  // ω^e · c; zero when c == 0.
  static CnfOrdinal omega_power(std::uint64_t e, std::uint64_t c = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Canonical text, e.g. "w^2+w+3"; "0" for zero.
  std::string to_string() const;
  // Accepts any sum of "w^k*c", "w^k", "w*c", "w", "c" terms and evaluates
  // it with ordinal addition, so "w^2+w^1*1+w^0*3" parses to w^2+w+3.
  static CnfOrdinal parse(std::string_view text);

  bool operator==(const CnfOrdinal&) const = default;

 private:
  friend CnfOrdinal cnf_add(const CnfOrdinal& a, const CnfOrdinal& b);

  std::vector<Term> terms_;  // exponents strictly decreasing, coefficients > 0
};

std::strong_ordering cnf_cmp(const CnfOrdinal& a, const CnfOrdinal& b);
inline bool operator<(const CnfOrdinal& a, const CnfOrdinal& b) {
  return cnf_cmp(a, b) < 0;
}
inline bool operator<=(const CnfOrdinal& a, const CnfOrdinal& b) {
  return cnf_cmp(a, b) <= 0;
}

// Ordinal (non-commutative) sum a + b.
CnfOrdinal cnf_add(const CnfOrdinal& a, const CnfOrdinal& b);

}  // namespace psn
