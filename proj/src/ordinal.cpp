#include "psn/ordinal.hpp"

#include <charconv>

#include "psn/error.hpp"

namespace psn {

CnfOrdinal CnfOrdinal::finite(std::uint64_t k) { return omega_power(0, k); }

CnfOrdinal CnfOrdinal::omega_power(std::uint64_t e, std::uint64_t c) {
  CnfOrdinal out;
  if (c > 0) out.terms_.push_back({e, c});
  return out;
}

std::string CnfOrdinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += '+';
    if (t.exponent == 0) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
    if (t.coefficient > 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

namespace {

bool take_natural(std::string_view& text, std::uint64_t& value) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr == text.data()) return false;
  text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
  return true;
}

CnfOrdinal parse_term(std::string_view term, std::string_view whole) {
  auto fail = [&] {
    return Error(Errc::parse_error, "bad ordinal '" + std::string(whole) + "'");
  };
  std::uint64_t exponent = 0;
  std::uint64_t coefficient = 1;
  if (!term.empty() && term.front() == 'w') {
    term.remove_prefix(1);
    exponent = 1;
    if (!term.empty() && term.front() == '^') {
      term.remove_prefix(1);
      if (!take_natural(term, exponent)) throw fail();
    }
    if (!term.empty() && term.front() == '*') {
      term.remove_prefix(1);
      if (!take_natural(term, coefficient) || coefficient == 0) throw fail();
    }
  } else if (!take_natural(term, coefficient)) {
    throw fail();
  }
  if (!term.empty()) throw fail();
  return CnfOrdinal::omega_power(exponent, coefficient);
}

}  // namespace

CnfOrdinal CnfOrdinal::parse(std::string_view text) {
  if (text.empty()) throw Error(Errc::parse_error, "empty ordinal");
  CnfOrdinal sum;
  std::string_view rest = text;
  for (;;) {
    std::size_t plus = rest.find('+');
    sum = cnf_add(sum, parse_term(rest.substr(0, plus), text));
    if (plus == std::string_view::npos) break;
    rest.remove_prefix(plus + 1);
  }
  return sum;
}

std::strong_ordering cnf_cmp(const CnfOrdinal& a, const CnfOrdinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i].exponent != y[i].exponent) return x[i].exponent <=> y[i].exponent;
    if (x[i].coefficient != y[i].coefficient) {
      return x[i].coefficient <=> y[i].coefficient;
    }
  }
  return x.size() <=> y.size();
}

CnfOrdinal cnf_add(const CnfOrdinal& a, const CnfOrdinal& b) {
  if (b.is_zero()) return a;
  const std::uint64_t lead = b.terms().front().exponent;
  CnfOrdinal out;
  for (const auto& t : a.terms()) {
    if (t.exponent > lead) {
      out.terms_.push_back(t);
    } else if (t.exponent == lead) {
      out.terms_.push_back({lead, t.coefficient + b.terms().front().coefficient});
    }
  }
  bool merged = !out.terms_.empty() && out.terms_.back().exponent == lead;
  for (std::size_t i = merged ? 1 : 0; i < b.terms().size(); ++i) {
    out.terms_.push_back(b.terms()[i]);
  }
  return out;
}

}  // namespace psn
