#include <doctest.h>

#include <array>
#include <random>

#include "psn/error.hpp"
#include "psn/ordinal.hpp"

using namespace psn;

namespace {

CnfOrdinal O(const char* text) { return CnfOrdinal::parse(text); }

// Ordinals below w^5 as a coefficient vector, highest exponent first.  Left
// addition keeps a's coefficients above b's leading exponent, adds at it,
// and takes b below it.
using Vec = std::array<std::uint64_t, 5>;

Vec vec_add(const Vec& a, const Vec& b) {
  std::size_t lead = 0;
  while (lead < 5 && b[lead] == 0) ++lead;
  if (lead == 5) return a;
  Vec out{};
  for (std::size_t i = 0; i < lead; ++i) out[i] = a[i];
  out[lead] = a[lead] + b[lead];
  for (std::size_t i = lead + 1; i < 5; ++i) out[i] = b[i];
  return out;
}

CnfOrdinal from_vec(const Vec& v) {
  CnfOrdinal out;
  for (std::size_t i = 0; i < 5; ++i) {
    out = cnf_add(out, CnfOrdinal::omega_power(4 - i, v[i]));
  }
  return out;
}

Vec random_vec(std::mt19937_64& rng) {
  Vec v{};
  for (auto& c : v) c = rng() % 3 == 0 ? rng() % 4 : 0;
  return v;
}

}  // namespace

TEST_CASE("comparison") {
  CHECK(cnf_cmp(O("w^2"), O("w^2+w")) == std::strong_ordering::less);
  CHECK(cnf_cmp(O("w*3"), O("w*3")) == std::strong_ordering::equal);
  CHECK(cnf_cmp(O("w^2"), O("w*100")) == std::strong_ordering::greater);
  CHECK(O("0") < O("1"));
  CHECK(O("5") < O("w"));
}

TEST_CASE("ordinal addition") {
  CHECK(cnf_add(O("w+1"), O("w^2")) == O("w^2"));
  CHECK(cnf_add(O("w^2"), O("w")) == O("w^2+w"));
  CHECK(cnf_add(O("0"), O("w^3+2")) == O("w^3+2"));
  CHECK(cnf_add(O("w+3"), O("w")) == O("w*2"));
  CHECK(cnf_add(O("w^2+w"), O("0")) == O("w^2+w"));
}

TEST_CASE("text form") {
  CHECK(O("w^2+w^1*1+w^0*3").to_string() == "w^2+w+3");
  CHECK(O("0").to_string() == "0");
  CHECK(O("w*2+w").to_string() == "w*3");
  CHECK(O("1+w").to_string() == "w");
  CHECK(CnfOrdinal::omega_power(3, 0).is_zero());
  for (const char* bad : {"", "w^", "x", "w+", "w^2*0", "2w"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(O(bad), Error);
  }
}

TEST_CASE("addition against coefficient vectors") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 2000; ++k) {
    const Vec a = random_vec(rng), b = random_vec(rng), c = random_vec(rng);
    const CnfOrdinal A = from_vec(a), B = from_vec(b), C = from_vec(c);
    CHECK(cnf_add(A, B) == from_vec(vec_add(a, b)));
    CHECK(cnf_add(cnf_add(A, B), C) == cnf_add(A, cnf_add(B, C)));
    CHECK(B <= cnf_add(A, B));
    CHECK(A <= cnf_add(A, B));
    CHECK((cnf_cmp(A, B) < 0) == (a < b));
    CHECK((cnf_cmp(A, B) == 0) == (a == b));
    CHECK(CnfOrdinal::parse(A.to_string()) == A);
  }
}
