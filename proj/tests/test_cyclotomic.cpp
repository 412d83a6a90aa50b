#include <random>

#include "doctest.h"
#include "reflekt/cyclotomic.hpp"
#include "reflekt/errors.hpp"

using namespace reflekt;

namespace {

CycNumber random_cyc(std::mt19937& rng, unsigned conductor) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> c(conductor);
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return CycNumber::from_powers(conductor, c);
}

}  // namespace

TEST_CASE("roots of unity") {
  const CycNumber i = primitive_root(4, 1);
  CHECK(i * i == CycNumber(-1L));
  const CycNumber w = primitive_root(3, 1);
  CHECK((CycNumber(1L) + w + w * w).is_zero());
  const CycNumber z12 = primitive_root(12, 1);
  CHECK(z12.pow(3) == primitive_root(4, 1).embed(12));
  CHECK(z12.pow(3).conductor() == 12);
  CHECK(z12.pow(12).is_one());
  CHECK(primitive_root(2, 1) == CycNumber(-1L));
  CHECK(primitive_root(1, 0).is_one());
  CHECK(primitive_root(6, 3) == CycNumber(-1L));
  CHECK(primitive_root(5, -1) == primitive_root(5, 4));
}

TEST_CASE("cyclotomic polynomials and phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(60) == 16);
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(lcm_conductor(4, 6) == 12);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(20240601);
  for (unsigned m : {1u, 3u, 4u, 5u, 8u, 12u, 18u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CycNumber a = random_cyc(rng, m);
      const CycNumber b = random_cyc(rng, m);
      const CycNumber c = random_cyc(rng, m);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == CycNumber());
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("conductor unification matches explicit embedding") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const CycNumber a = random_cyc(rng, 4);
    const CycNumber b = random_cyc(rng, 6);
    CHECK(a * b == a.embed(12) * b.embed(12));
    CHECK(a + b == a.embed(12) + b.embed(12));
    CHECK((a * b).conductor() == 12);
  }
}

TEST_CASE("equality is structural after reduction") {
  // z^2 - z + 1 = 0 at conductor 6
  CHECK(parse_cyc_literal("z^2", 6) == parse_cyc_literal("z - 1", 6));
  CHECK(parse_cyc_literal("z^6", 6).is_one());
  CHECK(parse_cyc_literal("z^3", 6) == CycNumber(-1L));
  CHECK(CycNumber(Rational(1, 2)).is_rational());
  CHECK(CycNumber(Rational(1, 2)).to_rational() == Rational(1, 2));
  CHECK_FALSE(primitive_root(3, 1).is_rational());
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(CycNumber(1L) / CycNumber(), DomainError);
  CHECK_THROWS_AS(CycNumber().inverse(), DomainError);
}

TEST_CASE("conjugation and galois action") {
  const CycNumber z = primitive_root(12, 1);
  CHECK(z.conj() == primitive_root(12, -1));
  CHECK((z * z.conj()).is_one());
  CHECK(z.galois(5) == primitive_root(12, 5));
  const CycNumber x = parse_cyc_literal("1/2 - 1/3*z^2 + z^3", 12);
  CHECK((x * x.conj()).conj() == x * x.conj());
}

TEST_CASE("literal parsing") {
  CHECK(parse_cyc_literal("1/2 - 1/2*z^3", 12).to_string() == "1/2 - 1/2*z^3");
  CHECK(parse_cyc_literal("-z", 4) == -primitive_root(4, 1));
  CHECK(parse_cyc_literal("3z^2", 5) == CycNumber(3L) * primitive_root(5, 2));
  CHECK(parse_cyc_literal("z^-1", 5) == primitive_root(5, 4));
  CHECK(parse_cyc_literal(" 2 / 4 ", 1) == CycNumber(Rational(1, 2)));
  CHECK(parse_cyc_literal("0", 7).is_zero());
  CHECK_THROWS_AS(parse_cyc_literal("1 +", 4), ParseError);
  CHECK_THROWS_AS(parse_cyc_literal("y^2", 4), ParseError);
  CHECK_THROWS_AS(parse_cyc_literal("1/0", 4), ParseError);
  CHECK_THROWS_AS(parse_cyc_literal("", 4), ParseError);
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937 rng(99);
  for (unsigned m : {1u, 5u, 9u, 12u, 24u, 60u}) {
    for (int trial = 0; trial < 25; ++trial) {
      const CycNumber a = random_cyc(rng, m);
      CHECK(parse_cyc_literal(a.to_string(), m) == a);
    }
  }
}

TEST_CASE("hashing agrees with equality") {
  const CycNumber a = parse_cyc_literal("z^2", 6);
  const CycNumber b = parse_cyc_literal("z - 1", 6);
  CHECK(a.hash() == b.hash());
  CHECK(std::hash<CycNumber>{}(a) == std::hash<CycNumber>{}(b));
}
