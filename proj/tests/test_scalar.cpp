#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matlis/field.hpp"
#include "matlis/util.hpp"
#include "oracles.hpp"

using namespace matlis;

TEST_CASE("rational arithmetic is exact and canonical") {
  auto F = FieldSpec::rationals();
  CHECK((Scalar::from_fraction(F, 1, 2) + Scalar::from_fraction(F, 1, 3)).to_string() == "5/6");
  CHECK(Scalar::from_fraction(F, 2, 4) == Scalar::from_fraction(F, 1, 2));
  CHECK(Scalar::from_fraction(F, 1, -2).to_string() == "-1/2");  // positive denominator
  CHECK(Scalar::parse(F, "-7/21").to_string() == "-1/3");
}

TEST_CASE("prime field division") {
  auto F5 = FieldSpec::prime_field(5);
  CHECK((Scalar::from_long(F5, 2) / Scalar::from_long(F5, 2)).is_one());
  auto F7 = FieldSpec::prime_field(7);
  // 5^{-1} = 3 in F_7 by brute force, so 3/5 = 9 = 2
  CHECK(oracles::brute_inverse(5, 7) == 3);
  CHECK((Scalar::from_long(F7, 3) / Scalar::from_long(F7, 5)).to_string() == "2");
}

TEST_CASE("division by zero and mixed fields are errors") {
  auto F = FieldSpec::rationals();
  auto F5 = FieldSpec::prime_field(5);
  CHECK_THROWS_AS(Scalar::one(F) / Scalar::zero(F), MatlisError);
  CHECK_THROWS_AS(Scalar::one(F) + Scalar::one(F5), MatlisError);
  CHECK_THROWS_AS(FieldSpec::prime_field(6), MatlisError);
}

TEST_CASE("inverses on random scalars") {
  for (FieldSpec F : {FieldSpec::prime_field(32003), FieldSpec::rationals()}) {
    SplitMix64 rng(12345);
    for (int it = 0; it < 1000; ++it) {
      Scalar a = F.kind == FieldKind::prime_field
                     ? Scalar::from_long(F, 1 + static_cast<long>(rng.below(F.p - 1)))
                     : Scalar::from_fraction(F, rng.range(-40, 40), rng.range(1, 40));
      if (a.is_zero()) continue;
      CHECK(a * a.inv() == Scalar::one(F));
    }
  }
}

TEST_CASE("canonical form is idempotent through parsing") {
  auto F = FieldSpec::rationals();
  SplitMix64 rng(99);
  for (int it = 0; it < 200; ++it) {
    Scalar a = Scalar::from_fraction(F, rng.range(-50, 50), rng.range(1, 50));
    CHECK(Scalar::parse(F, a.to_string()) == a);
  }
  auto Fp = FieldSpec::prime_field(32003);
  for (int it = 0; it < 200; ++it) {
    Scalar a = Scalar::from_long(Fp, rng.range(-100000, 100000));
    CHECK(Scalar::parse(Fp, a.to_string()) == a);
  }
}

TEST_CASE("field axioms on random triples") {
  for (FieldSpec F : {FieldSpec::prime_field(32003), FieldSpec::rationals()}) {
    SplitMix64 rng(7);
    for (int it = 0; it < 300; ++it) {
      auto rand = [&] {
        return F.kind == FieldKind::prime_field
                   ? Scalar::from_long(F, static_cast<long>(rng.below(F.p)))
                   : Scalar::from_fraction(F, rng.range(-20, 20), rng.range(1, 20));
      };
      Scalar a = rand(), b = rand(), c = rand();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
    }
  }
}
