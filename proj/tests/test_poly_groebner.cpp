#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matlis/util.hpp"
#include "oracles.hpp"

using namespace matlis;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Polynomial pp(const std::vector<std::string>& vars, const std::string& s) {
  return parse_polynomial(Q, vars, s);
}

}  // namespace

TEST_CASE("polynomial parse and print round trip") {
  std::vector<std::string> vars{"x", "y", "z"};
  for (const char* s : {"3*x^2*y - 1/2*z", "x*y + y^2", "x^3 - 2*x*y*z + z^3", "0", "1", "-x"}) {
    Polynomial p = pp(vars, s);
    CHECK(pp(vars, p.to_string(vars)) == p);
  }
  // terms print in descending degrevlex
  CHECK(pp(vars, "z + x").to_string(vars) == "x + z");
  CHECK_THROWS_AS(pp(vars, "x + w"), MatlisError);
}

TEST_CASE("degrevlex order") {
  // x^2 > y*z, x*y > z^2 in three variables
  Monomial x2({2, 0, 0}), yz({0, 1, 1}), xy({1, 1, 0}), z2({0, 0, 2});
  CHECK(degrevlex_cmp(x2, yz) > 0);
  CHECK(degrevlex_cmp(xy, z2) > 0);
  CHECK(degrevlex_cmp(yz, yz) == 0);
}

TEST_CASE("buchberger on monomial ideals is the identity") {
  std::vector<std::string> vars{"x", "y"};
  auto R = make_polynomial_ring(Q, vars);
  Ideal I(R->poly_ptr(), {pp(vars, "x*y"), pp(vars, "y^2")});
  auto basis = I.reduced_basis();
  REQUIRE(basis.size() == 2);
  // sorted ascending by lead: y^2 precedes x*y in degrevlex
  CHECK(basis[0].to_string(vars) == "y^2");
  CHECK(basis[1].to_string(vars) == "x*y");
  Ideal J(R->poly_ptr(), {pp(vars, "x^2"), pp(vars, "x*y")});
  CHECK(J.reduced_basis().size() == 2);
}

TEST_CASE("buchberger frozen oracle: (x^2 - y z, x y)") {
  std::vector<std::string> vars{"x", "y", "z"};
  auto R = make_polynomial_ring(Q, vars);
  Ideal I(R->poly_ptr(), {pp(vars, "x^2 - y*z"), pp(vars, "x*y")});
  auto basis = I.reduced_basis();
  // frozen by a hand Buchberger run: {x y, x^2 - y z, y^2 z}
  std::vector<std::string> got;
  for (const auto& b : basis) got.push_back(b.to_string(vars));
  std::vector<std::string> expect{"x*y", "x^2 - y*z", "y^2*z"};
  CHECK(got == expect);
  // independent confirmation: every S-pair of the frozen basis reduces to zero
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      Monomial l = Monomial::lcm(basis[i].lead().m, basis[j].lead().m);
      Polynomial s = basis[i].times_monomial(basis[j].lead().c, l.div(basis[i].lead().m)) -
                     basis[j].times_monomial(basis[i].lead().c, l.div(basis[j].lead().m));
      CHECK(I.contains(s));
    }
}

TEST_CASE("normal forms") {
  std::vector<std::string> vars{"x", "y"};
  auto R = make_polynomial_ring(Q, vars);
  Ideal I(R->poly_ptr(), {pp(vars, "x*y"), pp(vars, "y^2")});
  CHECK(I.normal_form(pp(vars, "x*y")).is_zero());
  CHECK(I.normal_form(pp(vars, "x^3 + y")) == pp(vars, "x^3 + y"));
  std::vector<std::string> v3{"x", "y", "z"};
  auto R3 = make_polynomial_ring(Q, v3);
  Ideal I3(R3->poly_ptr(), {parse_polynomial(Q, v3, "x^2 - y*z"), parse_polynomial(Q, v3, "x*y")});
  // frozen by the same hand division: x^2 y + x -> x
  CHECK(I3.normal_form(parse_polynomial(Q, v3, "x^2*y + x")) == parse_polynomial(Q, v3, "x"));
}

TEST_CASE("normal form is constant on cosets") {
  std::vector<std::string> vars{"x", "y", "z"};
  auto R = make_polynomial_ring(Q, vars);
  Ideal I(R->poly_ptr(), {pp(vars, "x^2 - y*z"), pp(vars, "x*y"), pp(vars, "z^3")});
  SplitMix64 rng(5);
  for (int it = 0; it < 60; ++it) {
    // random homogeneous f, reduce, difference must lie in I
    Polynomial f(Q, 3);
    int d = 1 + static_cast<int>(rng.below(4));
    for (const Monomial& m : monomials_of_degree(3, d))
      if (rng.chance(1, 2)) f.add_term(Scalar::from_long(Q, rng.range(-3, 3)), m);
    Polynomial nf = I.normal_form(f);
    CHECK(I.contains(f - nf));
    CHECK(I.normal_form(f - nf).is_zero());
    CHECK(I.normal_form(nf) == nf);  // idempotence
  }
}

TEST_CASE("groebner idempotence on the reduced basis") {
  std::vector<std::string> vars{"x", "y", "z"};
  auto R = make_polynomial_ring(Q, vars);
  Ideal I(R->poly_ptr(), {pp(vars, "x^2 - y*z"), pp(vars, "x*y")});
  Ideal J(R->poly_ptr(), I.reduced_basis());
  CHECK(I.reduced_basis() == J.reduced_basis());
}

TEST_CASE("syzygies: nonzerodivisor and Koszul") {
  std::vector<std::string> vars{"x"};
  auto R = make_polynomial_ring(Q, vars);
  SyzygyTable t1(Q, 1, ModLayout::plain({0}), {vp_from_poly(pp(vars, "x"))});
  CHECK(t1.syzygies().empty());

  std::vector<std::string> v2{"x", "y"};
  SyzygyTable t2(Q, 2, ModLayout::plain({0}),
                 {vp_from_poly(parse_polynomial(Q, v2, "x")), vp_from_poly(parse_polynomial(Q, v2, "y"))});
  REQUIRE(t2.syzygies().size() == 1);
  // the Koszul relation (y, -x) up to sign and normalization
  const VecPoly& s = t2.syzygies()[0];
  REQUIRE(s.size() == 2);
  auto R2 = make_polynomial_ring(Q, v2);
  Polynomial a = vp_component(s, 0, Q, 2), b = vp_component(s, 1, Q, 2);
  CHECK((a * parse_polynomial(Q, v2, "x") + b * parse_polynomial(Q, v2, "y")).is_zero());
}

TEST_CASE("syzygies over a quotient ring match the degreewise oracle") {
  std::vector<std::string> vars{"x", "y"};
  auto R = make_quotient_ring(Q, vars, {"x*y", "y^2"});
  GradedModule free1 = GradedModule::free_module(R, 1);
  std::vector<VecPoly> cols{vp_from_poly(parse_polynomial(Q, vars, "x")),
                            vp_from_poly(parse_polynomial(Q, vars, "y"))};
  // engine syzygies of (x, y) over R
  std::vector<VecPoly> syz = preimage_generators(R, ModLayout::plain({1, 1}), cols, free1.layout(), {});
  for (int d = 1; d <= 4; ++d) {
    std::vector<Vec> oracle = oracles::syzygy_space_at(free1, cols, d);
    std::vector<Vec> engine = oracles::span_at(R, {1, 1}, syz, d);
    int dim = 0;
    for (const Vec& v : oracle) dim = std::max<int>(dim, static_cast<int>(v.size()));
    for (const Vec& v : engine) dim = std::max<int>(dim, static_cast<int>(v.size()));
    CHECK(oracles::same_space(Q, dim, oracle, engine));
  }
}

TEST_CASE("lift expresses members and rejects non-members") {
  std::vector<std::string> vars{"x", "y"};
  SyzygyTable t(Q, 2, ModLayout::plain({0}),
                {vp_from_poly(parse_polynomial(Q, vars, "x^2")), vp_from_poly(parse_polynomial(Q, vars, "x*y"))});
  auto lift = t.lift(vp_from_poly(parse_polynomial(Q, vars, "x^3 + x^2*y")));
  REQUIRE(lift.has_value());
  Polynomial recomposed = (*lift)[0] * parse_polynomial(Q, vars, "x^2") +
                          (*lift)[1] * parse_polynomial(Q, vars, "x*y");
  CHECK(recomposed == parse_polynomial(Q, vars, "x^3 + x^2*y"));
  CHECK(!t.lift(vp_from_poly(parse_polynomial(Q, vars, "y^2"))).has_value());
}

TEST_CASE("ideal operations") {
  std::vector<std::string> vars{"x", "y"};
  auto R = make_polynomial_ring(Q, vars);
  Ideal I(R->poly_ptr(), {pp(vars, "x*y"), pp(vars, "y^2")});
  Ideal J(R->poly_ptr(), {pp(vars, "y")});

  SUBCASE("colon (I : y) = (x, y), frozen by degreewise brute force") {
    Ideal C = Ideal::colon(I, J);
    // brute force: f*y in (xy, y^2) iff f in (x, y), checked in degrees <= 3
    Ideal XY(R->poly_ptr(), {pp(vars, "x"), pp(vars, "y")});
    for (int d = 0; d <= 3; ++d)
      for (const Monomial& m : monomials_of_degree(2, d)) {
        Polynomial f = Polynomial::monomial(Q, Scalar::one(Q), m);
        CHECK(I.contains(f * pp(vars, "y")) == C.contains(f));
        CHECK(C.contains(f) == XY.contains(f));
      }
  }
  SUBCASE("colon by the unit ideal is the identity") {
    Ideal one(R->poly_ptr(), {Polynomial::constant(Q, 2, Scalar::one(Q))});
    Ideal C = Ideal::colon(I, one);
    CHECK(C.reduced_basis() == I.reduced_basis());
  }
  SUBCASE("sum is generator union") {
    Ideal A(R->poly_ptr(), {pp(vars, "x^2")});
    Ideal B(R->poly_ptr(), {pp(vars, "y^2")});
    Ideal S = Ideal::sum(A, B);
    CHECK(S.contains(pp(vars, "x^2")));
    CHECK(S.contains(pp(vars, "y^2")));
    CHECK(!S.contains(pp(vars, "x*y")));
  }
  SUBCASE("product and power") {
    Ideal P = Ideal::product(I, J);
    CHECK(P.contains(pp(vars, "x*y^2")));
    CHECK(!P.contains(pp(vars, "x*y")));
    Ideal J2 = Ideal::power(J, 3);
    CHECK(J2.contains(pp(vars, "y^3")));
    CHECK(!J2.contains(pp(vars, "y^2")));
  }
  SUBCASE("colon soundness on random members") {
    Ideal C = Ideal::colon(I, J);
    SplitMix64 rng(11);
    for (int it = 0; it < 40; ++it) {
      // random element of C times a generator of J lies in I
      Polynomial f(Q, 2);
      for (const Polynomial& c : C.gens()) {
        Monomial u(2);
        u.e[rng.below(2)] += static_cast<int>(rng.below(3));
        if (rng.chance(2, 3)) f = f + c.times_monomial(Scalar::from_long(Q, rng.range(1, 3)), u);
      }
      if (f.is_zero()) continue;
      CHECK(I.contains(f * pp(vars, "y")));
    }
  }
}

TEST_CASE("inhomogeneous generators are rejected") {
  std::vector<std::string> vars{"x", "y"};
  auto R = make_polynomial_ring(Q, vars);
  CHECK_THROWS_AS(Ideal(R->poly_ptr(), {pp(vars, "x^2 + y")}), MatlisError);
}
