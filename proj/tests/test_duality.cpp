#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matlis/suite.hpp"
#include "matlis/util.hpp"
#include "oracles.hpp"

using namespace matlis;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec FP = FieldSpec::prime_field(32003);

Polynomial pp(const RingPtr& R, const std::string& s) {
  return parse_polynomial(R->field(), R->vars(), s);
}

GradedModule random_finite_module(SplitMix64& rng, const RingPtr& R) {
  InstanceSpec spec;
  spec.seed = rng.next();
  spec.field = R->field();
  Instance inst = gen_instance(spec);
  (void)inst;
  // generate over the *given* ring: a cyclic or 2-generated module with caps
  int rank = 1 + static_cast<int>(rng.below(2));
  std::vector<int> degs;
  for (int j = 0; j < rank; ++j) degs.push_back(static_cast<int>(rng.below(2)));
  std::vector<VecPoly> rels;
  int n = R->nvars();
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < n; ++i) {
      Monomial cap(n);
      cap.e[i] = 1 + static_cast<int>(rng.below(2));
      rels.push_back(VecPoly{{Scalar::one(R->field()), j, cap}});
    }
  // one extra mixed relation for texture
  if (rank == 2 && rng.chance(1, 2)) {
    Monomial u(n);
    u.e[rng.below(n)] = 1 + degs[0] - degs[0];
    VecPoly col{{Scalar::one(R->field()), 0, u}};
    rels.push_back(vp_normalize(ModLayout::plain(degs), std::move(col)));
  }
  return GradedModule(R, degs, rels);
}

}  // namespace

TEST_CASE("dualize: simple examples") {
  auto Rx = make_polynomial_ring(Q, {"x"});
  SUBCASE("k is self dual") {
    auto k = make_finite(GradedModule::residue_field(Rx));
    DualResult d = dualize(k);
    CHECK(d.mod.dim() == 1);
    CHECK(conjugate_certificate(k, d.mod, 1));
  }
  SUBCASE("R/(x^2) is self dual") {
    auto v = make_finite(GradedModule::cyclic(Rx, {pp(Rx, "x^2")}));
    DualResult d = dualize(v);
    CHECK(d.mod.dim() == 2);
    CHECK(d.mod.min_generators() == 1);
    CHECK(conjugate_certificate(v, d.mod, 7));
  }
  SUBCASE("R/(x^2,xy,y^2): Hilbert (1,2) dualizes to (2,1)") {
    auto R = make_polynomial_ring(Q, {"x", "y"});
    auto v = make_finite(GradedModule::cyclic(R, {pp(R, "x^2"), pp(R, "x*y"), pp(R, "y^2")}));
    DualResult d = dualize(v, /*normalize=*/true);
    CHECK(d.mod.dim() == 3);
    CHECK(d.mod.min_generators() == 2);
    auto h = d.mod.hilbert();
    CHECK(h[0] == 2);
    CHECK(h[1] == 1);
  }
}

TEST_CASE("biduality preserves dimensions degreewise and operator type") {
  SplitMix64 rng(2024);
  for (int it = 0; it < 8; ++it) {
    RingPtr R = it % 2 ? make_quotient_ring(FP, {"x", "y"}, {"x*y"}) : make_polynomial_ring(FP, {"x", "y"});
    auto v = make_finite(random_finite_module(rng, R));
    DualResult d1 = dualize(v);
    DualResult d2 = dualize(d1.mod);
    CHECK(v.dim() == d2.mod.dim());
    // degreewise equality up to overall shift
    std::vector<long> h1, h2;
    for (auto& [deg, c] : v.hilbert()) h1.push_back(c);
    for (auto& [deg, c] : d2.mod.hilbert()) h2.push_back(c);
    CHECK(h1 == h2);
    CHECK(conjugate_certificate(v, d2.mod, 55 + it));
    // minimal generators of the dual = socle dimension of the original
    CHECK(d1.mod.min_generators() == v.socle_dim());
  }
}

TEST_CASE("artinian wrap and round trip") {
  auto R = make_quotient_ring(Q, {"x", "y"}, {"x*y", "y^2"});
  auto E = injective_hull(R);
  CHECK(hilbert_equal_upto(dual_witness(E), GradedModule::free_module(R, 1), 6));
  auto k = GradedModule::residue_field(R);
  ArtinianModule dk = artinian_dual(k);
  CHECK(dual_witness(dk).length() == 1);
}

TEST_CASE("socle stages of E") {
  auto Rx = make_polynomial_ring(Q, {"x"});
  auto E = injective_hull(Rx);
  CHECK(socle_stage(E, 0).dim() == 0);
  CHECK(socle_stage(E, 1).dim() == 1);
  for (int s = 1; s <= 4; ++s) {
    FiniteLengthModule v = socle_stage(E, s);
    CHECK(v.dim() == s);  // (0 :_E x^s) = D(R/x^s)
    CHECK(v.min_generators() == 1);
  }
}

TEST_CASE("stabilization exponents") {
  auto Rx = make_polynomial_ring(Q, {"x"});
  CHECK(stabilization_exponent(injective_hull(Rx)) == 0);
  auto R2 = make_quotient_ring(Q, {"x", "y"}, {"x*y", "y^2"});
  CHECK(stabilization_exponent(injective_hull(R2)) == 1);
  CHECK(stabilization_exponent(artinian_dual(GradedModule::residue_field(R2))) == 1);
}

TEST_CASE("hom from artinian to finitely generated") {
  auto Rx = make_polynomial_ring(Q, {"x"});
  auto E = injective_hull(Rx);
  SUBCASE("Hom(E, R) = 0 over k[x]") {
    HomArtinianResult h = hom_artinian_to_fg(E, GradedModule::free_module(Rx, 1));
    CHECK(h.s == 0);
    CHECK(h.hom.dim() == 0);
  }
  SUBCASE("Hom(D(k), k) = k") {
    auto k = GradedModule::residue_field(Rx);
    HomArtinianResult h = hom_artinian_to_fg(artinian_dual(k), k);
    CHECK(h.hom.dim() == 1);
  }
  SUBCASE("Hom(E, R) over k[x,y]/(xy,y^2) has length 1 with s = 1") {
    auto R2 = make_quotient_ring(Q, {"x", "y"}, {"x*y", "y^2"});
    HomArtinianResult h = hom_artinian_to_fg(injective_hull(R2), GradedModule::free_module(R2, 1));
    CHECK(h.s == 1);
    CHECK(h.n == 1);
    CHECK(h.t == 1);
    CHECK(h.hom.dim() == 1);
    // cross-check against the theorem's bound beta_0(E) len(0:_R m)
    long bound = betti_bass(GradedModule::free_module(R2, 1), 0).second[0] *
                 submodule_op(GradedModule::free_module(R2, 1), R2->maximal_ideal(), 1, SubOp::colon).length();
    CHECK(h.hom.dim() <= bound);
  }
}

TEST_CASE("tensor with artinian values") {
  SUBCASE("E (x) E over k[x] vanishes (divisible module)") {
    auto Rx = make_polynomial_ring(Q, {"x"});
    CHECK(tensor_artinian_pair(injective_hull(Rx), injective_hull(Rx)).dim() == 0);
  }
  SUBCASE("E (x) E over k[x,y]/(xy,y^2) is k") {
    auto R = make_quotient_ring(Q, {"x", "y"}, {"x*y", "y^2"});
    FiniteLengthModule t = tensor_artinian_pair(injective_hull(R), injective_hull(R));
    CHECK(t.dim() == 1);
    CHECK(t.hilbert().begin()->first == 0);
  }
  SUBCASE("the general family E_S (x) E_S = S/(x^a, y^(c-b))") {
    struct Case {
      long a, b, c;
    };
    for (Case cs : {Case{1, 1, 2}, Case{2, 1, 3}, Case{3, 2, 5}}) {
      auto S = make_quotient_ring(Q, {"x", "y"},
                                  {"x^" + std::to_string(cs.a) + "*y^" + std::to_string(cs.b),
                                   "y^" + std::to_string(cs.c)});
      FiniteLengthModule t = tensor_artinian_pair(injective_hull(S), injective_hull(S));
      CHECK(t.dim() == cs.a * (cs.c - cs.b));
      auto closed = make_finite(GradedModule::cyclic(
          S, {pp(S, "x^" + std::to_string(cs.a)), pp(S, "y^" + std::to_string(cs.c - cs.b))}));
      CHECK(t.hilbert() == closed.hilbert());
    }
  }
  SUBCASE("non-torsion noetherian partner is rejected") {
    auto Rx = make_polynomial_ring(Q, {"x"});
    CHECK_THROWS_AS(tensor_artinian_fl(injective_hull(Rx), GradedModule::free_module(Rx, 1)),
                    MatlisError);
  }
}

TEST_CASE("ext of artinian pairs: worked example values") {
  auto Rx = make_polynomial_ring(Q, {"x"});
  auto Dx = artinian_dual(GradedModule::cyclic(Rx, {pp(Rx, "x")}));
  std::vector<long> expect{1, 1, 0, 0};
  for (int i = 0; i <= 3; ++i) {
    GradedModule e = ext_artinian_pair(i, Dx, Dx);
    CHECK((e.finite_data().finite ? e.finite_data().length : -1) == expect[i]);
  }
  auto Rxy = make_polynomial_ring(Q, {"x", "y"});
  auto Dy2 = artinian_dual(GradedModule::cyclic(Rxy, {pp(Rxy, "y")}));
  auto Dx2 = artinian_dual(GradedModule::cyclic(Rxy, {pp(Rxy, "x")}));
  for (int i = 0; i <= 3; ++i) {
    GradedModule e = ext_artinian_pair(i, Dy2, Dx2);
    CHECK((e.finite_data().finite ? e.finite_data().length : 0) == (i == 1 ? 1 : 0));
  }
  auto k = GradedModule::residue_field(Rx);
  CHECK(ext_artinian_pair(0, artinian_dual(k), artinian_dual(k)).length() == 1);
}

TEST_CASE("mixed ext and tor") {
  auto Rx = make_polynomial_ring(Q, {"x"});
  auto E = injective_hull(Rx);
  auto k = GradedModule::residue_field(Rx);
  SUBCASE("Tor_i(k, E) over k[x]") {
    CHECK(tor_fg_with_artinian(0, k, E).is_zero());
    CHECK(dual_witness(tor_fg_with_artinian(1, k, E)).length() == 1);
  }
  SUBCASE("Ext^0(R, A) = A") {
    auto free1 = GradedModule::free_module(Rx, 1);
    ArtinianModule a = ext_fg_to_artinian(0, free1, E);
    CHECK(hilbert_equal_upto(dual_witness(a), dual_witness(E), 6));
  }
  SUBCASE("Tor_0(R/x, E) = 0 over k[x]") {
    auto Rmodx = GradedModule::cyclic(Rx, {pp(Rx, "x")});
    CHECK(tor_fg_with_artinian(0, Rmodx, E).is_zero());
  }
}

TEST_CASE("stage sequences: all worked examples") {
  auto Rx = make_polynomial_ring(Q, {"x"});
  auto E = injective_hull(Rx);
  auto Rmodx = GradedModule::cyclic(Rx, {pp(Rx, "x")});
  SUBCASE("Tor_1(E, E) stages are the socle filtration of E") {
    StageSequence seq = hard_direction_stages_tor(1, E, E, 4);
    REQUIRE(seq.stages.size() == 4);
    for (int s = 1; s <= 4; ++s) CHECK(seq.stages[s - 1].dim() == s);
    for (const FLMap& t : seq.transitions) CHECK(t.is_injective());
    CHECK(!seq.detected_from.has_value());
    CHECK(seq.direct);
  }
  SUBCASE("Ext^1(E, R/x) stabilizes to k") {
    StageSequence seq = hard_direction_stages_ext(1, E, Rmodx, 4);
    REQUIRE(seq.detected_from.has_value());
    CHECK(seq.detected_limit->length() == 1);
    CHECK(!seq.direct);
  }
  SUBCASE("Ext^0(E, R/x): constant stages with vanishing transitions") {
    StageSequence seq = hard_direction_stages_ext(0, E, Rmodx, 4);
    for (const FiniteLengthModule& w : seq.stages) CHECK(w.dim() == 1);
    for (const FLMap& t : seq.transitions) CHECK(t.mat.is_zero());
    CHECK(!seq.detected_from.has_value());
  }
  SUBCASE("Tor_0 stages agree with the tensor computation") {
    auto R2 = make_quotient_ring(Q, {"x", "y"}, {"x*y", "y^2"});
    auto E2 = injective_hull(R2);
    StageSequence seq = hard_direction_stages_tor(0, E2, E2, 4);
    REQUIRE(seq.detected_from.has_value());
    CHECK(seq.detected_limit->length() == tensor_artinian_pair(E2, E2).dim());
  }
  SUBCASE("s_max below one is rejected") {
    CHECK_THROWS_AS(hard_direction_stages_tor(0, E, E, 0), MatlisError);
  }
}

TEST_CASE("stage monotonicity under injective transitions") {
  auto R = make_quotient_ring(FP, {"x", "y"}, {"y^2"});
  auto E = injective_hull(R);
  auto DK = artinian_dual(GradedModule::cyclic(R, {pp(R, "x^2"), pp(R, "y")}));
  for (int i = 0; i <= 2; ++i) {
    StageSequence seq = hard_direction_stages_tor(i, E, DK, 4);
    bool all_inj = true;
    for (const FLMap& t : seq.transitions) all_inj = all_inj && t.is_injective();
    if (all_inj)
      for (size_t s = 0; s + 1 < seq.stages.size(); ++s)
        CHECK(seq.stages[s].dim() <= seq.stages[s + 1].dim());
    if (seq.detected_from)
      for (size_t s = *seq.detected_from - 1; s < seq.stages.size(); ++s)
        CHECK(seq.stages[s].dim() == seq.detected_limit->length());
  }
}

TEST_CASE("bass/betti duality on random finite length modules") {
  SplitMix64 rng(31337);
  for (int it = 0; it < 6; ++it) {
    RingPtr R = it % 2 ? make_quotient_ring(FP, {"x", "y"}, {"x*y", "y^2"})
                       : make_polynomial_ring(FP, {"x", "y"});
    GradedModule v = random_finite_module(rng, R);
    GradedModule dv = dualize(make_finite(v)).mod.base;
    std::string w;
    CHECK(check_bass_betti_pair(v, dv, 3, &w) == Verdict::pass);
    if (!w.empty()) MESSAGE(w);
  }
}

TEST_CASE("non-circular duality identities on random pairs") {
  SplitMix64 rng(777);
  for (int it = 0; it < 5; ++it) {
    RingPtr R = it % 2 ? make_quotient_ring(FP, {"x", "y"}, {"x^2"})
                       : make_polynomial_ring(FP, {"x", "y"});
    GradedModule v = random_finite_module(rng, R);
    GradedModule vp = random_finite_module(rng, R);
    GradedModule dv = dualize(make_finite(v)).mod.base;
    GradedModule dvp = dualize(make_finite(vp)).mod.base;
    std::string w;
    CHECK(check_ext_duality_dims(v, vp, dv, dvp, 3, &w) == Verdict::pass);
    CHECK(check_theta_dims(v, dvp, vp, 3, &w) == Verdict::pass);
  }
}

TEST_CASE("length bounds on random instances") {
  SplitMix64 rng(555);
  for (int it = 0; it < 6; ++it) {
    RingPtr R = it % 3 == 0 ? make_polynomial_ring(FP, {"x", "y"})
                            : make_quotient_ring(FP, {"x", "y"}, {"x*y", "y^2"});
    GradedModule n = random_finite_module(rng, R);
    ArtinianModule a = artinian_dual(random_finite_module(rng, R));
    std::string w;
    CHECK(check_length_bound(a, n, 0, false, &w, nullptr) == Verdict::pass);
    ArtinianModule e = injective_hull(R);
    CHECK(check_length_bound(e, n, 0, false, &w, nullptr) == Verdict::pass);
    CHECK(check_tensor_bounds(a, e, &w) == Verdict::pass);
    CHECK(check_tensor_bounds(e, a, &w) == Verdict::pass);
  }
}
