#include "matlis/artinian.hpp"

#include <algorithm>

namespace matlis {

ArtinianModule artinian_dual(const GradedModule& n) { return wrap_artinian(n); }

ArtinianModule injective_hull(const RingPtr& ring) {
  return ArtinianModule{GradedModule::free_module(ring, 1), 0};
}

ArtinianModule wrap_artinian(const GradedModule& witness) {
  int shift = 0;
  for (int d : witness.gen_degrees()) shift = std::min(shift, d);
  if (shift < 0) return ArtinianModule{twist(witness, shift), shift};
  return ArtinianModule{witness, 0};
}

FiniteLengthModule socle_stage(const ArtinianModule& a, int s) {
  if (s < 0) fail(Errc::usage_error, "negative socle stage");
  const RingPtr& R = a.ring();
  GradedModule q = submodule_op(a.witness, R->maximal_ideal(), s, SubOp::quotient_by_scale);
  return dualize(make_finite(q)).mod;
}

int stabilization_exponent(const ArtinianModule& a) {
  const RingPtr& R = a.ring();
  Ideal mx = R->maximal_ideal();
  long prev = 0;  // (0 : m^0) = 0
  for (int t = 0; t <= 200; ++t) {
    long next = submodule_op(a.witness, mx, t + 1, SubOp::colon).length();
    if (next == prev) return t;
    prev = next;
  }
  fail(Errc::no_stabilization, "stabilization exponent did not stabilize within 200 steps");
}

int stabilization_exponent_fl(const FiniteLengthModule& v) {
  if (v.dim() == 0) return 0;
  return v.nilpotency();
}

FiniteLengthModule top_quotient(const ArtinianModule& a, int s) {
  const RingPtr& R = a.ring();
  GradedModule colon = submodule_op(a.witness, R->maximal_ideal(), s, SubOp::colon);
  return dualize(make_finite(colon), /*normalize=*/true).mod;
}

HomArtinianResult hom_artinian_to_fg(const ArtinianModule& a, const GradedModule& nprime) {
  check_same_ring(a.ring(), nprime.ring());
  auto [gamma, j] = gamma_m(nprime);
  (void)j;
  int n = gamma.length() == 0 ? 1 : make_finite(gamma).nilpotency();
  int t = stabilization_exponent(a);
  int s = std::min(n, t);
  FiniteLengthModule top = top_quotient(a, s);
  FiniteLengthModule soc = make_finite(submodule_op(nprime, a.ring()->maximal_ideal(), s, SubOp::colon));
  return HomArtinianResult{hom_finite(top, soc), s, n, t};
}

FiniteLengthModule tensor_artinian_pair(const ArtinianModule& a, const ArtinianModule& b) {
  check_same_ring(a.ring(), b.ring());
  int t = std::max(stabilization_exponent(a), stabilization_exponent(b));
  return tensor_finite(top_quotient(a, t), top_quotient(b, t));
}

FiniteLengthModule tensor_artinian_fl(const ArtinianModule& a, const GradedModule& l) {
  check_same_ring(a.ring(), l.ring());
  if (!l.finite_length())
    fail(Errc::tensor_non_torsion,
         "tensor with non-torsion noetherian module: use tor_fg_with_artinian at i = 0 via duality");
  FiniteLengthModule lf = make_finite(l);
  int t = std::max(stabilization_exponent(a), stabilization_exponent_fl(lf));
  FiniteLengthModule lq = make_finite(submodule_op(l, a.ring()->maximal_ideal(), t, SubOp::quotient_by_scale));
  return tensor_finite(top_quotient(a, t), lq);
}

GradedModule ext_artinian_pair(int i, const ArtinianModule& a, const ArtinianModule& b) {
  check_same_ring(a.ring(), b.ring());
  return ext_fg(i, b.witness, a.witness);
}

ArtinianModule ext_fg_to_artinian(int i, const GradedModule& n, const ArtinianModule& aprime) {
  check_same_ring(n.ring(), aprime.ring());
  return wrap_artinian(tor_fg(i, n, aprime.witness));
}

ArtinianModule tor_fg_with_artinian(int i, const GradedModule& n, const ArtinianModule& aprime) {
  check_same_ring(n.ring(), aprime.ring());
  return wrap_artinian(ext_fg(i, n, aprime.witness));
}

namespace {

struct StageFamily {
  std::vector<FiniteLengthModule> stages;  // V_1..V_smax
  std::vector<FLMap> incls;                // V_s -> V_{s+1}
};

// V_s = (0 :_A m^s) = D(N/m^s N) with the inclusions induced by the
// projections N/m^{s+1}N -> N/m^s N.
StageFamily socle_family(const ArtinianModule& a, int s_max) {
  const RingPtr& R = a.ring();
  Ideal mx = R->maximal_ideal();
  std::vector<FiniteLengthModule> quotients;
  std::vector<DualResult> duals;
  for (int s = 1; s <= s_max; ++s) {
    quotients.push_back(make_finite(submodule_op(a.witness, mx, s, SubOp::quotient_by_scale)));
    duals.push_back(dualize(quotients.back()));
  }
  StageFamily fam;
  for (auto& d : duals) fam.stages.push_back(d.mod);
  for (int s = 0; s + 1 < s_max; ++s) {
    FLMap pi = projection_flm(quotients[s + 1], quotients[s]);
    fam.incls.push_back(dualize_map(pi, duals[s + 1], duals[s]));
  }
  return fam;
}

struct ExtStage {
  std::vector<FiniteLengthModule> mods;  // P_s = Ext^i(V_s, target)
  std::vector<FLMap> maps;               // P_{s+1} -> P_s
};

ExtStage ext_functor_stages(int i, const StageFamily& fam, const GradedModule& target) {
  const RingPtr& R = target.ring();
  ExtStage out;
  std::vector<std::shared_ptr<Homology>> homs;
  for (const FiniteLengthModule& v : fam.stages) {
    homs.push_back(ext_homology(i, v.base, target));
    out.mods.push_back(make_finite(homs.back()->module()));
  }
  for (size_t s = 0; s + 1 < fam.stages.size(); ++s) {
    const GradedModule& vs = fam.stages[s].base;
    const GradedModule& vs1 = fam.stages[s + 1].base;
    ModMap f = flm_to_modmap(fam.incls[s]);
    Resolution rs = min_resolution(vs, i + 1);
    Resolution rs1 = min_resolution(vs1, i + 1);
    auto phi = lift_chain_map(f, rs, rs1, i);
    // Hom(phi_i, target) : C^i(V_{s+1}) -> C^i(V_s)
    ModMap tr = hom_transpose_map(R, rs1.degrees_of(i), rs.degrees_of(i), phi[i], target);
    std::vector<VecPoly> cols;
    for (const VecPoly& w : homs[s + 1]->witnesses()) {
      VecPoly v = apply_columns(tr.tgt.layout(), tr.cols, w);
      auto c = homs[s]->express(v);
      if (!c) fail(Errc::internal, "induced map image is not a cycle");
      cols.push_back(std::move(*c));
    }
    ModMap tau{homs[s + 1]->module(), homs[s]->module(), std::move(cols), 0};
    out.maps.push_back(modmap_to_flm(tau, out.mods[s + 1], out.mods[s]));
  }
  return out;
}

void detect_limit(StageSequence& seq) {
  int s_max = static_cast<int>(seq.stages.size());
  if (s_max < 2) return;
  // smallest stage from which every transition is an isomorphism
  int from = s_max;  // 1-based; s_max means "only the last stage", not certifiable
  for (int s = s_max - 1; s >= 1; --s) {
    if (seq.transitions[s - 1].is_isomorphism())
      from = s;
    else
      break;
  }
  if (from < s_max) {
    seq.detected_from = from;
    seq.detected_limit = trim(seq.stages[from - 1].base).mod;
  }
}

}  // namespace

StageSequence hard_direction_stages_ext(int i, const ArtinianModule& a, const GradedModule& nprime,
                                        int s_max) {
  if (s_max < 1) fail(Errc::usage_error, "s_max must be at least 1");
  check_same_ring(a.ring(), nprime.ring());
  StageFamily fam = socle_family(a, s_max);
  ExtStage st = ext_functor_stages(i, fam, nprime);
  StageSequence seq;
  seq.op = StageOp::ext_artinian_to_fg;
  seq.index = i;
  seq.direct = false;
  seq.stages = std::move(st.mods);
  seq.transitions = std::move(st.maps);
  detect_limit(seq);
  return seq;
}

StageSequence hard_direction_stages_tor(int i, const ArtinianModule& a, const ArtinianModule& aprime,
                                        int s_max) {
  if (s_max < 1) fail(Errc::usage_error, "s_max must be at least 1");
  check_same_ring(a.ring(), aprime.ring());
  StageFamily fam = socle_family(aprime, s_max);
  ExtStage st = ext_functor_stages(i, fam, a.witness);
  StageSequence seq;
  seq.op = StageOp::tor_artinian_pair;
  seq.index = i;
  seq.direct = true;
  std::vector<DualResult> duals;
  for (const FiniteLengthModule& p : st.mods) duals.push_back(dualize(p));
  for (const DualResult& d : duals) seq.stages.push_back(d.mod);
  for (size_t s = 0; s + 1 < st.mods.size(); ++s)
    seq.transitions.push_back(dualize_map(st.maps[s], duals[s + 1], duals[s]));
  detect_limit(seq);
  return seq;
}

}  // namespace matlis
