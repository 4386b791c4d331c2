#pragma once

#include <optional>

#include "matlis/finite_module.hpp"

namespace matlis {

// Artinian m-torsion module represented as the formal Matlis dual D(witness)
// of a finitely generated module. Never materialized; every operation routes
// through the witness. shift records a grading normalization of the witness.
struct ArtinianModule {
  GradedModule witness;
  int shift = 0;

  const RingPtr& ring() const { return witness.ring(); }
  bool is_zero() const { return witness.is_zero_module(); }
};

ArtinianModule artinian_dual(const GradedModule& n);
inline const GradedModule& dual_witness(const ArtinianModule& a) { return a.witness; }
// E = E(k), the injective hull of the residue field: D(R).
ArtinianModule injective_hull(const RingPtr& ring);

// (0 :_A m^s) = D(N/m^s N), kept in the natural (non-positive) grading so the
// stages of one module share an ambient grading.
FiniteLengthModule socle_stage(const ArtinianModule& a, int s);

// Least t with m^t A = m^{t+1} A, found on the witness side as the least t
// with (0 :_N m^t) = (0 :_N m^{t+1}).
int stabilization_exponent(const ArtinianModule& a);
// Least t with m^t V = m^{t+1} V for finite-length V (0 when V = 0).
int stabilization_exponent_fl(const FiniteLengthModule& v);

// A / m^s A = D((0 :_N m^s)).
FiniteLengthModule top_quotient(const ArtinianModule& a, int s);

// Hom_R(A, N') via Hom(A/m^s A, (0 :_N' m^s)) with s = min(n, t).
struct HomArtinianResult {
  FiniteLengthModule hom;
  int s = 0;  // the exponent used
  int n = 0;  // m^n Gamma_m(N') = 0
  int t = 0;  // stabilization exponent of A
};
HomArtinianResult hom_artinian_to_fg(const ArtinianModule& a, const GradedModule& nprime);

// A (x) L for m-torsion partners.
FiniteLengthModule tensor_artinian_pair(const ArtinianModule& a, const ArtinianModule& b);
// Partner must have finite length; a non-torsion noetherian partner is an error.
FiniteLengthModule tensor_artinian_fl(const ArtinianModule& a, const GradedModule& l);

// Ext^i(A, A') = Ext^i_{R^}(witness(A'), witness(A)), a finitely generated module.
GradedModule ext_artinian_pair(int i, const ArtinianModule& a, const ArtinianModule& b);

// Ext^i(N, A') = D(Tor_i(N, N')) and Tor_i(N, A') = D(Ext^i(N, N')).
ArtinianModule ext_fg_to_artinian(int i, const GradedModule& n, const ArtinianModule& aprime);
ArtinianModule tor_fg_with_artinian(int i, const GradedModule& n, const ArtinianModule& aprime);

// Wrap a finitely generated module as a formal dual, normalizing generator
// degrees to be non-negative and recording the shift.
ArtinianModule wrap_artinian(const GradedModule& witness);

enum class StageOp { ext_artinian_to_fg, tor_artinian_pair };

// Finite truncation of a limit computation. For tor the system is direct
// (W_s -> W_{s+1}); for ext it is inverse (W_{s+1} -> W_s). detected_from is
// set when every transition from that stage on is an isomorphism, in which
// case detected_limit is the stable stage.
struct StageSequence {
  StageOp op = StageOp::tor_artinian_pair;
  int index = 0;  // homological degree i
  bool direct = true;
  std::vector<FiniteLengthModule> stages;  // s = 1..s_max
  std::vector<FLMap> transitions;
  std::optional<int> detected_from;  // 1-based stage index
  std::optional<GradedModule> detected_limit;
};

StageSequence hard_direction_stages_ext(int i, const ArtinianModule& a, const GradedModule& nprime,
                                        int s_max);
StageSequence hard_direction_stages_tor(int i, const ArtinianModule& a, const ArtinianModule& aprime,
                                        int s_max);

}  // namespace matlis
