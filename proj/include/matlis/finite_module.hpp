#pragma once

#include "matlis/linalg.hpp"
#include "matlis/module.hpp"

namespace matlis {

// A graded module of finite k-dimension with an explicit monomial basis and
// multiplication-operator matrices. basis[b] is a standard module monomial of
// the base presentation; the b-th coordinate is its coefficient.
struct FiniteLengthModule {
  GradedModule base;
  std::vector<std::pair<int, Monomial>> basis;
  std::vector<int> degrees;  // degree of each basis element
  std::vector<Mat> ops;      // per variable
  int dual_shift = 0;        // true degree = stored degree + dual_shift

  long dim() const { return static_cast<long>(basis.size()); }
  const FieldSpec& field() const { return base.ring()->field(); }
  const RingPtr& ring() const { return base.ring(); }

  Vec coords(const VecPoly& v) const;        // normal form, then read off the basis
  VecPoly element(const Vec& coords) const;  // inverse of coords on the basis span
  Vec apply_monomial(const Monomial& u, Vec v) const;
  std::map<int, long> hilbert() const;
  long min_generators() const;  // dim of V / mV
  long socle_dim() const;       // dim of (0 : m)
  // least n >= 1 with m^n V = 0 (n = 1 for the zero module)
  int nilpotency() const;
};

FiniteLengthModule make_finite(const GradedModule& m);

// Map of finite-length modules in basis coordinates: tgt = mat * src.
struct FLMap {
  FiniteLengthModule src;
  FiniteLengthModule tgt;
  Mat mat;

  bool intertwines() const;
  bool is_injective() const;
  bool is_isomorphism() const;
};

FLMap compose(const FLMap& g, const FLMap& f);  // g after f

// Presentation of an abstract graded vector space with commuting nilpotent
// operators; to_mod/from_mod convert between input coordinates and the
// resulting module's basis coordinates.
struct PresentedOps {
  FiniteLengthModule mod;
  Mat to_mod;
  Mat from_mod;
};
PresentedOps present_operators(const RingPtr& ring, const std::vector<int>& degrees,
                               const std::vector<Mat>& ops);

// Matlis dual of a finite-length module: transposed operators on the dual
// basis, grading negated. When normalize is true the generator degrees are
// shifted to start at 0 and the shift is recorded in the result.
struct DualResult {
  FiniteLengthModule mod;
  Mat from_functional;  // functional coordinates (primal basis order) -> mod coords
  Mat to_functional;
  int shift = 0;  // true degree = stored degree + shift
};
DualResult dualize(const FiniteLengthModule& v, bool normalize = false);

// D(f) : D(W) -> D(V) for f : V -> W.
FLMap dualize_map(const FLMap& f, const DualResult& dual_src, const DualResult& dual_tgt);

// Hom_R(V, W) as a finite-length module (the intertwiner space of the
// operator tuples, graded by degree offset).
FiniteLengthModule hom_finite(const FiniteLengthModule& v, const FiniteLengthModule& w);

FiniteLengthModule tensor_finite(const FiniteLengthModule& v, const FiniteLengthModule& w);

// Canonical projection between finite quotients of one free module
// (relations of big contained in relations of small).
FLMap projection_flm(const FiniteLengthModule& big, const FiniteLengthModule& small);

// Conversions between presentation-level and coordinate-level maps.
ModMap flm_to_modmap(const FLMap& f);
FLMap modmap_to_flm(const ModMap& f, const FiniteLengthModule& src, const FiniteLengthModule& tgt);

// Existence of an invertible intertwiner, tried over a few random
// combinations; a sound certificate when true, not a decision procedure.
bool conjugate_certificate(const FiniteLengthModule& a, const FiniteLengthModule& b, uint64_t seed);

}  // namespace matlis
