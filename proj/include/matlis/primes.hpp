#pragma once

#include <set>
#include <string>

#include "matlis/artinian.hpp"

namespace matlis {

// Monomial prime: an ideal generated by a subset of the variables; the empty
// subset is the zero ideal.
struct PrimeIdeal {
  std::vector<int> vars;  // sorted, distinct variable indices

  bool operator==(const PrimeIdeal& o) const { return vars == o.vars; }
  bool operator<(const PrimeIdeal& o) const { return vars < o.vars; }
  bool is_maximal(int nvars) const { return static_cast<int>(vars.size()) == nvars; }
  std::string to_string(const std::vector<std::string>& names) const;
  bool contains_poly(const Polynomial& f) const;
  bool contains_ideal(const Ideal& a) const;
};

using PrimeSet = std::set<PrimeIdeal>;

// Scope test: the defining ideal is monomial and every relation column is a
// monomial supported in a single position.
bool monomial_scope(const GradedModule& n);

// Associated primes of a cyclic monomial quotient S/(gens), computed
// combinatorially: primes of the form (I : f) with f a divisor of lcm(gens).
PrimeSet ass_cyclic_monomial(int nvars, std::vector<Monomial> gens);

PrimeSet ass_fg(const GradedModule& n);           // monomial scope only
PrimeSet att_artinian(const ArtinianModule& a);   // Att(A) = Ass(A^v)

enum class DW { depth, width };
struct DepthWidth {
  std::optional<int> value;  // nullopt means ">= bound"
  int bound = 0;

  std::string to_string() const {
    return value ? std::to_string(*value) : ">=" + std::to_string(bound);
  }
  bool operator==(const DepthWidth& o) const { return value == o.value && bound == o.bound; }
};

DepthWidth depth_width_fg(DW kind, const Ideal& a, const GradedModule& l, int bound);
DepthWidth depth_width_art(DW kind, const Ideal& a, const ArtinianModule& l, int bound);

int default_depth_bound(const RingPtr& ring);  // nvars + 2

struct SocleAnnSupp {
  FiniteLengthModule socle;
  Ideal annihilator;         // also the support certificate
};
SocleAnnSupp socle_ann_supp(const GradedModule& m);

// One evaluated clause of the vanishing theorems.
struct Clause {
  std::string id;
  std::string paper_tag;
  bool applicable = true;
  bool value = false;
  std::string detail;
};

struct VanishingReport {
  std::vector<Clause> clauses;
  // biconditional verdicts, false only on an implementation defect
  bool tensor_biconditional = true;   // A(x)L = 0 iff A = mA or L = mL
  bool hom_ann_biconditional = true;  // Hom(A,L) = 0 iff Ann(Gamma_m(L)) A = A
  bool hom_att_biconditional = true;  // Hom(A,L) = 0 iff Att(A) cap Supp = empty
  bool all_ok() const { return tensor_biconditional && hom_ann_biconditional && hom_att_biconditional; }
};

VanishingReport vanishing_predicates(const ArtinianModule& a, const GradedModule& l);
VanishingReport vanishing_predicates(const ArtinianModule& a, const ArtinianModule& l);

struct DepthFormulaRow {
  std::string id;
  DepthWidth lhs;
  DepthWidth rhs;
  bool agree = false;
};

struct DepthFormulaReport {
  std::vector<DepthFormulaRow> rows;
  bool all_agree() const {
    for (const auto& r : rows)
      if (!r.agree) return false;
    return true;
  }
};

// The six depth identities: each side computed by an independent route.
DepthFormulaReport depth_formulas(const ArtinianModule& a, const ArtinianModule& aprime,
                                  const GradedModule& n, const GradedModule& nprime, int bound);

}  // namespace matlis
