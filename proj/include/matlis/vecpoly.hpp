#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matlis/polynomial.hpp"

namespace matlis {

// Layout of a graded free module: one degree shift per position. Positions at
// or beyond tag_start form the elimination-tag block; any term in the
// principal block outranks any tag term.
struct ModLayout {
  std::vector<int> shifts;
  int tag_start = -1;  // -1 means no tag block

  int rank() const { return static_cast<int>(shifts.size()); }
  int principal_rank() const { return tag_start < 0 ? rank() : tag_start; }
  static ModLayout plain(std::vector<int> shifts) { return ModLayout{std::move(shifts), -1}; }
};

struct VTerm {
  Scalar c;
  int pos = 0;
  Monomial m;

  int degree(const ModLayout& L) const { return m.degree() + L.shifts[pos]; }
  bool operator==(const VTerm& o) const { return c == o.c && pos == o.pos && m == o.m; }
};

// Element of a graded free module: terms sorted strictly descending under the
// layout's order, no zeros, no duplicate (pos, monomial) pairs.
using VecPoly = std::vector<VTerm>;

// Three-way term comparison under the layout order; positive when a > b.
int term_cmp(const ModLayout& L, int pos_a, const Monomial& ma, int pos_b, const Monomial& mb);

bool vp_is_zero(const VecPoly& f);
const VTerm& vp_lead(const VecPoly& f);
VecPoly vp_add(const ModLayout& L, const VecPoly& a, const VecPoly& b);
VecPoly vp_sub(const ModLayout& L, const VecPoly& a, const VecPoly& b);
VecPoly vp_negate(const VecPoly& a);
VecPoly vp_scale(const VecPoly& a, const Scalar& c);
VecPoly vp_times_monomial(const VecPoly& a, const Scalar& c, const Monomial& m);
VecPoly vp_normalize(const ModLayout& L, VecPoly f);  // sort + merge arbitrary term list

// Homogeneous degree (all terms equal degree under L); nullopt if mixed; for
// the zero element returns nullopt as well.
std::optional<int> vp_degree(const ModLayout& L, const VecPoly& f);

VecPoly vp_from_poly(const Polynomial& p, int pos = 0);
Polynomial vp_component(const VecPoly& f, int pos, const FieldSpec& field, int nvars);
VecPoly vp_from_columns(const ModLayout& L, const std::vector<Polynomial>& entries);  // entries[j] at position j
VecPoly vp_basis(const FieldSpec& f, int nvars, int pos);  // e_pos

// Multiply each component by a ring element: p * f.
VecPoly vp_scale_poly(const ModLayout& L, const Polynomial& p, const VecPoly& f);

std::string vp_to_string(const VecPoly& f, const std::vector<std::string>& vars);

}  // namespace matlis
