#pragma once

#include <optional>
#include <vector>

#include "matlis/vecpoly.hpp"

namespace matlis {

// Reduced Groebner basis of a submodule of a graded free module over S.
// Elements are monic, fully auto-reduced, sorted ascending by lead term.
struct GBasis {
  ModLayout layout;
  std::vector<VecPoly> elems;

  // Canonical normal form: no term of the result is divisible by any lead.
  VecPoly normal_form(const VecPoly& f) const;
  bool contains(const VecPoly& f) const;
  // True when (pos, m) is divisible by some lead term.
  bool lead_divides(int pos, const Monomial& m) const;
};

// Buchberger's algorithm. Inputs must be homogeneous under the layout.
GBasis buchberger(const ModLayout& layout, const std::vector<VecPoly>& gens);

// Syzygy computation via the elimination-tag construction: Groebner basis of
// {(g_i, e_i)} in F (+) S^m where principal terms dominate tags. Elements keep
// the invariant  principal = sum_i tag_i * g_i.
class SyzygyTable {
 public:
  SyzygyTable(const FieldSpec& field, int nvars, const ModLayout& principal, const std::vector<VecPoly>& gens);

  // Generators (a reduced GB) of Syz(g_1..g_m) in the free module with
  // shifts = column degrees.
  const std::vector<VecPoly>& syzygies() const { return syz_; }
  const ModLayout& syzygy_layout() const { return syz_layout_; }

  // Coefficients c with f = sum c_i g_i, if f lies in the submodule.
  std::optional<std::vector<Polynomial>> lift(const VecPoly& f) const;

 private:
  ModLayout ext_;  // principal block + tag block
  int nvars_ = 0;
  FieldSpec field_;
  std::vector<VecPoly> elems_;
  std::vector<VecPoly> syz_;
  ModLayout syz_layout_;
};

}  // namespace matlis
