#pragma once

// Test-only oracles: brute-force degreewise linear algebra, kept independent
// of the Groebner/syzygy paths they cross-check.

#include <map>

#include "matlis/linalg.hpp"
#include "matlis/module.hpp"

namespace matlis::oracles {

// Basis of the degree-d piece of a free R-module (standard monomials per
// position, reduced mod the defining ideal only).
struct PieceBasis {
  std::vector<std::pair<int, Monomial>> elems;
  std::map<std::pair<int, std::vector<int>>, int> index;
};

inline PieceBasis ring_piece(const RingPtr& ring, const ModLayout& L, int d) {
  PieceBasis b;
  const GBasis& gb = ring->defining_ideal().groebner();
  for (int j = 0; j < L.rank(); ++j) {
    int md = d - L.shifts[j];
    if (md < 0) continue;
    for (const Monomial& u : monomials_of_degree(ring->nvars(), md)) {
      if (gb.lead_divides(0, u)) continue;
      b.index[{j, u.e}] = static_cast<int>(b.elems.size());
      b.elems.push_back({j, u});
    }
  }
  return b;
}

// Coordinates of v in the piece basis after reducing each component mod I.
inline Vec piece_coords(const RingPtr& ring, const PieceBasis& b, const VecPoly& v) {
  Vec out(b.elems.size(), Scalar::zero(ring->field()));
  const GBasis& gb = ring->defining_ideal().groebner();
  for (const VTerm& t : v) {
    VecPoly nf = gb.normal_form(VecPoly{{t.c, 0, t.m}});
    for (const VTerm& r : nf) {
      auto it = b.index.find({t.pos, r.m.e});
      if (it == b.index.end()) fail(Errc::internal, "oracle: term outside piece");
      out[it->second] = out[it->second] + r.c;
    }
  }
  return out;
}

// Standard module monomials of M = F/K at total degree d (M may be infinite).
struct ModulePiece {
  std::vector<std::pair<int, Monomial>> elems;
  std::map<std::pair<int, std::vector<int>>, int> index;
};

inline ModulePiece module_piece(const GradedModule& m, int d) {
  ModulePiece p;
  const GBasis& gb = m.rel_gb();
  for (int j = 0; j < m.rank0(); ++j) {
    int md = d - m.gen_degrees()[j];
    if (md < 0) continue;
    for (const Monomial& u : monomials_of_degree(m.ring()->nvars(), md)) {
      if (gb.lead_divides(j, u)) continue;
      p.index[{j, u.e}] = static_cast<int>(p.elems.size());
      p.elems.push_back({j, u});
    }
  }
  return p;
}

inline Vec module_coords(const GradedModule& m, const ModulePiece& p, const VecPoly& v) {
  Vec out(p.elems.size(), Scalar::zero(m.ring()->field()));
  for (const VTerm& t : m.nf(v)) {
    auto it = p.index.find({t.pos, t.m.e});
    if (it == p.index.end()) fail(Errc::internal, "oracle: NF escaped the standard basis");
    out[it->second] = out[it->second] + t.c;
  }
  return out;
}

// Degreewise syzygy space of columns over R by dense kernel computation:
// all homogeneous (a_1..a_p) of the given total degree with sum a_i cols[i] = 0
// in the module m. Returned as coordinate vectors over the free piece basis
// of R^p with shifts = column degrees.
inline std::vector<Vec> syzygy_space_at(const GradedModule& m, const std::vector<VecPoly>& cols,
                                        int degree) {
  const RingPtr& ring = m.ring();
  std::vector<int> col_degs;
  for (const VecPoly& c : cols) col_degs.push_back(vp_degree(m.layout(), c).value());
  ModLayout Lsyz = ModLayout::plain(col_degs);
  PieceBasis domain = ring_piece(ring, Lsyz, degree);
  ModulePiece target = module_piece(m, degree);
  if (domain.elems.empty()) return {};
  Mat mat(ring->field(), static_cast<int>(target.elems.size()), static_cast<int>(domain.elems.size()));
  for (size_t c = 0; c < domain.elems.size(); ++c) {
    auto [i, u] = domain.elems[c];
    Vec img = module_coords(m, target, vp_times_monomial(cols[i], Scalar::one(ring->field()), u));
    for (size_t r = 0; r < img.size(); ++r) mat.at(static_cast<int>(r), static_cast<int>(c)) = img[r];
  }
  return kernel_basis(mat);
}

// Degree-d span of R-multiples of the given elements of a free R-module,
// in the same piece coordinates as syzygy_space_at.
inline std::vector<Vec> span_at(const RingPtr& ring, const std::vector<int>& shifts,
                                const std::vector<VecPoly>& gens, int degree) {
  ModLayout L = ModLayout::plain(shifts);
  PieceBasis piece = ring_piece(ring, L, degree);
  std::vector<Vec> out;
  if (piece.elems.empty()) return out;
  Span span(ring->field(), static_cast<int>(piece.elems.size()));
  for (const VecPoly& g : gens) {
    auto gd = vp_degree(L, g);
    if (!gd) continue;
    int rem = degree - *gd;
    if (rem < 0) continue;
    for (const Monomial& u : monomials_of_degree(ring->nvars(), rem)) {
      Vec v = piece_coords(ring, piece, vp_times_monomial(g, Scalar::one(ring->field()), u));
      if (span.insert(v)) out.push_back(std::move(v));
    }
  }
  return out;
}

inline bool same_space(const FieldSpec& f, int dim, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  Span sa(f, std::max(dim, 1)), sb(f, std::max(dim, 1));
  for (const Vec& v : a) sa.insert(v);
  for (const Vec& v : b) sb.insert(v);
  if (sa.dim() != sb.dim()) return false;
  for (const Vec& v : a)
    if (!sb.contains(v)) return false;
  for (const Vec& v : b)
    if (!sa.contains(v)) return false;
  return true;
}

// Brute-force inverse in F_p by exhaustive search.
inline long brute_inverse(long a, long p) {
  for (long b = 1; b < p; ++b)
    if ((a * b) % p == 1) return b;
  return -1;
}

// Degreewise dimension of a tensor product of cyclic modules computed by
// plain multiplication: dim_k (R/I1 (x) R/I2)_d = dim (R / (I1 + I2))_d.
inline long cyclic_tensor_dim(const RingPtr& ring, const std::vector<Polynomial>& i1,
                              const std::vector<Polynomial>& i2, int d) {
  std::vector<Polynomial> all = i1;
  all.insert(all.end(), i2.begin(), i2.end());
  GradedModule q = GradedModule::cyclic(ring, all);
  return q.hilbert(d);
}

}  // namespace matlis::oracles
