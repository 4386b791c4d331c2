#include "matlis/vecpoly.hpp"

#include <algorithm>

namespace matlis {

int term_cmp(const ModLayout& L, int pos_a, const Monomial& ma, int pos_b, const Monomial& mb) {
  int block_a = (L.tag_start >= 0 && pos_a >= L.tag_start) ? 1 : 0;
  int block_b = (L.tag_start >= 0 && pos_b >= L.tag_start) ? 1 : 0;
  if (block_a != block_b) return block_a < block_b ? 1 : -1;  // principal block wins
  int da = ma.degree() + L.shifts[pos_a];
  int db = mb.degree() + L.shifts[pos_b];
  if (da != db) return da < db ? -1 : 1;
  int c = degrevlex_cmp(ma, mb);
  if (c != 0) return c;
  if (pos_a != pos_b) return pos_a < pos_b ? 1 : -1;  // lower position wins
  return 0;
}

bool vp_is_zero(const VecPoly& f) { return f.empty(); }

const VTerm& vp_lead(const VecPoly& f) {
  if (f.empty()) fail(Errc::internal, "lead of zero vector");
  return f.front();
}

VecPoly vp_add(const ModLayout& L, const VecPoly& a, const VecPoly& b) {
  VecPoly r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size()) {
      r.push_back(a[i++]);
    } else if (i >= a.size()) {
      r.push_back(b[j++]);
    } else {
      int cmp = term_cmp(L, a[i].pos, a[i].m, b[j].pos, b[j].m);
      if (cmp > 0) {
        r.push_back(a[i++]);
      } else if (cmp < 0) {
        r.push_back(b[j++]);
      } else {
        Scalar c = a[i].c + b[j].c;
        if (!c.is_zero()) r.push_back({c, a[i].pos, a[i].m});
        ++i;
        ++j;
      }
    }
  }
  return r;
}

VecPoly vp_sub(const ModLayout& L, const VecPoly& a, const VecPoly& b) { return vp_add(L, a, vp_negate(b)); }

VecPoly vp_negate(const VecPoly& a) {
  VecPoly r(a);
  for (VTerm& t : r) t.c = -t.c;
  return r;
}

VecPoly vp_scale(const VecPoly& a, const Scalar& c) {
  if (c.is_zero()) return {};
  VecPoly r(a);
  for (VTerm& t : r) t.c = t.c * c;
  return r;
}

VecPoly vp_times_monomial(const VecPoly& a, const Scalar& c, const Monomial& m) {
  if (c.is_zero()) return {};
  VecPoly r;
  r.reserve(a.size());
  for (const VTerm& t : a) r.push_back({t.c * c, t.pos, t.m * m});
  return r;  // monomial multiplication preserves the order
}

VecPoly vp_normalize(const ModLayout& L, VecPoly f) {
  std::sort(f.begin(), f.end(), [&](const VTerm& a, const VTerm& b) {
    return term_cmp(L, a.pos, a.m, b.pos, b.m) > 0;
  });
  VecPoly r;
  for (VTerm& t : f) {
    if (t.c.is_zero()) continue;
    if (!r.empty() && r.back().pos == t.pos && r.back().m == t.m) {
      r.back().c = r.back().c + t.c;
      if (r.back().c.is_zero()) r.pop_back();
    } else {
      r.push_back(std::move(t));
    }
  }
  return r;
}

std::optional<int> vp_degree(const ModLayout& L, const VecPoly& f) {
  if (f.empty()) return std::nullopt;
  int d = f.front().degree(L);
  for (const VTerm& t : f)
    if (t.degree(L) != d) return std::nullopt;
  return d;
}

VecPoly vp_from_poly(const Polynomial& p, int pos) {
  VecPoly r;
  r.reserve(p.terms().size());
  for (const Term& t : p.terms()) r.push_back({t.c, pos, t.m});
  return r;
}

Polynomial vp_component(const VecPoly& f, int pos, const FieldSpec& field, int nvars) {
  Polynomial p(field, nvars);
  for (const VTerm& t : f)
    if (t.pos == pos) p.add_term(t.c, t.m);
  return p;
}

VecPoly vp_from_columns(const ModLayout& L, const std::vector<Polynomial>& entries) {
  VecPoly r;
  for (size_t j = 0; j < entries.size(); ++j)
    for (const Term& t : entries[j].terms()) r.push_back({t.c, static_cast<int>(j), t.m});
  return vp_normalize(L, std::move(r));
}

VecPoly vp_basis(const FieldSpec& f, int nvars, int pos) {
  return {{Scalar::one(f), pos, Monomial(nvars)}};
}

VecPoly vp_scale_poly(const ModLayout& L, const Polynomial& p, const VecPoly& f) {
  VecPoly r;
  for (const Term& t : p.terms()) r = vp_add(L, r, vp_times_monomial(f, t.c, t.m));
  return r;
}

std::string vp_to_string(const VecPoly& f, const std::vector<std::string>& vars) {
  if (f.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += " + ";
    s += f[i].c.to_string() + "*" + monomial_to_string(f[i].m, vars) + "*e" + std::to_string(f[i].pos);
  }
  return s;
}

}  // namespace matlis
