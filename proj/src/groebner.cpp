#include "matlis/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace matlis {

namespace {

struct Engine {
  ModLayout L;
  std::vector<VecPoly> basis;

  // Full reduction: every term of the result is irreducible.
  VecPoly reduce_full(const VecPoly& f, int skip = -1) const {
    VecPoly rem;
    VecPoly work = f;
    while (!work.empty()) {
      const VTerm t = work.front();
      int j = find_divisor(t.pos, t.m, skip);
      if (j >= 0) {
        const VecPoly& g = basis[j];
        Monomial q = t.m.div(vp_lead(g).m);
        work = vp_sub(L, work, vp_times_monomial(g, t.c, q));
      } else {
        rem.push_back(t);
        work.erase(work.begin());
      }
    }
    return rem;
  }

  int find_divisor(int pos, const Monomial& m, int skip) const {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (static_cast<int>(j) == skip || basis[j].empty()) continue;
      const VTerm& lt = vp_lead(basis[j]);
      if (lt.pos == pos && lt.m.divides(m)) return static_cast<int>(j);
    }
    return -1;
  }

  void make_monic(VecPoly& f) const {
    if (!f.empty() && !vp_lead(f).c.is_one()) f = vp_scale(f, vp_lead(f).c.inv());
  }

  // (degree of the S-pair lcm term, i, j); used as a deterministic queue key.
  using PairKey = std::tuple<int, int, int>;

  void add_pairs(std::set<PairKey>& pairs, int k) const {
    const VTerm& lk = vp_lead(basis[k]);
    for (int i = 0; i < k; ++i) {
      if (basis[i].empty()) continue;
      const VTerm& li = vp_lead(basis[i]);
      if (li.pos != lk.pos) continue;
      Monomial l = Monomial::lcm(li.m, lk.m);
      pairs.insert({l.degree() + L.shifts[li.pos], i, k});
    }
  }

  void run(const std::vector<VecPoly>& gens) {
    std::set<PairKey> pairs;
    for (const VecPoly& g : gens) {
      if (!vp_is_zero(g) && !vp_degree(L, g).has_value())
        fail(Errc::not_homogeneous, "inhomogeneous generator in Groebner input");
      VecPoly r = reduce_full(g);
      if (vp_is_zero(r)) continue;
      make_monic(r);
      basis.push_back(std::move(r));
      add_pairs(pairs, static_cast<int>(basis.size()) - 1);
    }
    while (!pairs.empty()) {
      auto [deg, i, j] = *pairs.begin();
      pairs.erase(pairs.begin());
      const VTerm& li = vp_lead(basis[i]);
      const VTerm& lj = vp_lead(basis[j]);
      Monomial l = Monomial::lcm(li.m, lj.m);
      VecPoly s = vp_sub(L, vp_times_monomial(basis[i], Scalar::one(li.c.field()), l.div(li.m)),
                         vp_times_monomial(basis[j], Scalar::one(li.c.field()), l.div(lj.m)));
      VecPoly r = reduce_full(s);
      if (vp_is_zero(r)) continue;
      make_monic(r);
      basis.push_back(std::move(r));
      add_pairs(pairs, static_cast<int>(basis.size()) - 1);
    }
    autoreduce();
  }

  void autoreduce() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].empty()) continue;
        VecPoly r = reduce_full(basis[i], static_cast<int>(i));
        make_monic(r);
        if (r != basis[i]) {
          basis[i] = std::move(r);
          changed = true;
        }
      }
      basis.erase(std::remove_if(basis.begin(), basis.end(), [](const VecPoly& f) { return f.empty(); }),
                  basis.end());
    }
    std::sort(basis.begin(), basis.end(), [&](const VecPoly& a, const VecPoly& b) {
      return term_cmp(L, vp_lead(a).pos, vp_lead(a).m, vp_lead(b).pos, vp_lead(b).m) < 0;
    });
  }
};

}  // namespace

VecPoly GBasis::normal_form(const VecPoly& f) const {
  Engine e{layout, elems};
  return e.reduce_full(f);
}

bool GBasis::contains(const VecPoly& f) const { return vp_is_zero(normal_form(f)); }

bool GBasis::lead_divides(int pos, const Monomial& m) const {
  for (const VecPoly& g : elems) {
    const VTerm& lt = vp_lead(g);
    if (lt.pos == pos && lt.m.divides(m)) return true;
  }
  return false;
}

GBasis buchberger(const ModLayout& layout, const std::vector<VecPoly>& gens) {
  Engine e{layout, {}};
  e.run(gens);
  return GBasis{layout, std::move(e.basis)};
}

SyzygyTable::SyzygyTable(const FieldSpec& field, int nvars, const ModLayout& principal,
                         const std::vector<VecPoly>& gens)
    : nvars_(nvars), field_(field) {
  int r = principal.rank();
  int m = static_cast<int>(gens.size());
  ext_.shifts = principal.shifts;
  ext_.tag_start = r;
  for (const VecPoly& g : gens) {
    auto d = vp_degree(principal, g);
    ext_.shifts.push_back(d.value_or(0));
    if (!vp_is_zero(g) && !d.has_value()) fail(Errc::not_homogeneous, "inhomogeneous syzygy input");
  }
  std::vector<VecPoly> ext_gens;
  ext_gens.reserve(gens.size());
  for (int i = 0; i < m; ++i) {
    VecPoly g = gens[i];
    g.push_back({Scalar::one(field_), r + i, Monomial(nvars_)});
    ext_gens.push_back(vp_normalize(ext_, std::move(g)));
  }
  Engine e{ext_, {}};
  e.run(ext_gens);
  elems_ = std::move(e.basis);

  syz_layout_.shifts.assign(ext_.shifts.begin() + r, ext_.shifts.end());
  syz_layout_.tag_start = -1;
  for (const VecPoly& el : elems_) {
    if (el.empty()) continue;
    if (vp_lead(el).pos >= r) {
      // lead in the tag block: the principal part is zero, the tags are a syzygy
      VecPoly s;
      s.reserve(el.size());
      for (const VTerm& t : el) s.push_back({t.c, t.pos - r, t.m});
      syz_.push_back(std::move(s));
    }
  }
}

std::optional<std::vector<Polynomial>> SyzygyTable::lift(const VecPoly& f) const {
  int r = ext_.tag_start;
  VecPoly work = f;  // lives in the principal block of ext_
  while (!work.empty()) {
    const VTerm t = work.front();
    if (t.pos >= r) break;  // only tag terms remain
    int found = -1;
    for (size_t j = 0; j < elems_.size(); ++j) {
      const VTerm& lt = vp_lead(elems_[j]);
      if (lt.pos == t.pos && lt.m.divides(t.m)) {
        found = static_cast<int>(j);
        break;
      }
    }
    if (found < 0) return std::nullopt;  // an irreducible principal term: f is outside
    Monomial q = t.m.div(vp_lead(elems_[found]).m);
    work = vp_sub(ext_, work, vp_times_monomial(elems_[found], t.c, q));
  }
  // work = f - sum q_l (h_l, a_l) = (0, A) with f = -sum A_i g_i
  int m = ext_.rank() - r;
  std::vector<Polynomial> coeffs(m, Polynomial(field_, nvars_));
  for (const VTerm& t : work) {
    if (t.pos < r) fail(Errc::internal, "lift left a principal remainder");
    coeffs[t.pos - r].add_term(-t.c, t.m);
  }
  return coeffs;
}

}  // namespace matlis
