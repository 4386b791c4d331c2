#include "matlis/module.hpp"

#include <algorithm>
#include <map>

#include "matlis/linalg.hpp"

namespace matlis {

struct GradedModule::Cache {
  std::once_flag gb_once;
  std::shared_ptr<const GBasis> gb;
  std::once_flag fin_once;
  std::shared_ptr<const FiniteData> fin;
  std::mutex mu;
  std::map<int, long> hilb;
  std::shared_ptr<Resolution> res;
  bool trimmed_set = false;
  GradedModule trimmed;
  std::vector<VecPoly> trim_images;
  std::vector<int> trim_kept;
};

GradedModule::GradedModule(RingPtr ring, std::vector<int> gen_degrees, std::vector<VecPoly> relations)
    : ring_(std::move(ring)), degs_(std::move(gen_degrees)), rels_(std::move(relations)),
      cache_(std::make_shared<Cache>()) {
  ModLayout L = layout();
  for (const VecPoly& r : rels_) {
    if (vp_is_zero(r)) continue;
    if (!vp_degree(L, r).has_value()) fail(Errc::not_homogeneous, "inhomogeneous relation column");
    for (const VTerm& t : r) {
      if (t.pos < 0 || t.pos >= rank0()) fail(Errc::internal, "relation position out of range");
      if (t.m.nvars() != ring_->nvars()) fail(Errc::ring_mismatch, "relation entry in wrong ring");
    }
  }
  rels_.erase(std::remove_if(rels_.begin(), rels_.end(), vp_is_zero), rels_.end());
}

GradedModule GradedModule::free_module(const RingPtr& ring, int rank, std::vector<int> degrees) {
  if (degrees.empty()) degrees.assign(rank, 0);
  return GradedModule(ring, std::move(degrees), {});
}

GradedModule GradedModule::cyclic(const RingPtr& ring, const std::vector<Polynomial>& anns) {
  std::vector<VecPoly> rels;
  for (const Polynomial& a : anns)
    if (!a.is_zero()) rels.push_back(vp_from_poly(a));
  return GradedModule(ring, {0}, std::move(rels));
}

GradedModule GradedModule::residue_field(const RingPtr& ring) {
  return cyclic(ring, ring->maximal_ideal_gens());
}

GradedModule GradedModule::zero(const RingPtr& ring) { return GradedModule(ring, {}, {}); }

std::vector<VecPoly> ideal_columns(const RingPtr& ring, const ModLayout& F) {
  std::vector<VecPoly> cols;
  for (const Polynomial& f : ring->defining_ideal().reduced_basis())
    for (int j = 0; j < F.rank(); ++j) cols.push_back(vp_from_poly(f, j));
  return cols;
}

const GBasis& GradedModule::rel_gb() const {
  std::call_once(cache_->gb_once, [this] {
    std::vector<VecPoly> gens = rels_;
    std::vector<VecPoly> ic = ideal_columns(ring_, layout());
    gens.insert(gens.end(), ic.begin(), ic.end());
    cache_->gb = std::make_shared<const GBasis>(buchberger(layout(), gens));
  });
  return *cache_->gb;
}

bool GradedModule::is_zero_module() const {
  for (int j = 0; j < rank0(); ++j) {
    bool dead = false;
    for (const VecPoly& g : rel_gb().elems)
      if (vp_lead(g).pos == j && vp_lead(g).m.is_one()) {
        dead = true;
        break;
      }
    if (!dead) return false;
  }
  return true;
}

long GradedModule::hilbert(int d) const {
  {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto it = cache_->hilb.find(d);
    if (it != cache_->hilb.end()) return it->second;
  }
  long count = 0;
  const GBasis& gb = rel_gb();
  for (int j = 0; j < rank0(); ++j) {
    int md = d - degs_[j];
    if (md < 0) continue;
    for (const Monomial& u : monomials_of_degree(ring_->nvars(), md))
      if (!gb.lead_divides(j, u)) ++count;
  }
  std::lock_guard<std::mutex> lk(cache_->mu);
  cache_->hilb[d] = count;
  return count;
}

const GradedModule::FiniteData& GradedModule::finite_data() const {
  std::call_once(cache_->fin_once, [this] {
    auto data = std::make_shared<FiniteData>();
    const GBasis& gb = rel_gb();
    int n = ring_->nvars();
    data->finite = true;
    std::vector<std::vector<int>> bound(rank0(), std::vector<int>(n, -1));
    std::vector<bool> dead(rank0(), false);
    for (const VecPoly& g : gb.elems) {
      const VTerm& lt = vp_lead(g);
      if (lt.m.is_one()) {
        dead[lt.pos] = true;
        continue;
      }
      int var = -1;
      bool pure = true;
      for (int i = 0; i < n; ++i) {
        if (lt.m.e[i] == 0) continue;
        if (var >= 0) {
          pure = false;
          break;
        }
        var = i;
      }
      if (pure && var >= 0) {
        int& b = bound[lt.pos][var];
        if (b < 0 || lt.m.e[var] < b) b = lt.m.e[var];
      }
    }
    for (int j = 0; j < rank0() && data->finite; ++j) {
      if (dead[j]) continue;
      for (int i = 0; i < n; ++i)
        if (bound[j][i] < 0) {
          data->finite = false;
          break;
        }
    }
    if (data->finite) {
      int max_total = 0;
      for (int j = 0; j < rank0(); ++j) {
        if (dead[j]) continue;
        // enumerate the exponent box and keep standard monomials
        std::vector<int> exp(n, 0);
        while (true) {
          Monomial u(exp);
          if (!gb.lead_divides(j, u)) {
            int deg = u.degree() + degs_[j];
            data->basis.push_back({j, u});
            data->hilbert[deg] += 1;
            ++data->length;
            max_total = std::max(max_total, deg);
          }
          int i = 0;
          while (i < n) {
            if (++exp[i] < bound[j][i]) break;
            exp[i] = 0;
            ++i;
          }
          if (i == n) break;
        }
      }
      int min_shift = 0;
      for (int j = 0; j < rank0(); ++j) min_shift = std::min(min_shift, degs_[j]);
      if (rank0() == 0 || data->length == 0) {
        data->ann_power = 0;
      } else {
        data->ann_power = 1 + max_total - min_shift;
      }
      std::sort(data->basis.begin(), data->basis.end(), [&](const auto& a, const auto& b) {
        int da = a.second.degree() + degs_[a.first];
        int db = b.second.degree() + degs_[b.first];
        if (da != db) return da < db;
        if (a.first != b.first) return a.first < b.first;
        return degrevlex_cmp(a.second, b.second) > 0;
      });
    }
    cache_->fin = data;
  });
  return *cache_->fin;
}

long GradedModule::length() const {
  const FiniteData& d = finite_data();
  if (!d.finite) fail(Errc::not_finite_length, "module does not have finite length");
  return d.length;
}

bool ModMap::well_defined() const {
  check_same_ring(src.ring(), tgt.ring());
  ModLayout Lt = tgt.layout();
  for (const VecPoly& r : src.relations()) {
    VecPoly image;
    for (const VTerm& t : r)
      image = vp_add(Lt, image, vp_times_monomial(cols[t.pos], t.c, t.m));
    if (!tgt.element_is_zero(image)) return false;
  }
  return true;
}

ModMap ModMap::zero_map(const GradedModule& src, const GradedModule& tgt) {
  return ModMap{src, tgt, std::vector<VecPoly>(src.rank0()), 0};
}

ModMap ModMap::identity(const GradedModule& m) {
  std::vector<VecPoly> cols;
  for (int j = 0; j < m.rank0(); ++j) cols.push_back(vp_basis(m.ring()->field(), m.ring()->nvars(), j));
  return ModMap{m, m, std::move(cols), 0};
}

long Resolution::betti(int i) const {
  if (i == 0) return static_cast<long>(f0_degs.size());
  if (i - 1 < static_cast<int>(step_degs.size())) return static_cast<long>(step_degs[i - 1].size());
  fail(Errc::internal, "resolution not computed to requested step");
}

const std::vector<int>& Resolution::degrees_of(int i) const {
  if (i == 0) return f0_degs;
  return step_degs[i - 1];
}

namespace {

// Basis of the degree-d piece of a free module, with index lookup.
struct DegBasis {
  std::vector<std::pair<int, Monomial>> elems;
  std::map<std::pair<int, std::vector<int>>, int> index;

  int size() const { return static_cast<int>(elems.size()); }
};

DegBasis free_basis_at(const ModLayout& F, int nvars, int d) {
  DegBasis b;
  for (int j = 0; j < F.rank(); ++j) {
    int md = d - F.shifts[j];
    if (md < 0) continue;
    for (const Monomial& u : monomials_of_degree(nvars, md)) {
      b.index[{j, u.e}] = static_cast<int>(b.elems.size());
      b.elems.push_back({j, u});
    }
  }
  return b;
}

Vec coords_of(const DegBasis& b, const VecPoly& v, const FieldSpec& field) {
  Vec out(b.size(), Scalar::zero(field));
  for (const VTerm& t : v) {
    auto it = b.index.find({t.pos, t.m.e});
    if (it == b.index.end()) fail(Errc::internal, "term outside degree piece");
    out[it->second] = out[it->second] + t.c;
  }
  return out;
}

}  // namespace

std::vector<VecPoly> minimal_generators(const RingPtr& ring, const ModLayout& F,
                                        const std::vector<VecPoly>& cols) {
  std::vector<const VecPoly*> live;
  for (const VecPoly& c : cols)
    if (!vp_is_zero(c)) live.push_back(&c);
  if (live.empty()) return {};
  int n = ring->nvars();
  const FieldSpec& field = ring->field();
  std::vector<int> degs;
  int dmin = 0, dmax = 0;
  bool first = true;
  for (const VecPoly* c : live) {
    auto d = vp_degree(F, *c);
    if (!d) fail(Errc::not_homogeneous, "inhomogeneous column in minimal_generators");
    degs.push_back(*d);
    dmin = first ? *d : std::min(dmin, *d);
    dmax = first ? *d : std::max(dmax, *d);
    first = false;
  }
  std::vector<Polynomial> igens = ring->defining_ideal().reduced_basis();
  std::vector<VecPoly> selected;
  for (int d = dmin; d <= dmax; ++d) {
    bool has_candidate = false;
    for (int deg : degs)
      if (deg == d) has_candidate = true;
    if (!has_candidate) continue;
    DegBasis basis = free_basis_at(F, n, d);
    if (basis.size() == 0) continue;
    Span span(field, basis.size());
    // (I * F)_d
    for (const Polynomial& f : igens) {
      int fd = f.degree();
      for (int j = 0; j < F.rank(); ++j) {
        int md = d - fd - F.shifts[j];
        if (md < 0) continue;
        for (const Monomial& u : monomials_of_degree(n, md))
          span.insert(coords_of(basis, vp_from_poly(f.times_monomial(Scalar::one(field), u), j), field));
      }
    }
    // (m * <cols>)_d : non-unit monomial multiples of every column
    for (size_t i = 0; i < live.size(); ++i) {
      int rem = d - degs[i];
      if (rem < 1) continue;
      for (const Monomial& u : monomials_of_degree(n, rem))
        span.insert(coords_of(basis, vp_times_monomial(*live[i], Scalar::one(field), u), field));
    }
    for (size_t i = 0; i < live.size(); ++i) {
      if (degs[i] != d) continue;
      if (span.insert(coords_of(basis, *live[i], field))) selected.push_back(*live[i]);
    }
  }
  return selected;
}

std::vector<VecPoly> preimage_generators(const RingPtr& ring, const ModLayout& F_src,
                                         const std::vector<VecPoly>& cols, const ModLayout& F_tgt,
                                         const std::vector<VecPoly>& tgt_cols) {
  int p = static_cast<int>(cols.size());
  if (p == 0) return {};
  std::vector<VecPoly> all = cols;
  all.insert(all.end(), tgt_cols.begin(), tgt_cols.end());
  std::vector<VecPoly> ic = ideal_columns(ring, F_tgt);
  all.insert(all.end(), ic.begin(), ic.end());
  SyzygyTable table(ring->field(), ring->nvars(), F_tgt, all);
  std::vector<VecPoly> out;
  for (const VecPoly& syz : table.syzygies()) {
    VecPoly v;
    for (const VTerm& t : syz)
      if (t.pos < p) v.push_back(t);
    v = vp_normalize(F_src, std::move(v));
    if (!vp_is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

TrimResult trim(const GradedModule& m) {
  const RingPtr& R = m.ring();
  const FieldSpec& field = R->field();
  int n = R->nvars();
  ModLayout F = m.layout();
  std::vector<Polynomial> igens = R->defining_ideal().reduced_basis();

  std::vector<int> keep;
  std::vector<int> sorted_degs = m.gen_degrees();
  std::sort(sorted_degs.begin(), sorted_degs.end());
  sorted_degs.erase(std::unique(sorted_degs.begin(), sorted_degs.end()), sorted_degs.end());
  for (int d : sorted_degs) {
    DegBasis basis = free_basis_at(F, n, d);
    Span span(field, basis.size());
    // (m F0)_d
    for (int j = 0; j < F.rank(); ++j) {
      int md = d - F.shifts[j];
      if (md < 1) continue;
      for (const Monomial& u : monomials_of_degree(n, md))
        span.insert(coords_of(basis, VecPoly{{Scalar::one(field), j, u}}, field));
    }
    // K_d: multiples of relation columns, plus (I F0)_d
    for (const VecPoly& r : m.relations()) {
      int rd = vp_degree(F, r).value();
      int rem = d - rd;
      if (rem < 0) continue;
      for (const Monomial& u : monomials_of_degree(n, rem))
        span.insert(coords_of(basis, vp_times_monomial(r, Scalar::one(field), u), field));
    }
    for (const Polynomial& f : igens) {
      for (int j = 0; j < F.rank(); ++j) {
        int md = d - f.degree() - F.shifts[j];
        if (md < 0) continue;
        for (const Monomial& u : monomials_of_degree(n, md))
          span.insert(coords_of(basis, vp_from_poly(f.times_monomial(Scalar::one(field), u), j), field));
      }
    }
    for (int j = 0; j < F.rank(); ++j) {
      if (m.gen_degrees()[j] != d) continue;
      if (span.insert(coords_of(basis, VecPoly{{Scalar::one(field), j, Monomial(n)}}, field))) keep.push_back(j);
    }
  }
  std::sort(keep.begin(), keep.end());

  if (static_cast<int>(keep.size()) == m.rank0()) {
    std::vector<VecPoly> images;
    std::vector<int> all(m.rank0());
    for (int j = 0; j < m.rank0(); ++j) {
      images.push_back(vp_basis(field, n, j));
      all[j] = j;
    }
    return TrimResult{m, std::move(images), std::move(all)};
  }

  std::vector<VecPoly> kept_cols;
  std::vector<int> new_degs;
  for (int j : keep) {
    kept_cols.push_back(vp_basis(field, n, j));
    new_degs.push_back(m.gen_degrees()[j]);
  }
  std::vector<VecPoly> all = kept_cols;
  all.insert(all.end(), m.relations().begin(), m.relations().end());
  std::vector<VecPoly> ic = ideal_columns(R, F);
  all.insert(all.end(), ic.begin(), ic.end());
  SyzygyTable table(field, n, F, all);

  int p = static_cast<int>(kept_cols.size());
  std::vector<VecPoly> new_rels;
  ModLayout newF = ModLayout::plain(new_degs);
  for (const VecPoly& syz : table.syzygies()) {
    VecPoly v;
    for (const VTerm& t : syz)
      if (t.pos < p) v.push_back(t);
    v = vp_normalize(newF, std::move(v));
    if (!vp_is_zero(v)) new_rels.push_back(std::move(v));
  }
  GradedModule trimmed(R, new_degs, new_rels);

  std::vector<VecPoly> images(m.rank0());
  for (int j = 0; j < m.rank0(); ++j) {
    auto pos = std::find(keep.begin(), keep.end(), j);
    if (pos != keep.end()) {
      images[j] = vp_basis(field, n, static_cast<int>(pos - keep.begin()));
      continue;
    }
    auto lift = table.lift(vp_basis(field, n, j));
    if (!lift) fail(Errc::internal, "trim: dropped generator is not in the span of kept generators");
    VecPoly img;
    for (int i = 0; i < p; ++i)
      if (!(*lift)[i].is_zero()) {
        VecPoly part = vp_from_poly((*lift)[i], i);
        img = vp_add(newF, img, part);
      }
    images[j] = std::move(img);
  }
  return TrimResult{std::move(trimmed), std::move(images), keep};
}

Resolution min_resolution(const GradedModule& m, int n_steps) {
  auto& cache = *m.cache();
  std::lock_guard<std::mutex> lk(cache.mu);
  if (!cache.trimmed_set) {
    TrimResult t = trim(m);
    cache.trimmed = t.mod;
    cache.trim_images = t.old_gen_images;
    cache.trim_kept = t.kept;
    cache.trimmed_set = true;
  }
  if (!cache.res) {
    cache.res = std::make_shared<Resolution>();
    cache.res->ring = m.ring();
    cache.res->f0_degs = cache.trimmed.gen_degrees();
    cache.res->gen_images = cache.trim_images;
    cache.res->f0_kept = cache.trim_kept;
  }
  Resolution& res = *cache.res;
  while (res.steps() < n_steps) {
    int i = res.steps();
    std::vector<VecPoly> kernel_gens;
    ModLayout Fi = ModLayout::plain(res.degrees_of(i));
    if (i == 0) {
      kernel_gens = cache.trimmed.relations();
    } else {
      const std::vector<VecPoly>& d_cols = res.diffs[i - 1];
      ModLayout Fprev = ModLayout::plain(res.degrees_of(i - 1));
      kernel_gens = preimage_generators(m.ring(), Fi, d_cols, Fprev, {});
    }
    std::vector<VecPoly> d_next = minimal_generators(m.ring(), Fi, kernel_gens);
    std::vector<int> degs;
    for (const VecPoly& c : d_next) degs.push_back(vp_degree(Fi, c).value());
    res.step_degs.push_back(std::move(degs));
    res.diffs.push_back(std::move(d_next));
  }
  return res;
}

GradedModule submodule_from_columns(const GradedModule& m, const std::vector<VecPoly>& cols) {
  ModLayout F = m.layout();
  std::vector<int> degs;
  std::vector<VecPoly> live;
  for (const VecPoly& c : cols) {
    if (vp_is_zero(c)) continue;
    live.push_back(c);
    degs.push_back(vp_degree(F, c).value());
  }
  std::vector<VecPoly> rels =
      preimage_generators(m.ring(), ModLayout::plain(degs), live, F, m.relations());
  return GradedModule(m.ring(), degs, rels);
}

GradedModule map_kernel(const ModMap& f, std::vector<VecPoly>* incl_out) {
  std::vector<VecPoly> U = preimage_generators(f.src.ring(), f.src.layout(), f.cols, f.tgt.layout(),
                                               f.tgt.relations());
  // preimage of the relation module contains the source relations already
  std::vector<int> degs;
  ModLayout Fs = f.src.layout();
  std::vector<VecPoly> live;
  for (const VecPoly& u : U) {
    if (vp_is_zero(u)) continue;
    live.push_back(u);
    degs.push_back(vp_degree(Fs, u).value());
  }
  std::vector<VecPoly> rels =
      preimage_generators(f.src.ring(), ModLayout::plain(degs), live, Fs, f.src.relations());
  if (incl_out) *incl_out = live;
  return GradedModule(f.src.ring(), degs, rels);
}

GradedModule map_cokernel(const ModMap& f) {
  std::vector<VecPoly> rels = f.tgt.relations();
  for (const VecPoly& c : f.cols)
    if (!vp_is_zero(c)) rels.push_back(c);
  return GradedModule(f.tgt.ring(), f.tgt.gen_degrees(), rels);
}

Homology::Homology(const ModMap& phi, const ModMap& psi) {
  const GradedModule& Q = psi.src;
  const RingPtr& R = Q.ring();
  std::vector<VecPoly> U =
      preimage_generators(R, Q.layout(), psi.cols, psi.tgt.layout(), psi.tgt.relations());
  std::vector<VecPoly> live;
  std::vector<int> degs;
  for (VecPoly& u : U) {
    if (vp_is_zero(u)) continue;
    degs.push_back(vp_degree(Q.layout(), u).value());
    live.push_back(std::move(u));
  }
  witnesses_ = live;
  n_witness_ = static_cast<int>(live.size());

  std::vector<VecPoly> boundary = Q.relations();
  for (const VecPoly& c : phi.cols)
    if (!vp_is_zero(c)) boundary.push_back(c);
  std::vector<VecPoly> rels =
      preimage_generators(R, ModLayout::plain(degs), live, Q.layout(), boundary);
  H_ = GradedModule(R, degs, rels);

  std::vector<VecPoly> all = live;
  all.insert(all.end(), boundary.begin(), boundary.end());
  std::vector<VecPoly> ic = ideal_columns(R, Q.layout());
  all.insert(all.end(), ic.begin(), ic.end());
  lift_ = std::make_shared<SyzygyTable>(R->field(), R->nvars(), Q.layout(), all);
}

std::optional<VecPoly> Homology::express(const VecPoly& cycle) const {
  auto lift = lift_->lift(cycle);
  if (!lift) return std::nullopt;
  ModLayout L = H_.layout();
  VecPoly out;
  for (int i = 0; i < n_witness_; ++i)
    if (!(*lift)[i].is_zero()) out = vp_add(L, out, vp_from_poly((*lift)[i], i));
  return out;
}

GradedModule direct_sum_twists(const GradedModule& m, const std::vector<int>& twists) {
  int rb = m.rank0();
  std::vector<int> degs;
  degs.reserve(twists.size() * rb);
  for (int t : twists)
    for (int l = 0; l < rb; ++l) degs.push_back(m.gen_degrees()[l] - t);
  std::vector<VecPoly> rels;
  ModLayout L = ModLayout::plain(degs);
  for (size_t t = 0; t < twists.size(); ++t)
    for (const VecPoly& r : m.relations()) {
      VecPoly col;
      for (const VTerm& term : r) col.push_back({term.c, static_cast<int>(t) * rb + term.pos, term.m});
      rels.push_back(vp_normalize(L, std::move(col)));
    }
  return GradedModule(m.ring(), degs, rels);
}

GradedModule hom_free_into(const RingPtr& ring, const std::vector<int>& shifts, const GradedModule& m) {
  (void)ring;
  return direct_sum_twists(m, shifts);
}

GradedModule tensor_free(const RingPtr& ring, const std::vector<int>& shifts, const GradedModule& m) {
  (void)ring;
  std::vector<int> neg(shifts.size());
  for (size_t i = 0; i < shifts.size(); ++i) neg[i] = -shifts[i];
  return direct_sum_twists(m, neg);
}

ModMap hom_transpose_map(const RingPtr& ring, const std::vector<int>& shifts_this,
                         const std::vector<int>& shifts_next, const std::vector<VecPoly>& d_cols,
                         const GradedModule& m) {
  GradedModule src = hom_free_into(ring, shifts_this, m);
  GradedModule tgt = hom_free_into(ring, shifts_next, m);
  int rb = m.rank0();
  ModLayout Lt = tgt.layout();
  std::vector<VecPoly> cols(src.rank0());
  for (size_t j = 0; j < shifts_this.size(); ++j)
    for (int l = 0; l < rb; ++l) {
      VecPoly col;
      for (size_t jj = 0; jj < d_cols.size(); ++jj)
        for (const VTerm& t : d_cols[jj])
          if (t.pos == static_cast<int>(j)) col.push_back({t.c, static_cast<int>(jj) * rb + l, t.m});
      cols[j * rb + l] = vp_normalize(Lt, std::move(col));
    }
  return ModMap{std::move(src), std::move(tgt), std::move(cols), 0};
}

ModMap tensor_diff_map(const RingPtr& ring, const std::vector<int>& shifts_from,
                       const std::vector<int>& shifts_to, const std::vector<VecPoly>& d_cols,
                       const GradedModule& m) {
  GradedModule src = tensor_free(ring, shifts_from, m);
  GradedModule tgt = tensor_free(ring, shifts_to, m);
  int rb = m.rank0();
  ModLayout Lt = tgt.layout();
  std::vector<VecPoly> cols(src.rank0());
  for (size_t jj = 0; jj < shifts_from.size(); ++jj)
    for (int l = 0; l < rb; ++l) {
      VecPoly col;
      for (const VTerm& t : d_cols[jj]) col.push_back({t.c, t.pos * rb + l, t.m});
      cols[jj * rb + l] = vp_normalize(Lt, std::move(col));
    }
  return ModMap{std::move(src), std::move(tgt), std::move(cols), 0};
}

GradedModule tensor_fg(const GradedModule& a, const GradedModule& b) {
  check_same_ring(a.ring(), b.ring());
  int ra = a.rank0(), rb = b.rank0();
  std::vector<int> degs;
  degs.reserve(static_cast<size_t>(ra) * rb);
  for (int j = 0; j < ra; ++j)
    for (int l = 0; l < rb; ++l) degs.push_back(a.gen_degrees()[j] + b.gen_degrees()[l]);
  ModLayout L = ModLayout::plain(degs);
  std::vector<VecPoly> rels;
  for (const VecPoly& r : a.relations())
    for (int l = 0; l < rb; ++l) {
      VecPoly col;
      for (const VTerm& t : r) col.push_back({t.c, t.pos * rb + l, t.m});
      rels.push_back(vp_normalize(L, std::move(col)));
    }
  for (int j = 0; j < ra; ++j)
    for (const VecPoly& r : b.relations()) {
      VecPoly col;
      for (const VTerm& t : r) col.push_back({t.c, j * rb + t.pos, t.m});
      rels.push_back(vp_normalize(L, std::move(col)));
    }
  return GradedModule(a.ring(), degs, rels);
}

GradedModule hom_fg(const GradedModule& a, const GradedModule& b) {
  check_same_ring(a.ring(), b.ring());
  std::vector<int> rel_degs;
  ModLayout Fa = a.layout();
  for (const VecPoly& r : a.relations()) rel_degs.push_back(vp_degree(Fa, r).value());
  ModMap d = hom_transpose_map(a.ring(), a.gen_degrees(), rel_degs, a.relations(), b);
  GradedModule ker = map_kernel(d);
  return trim(ker).mod;
}

GradedModule ext_fg(int i, const GradedModule& a, const GradedModule& b) {
  check_same_ring(a.ring(), b.ring());
  if (i < 0) fail(Errc::usage_error, "negative homological index");
  Resolution res = min_resolution(a, i + 1);
  if (res.betti(i) == 0) return GradedModule::zero(a.ring());
  GradedModule Ci = hom_free_into(a.ring(), res.degrees_of(i), b);
  ModMap phi = i == 0 ? ModMap::zero_map(GradedModule::zero(a.ring()), Ci)
                      : hom_transpose_map(a.ring(), res.degrees_of(i - 1), res.degrees_of(i),
                                          res.diffs[i - 1], b);
  ModMap psi = hom_transpose_map(a.ring(), res.degrees_of(i), res.degrees_of(i + 1), res.diffs[i], b);
  Homology h(phi, psi);
  return trim(h.module()).mod;
}

std::shared_ptr<Homology> ext_homology(int i, const GradedModule& a, const GradedModule& b) {
  check_same_ring(a.ring(), b.ring());
  Resolution res = min_resolution(a, i + 1);
  GradedModule Ci = hom_free_into(a.ring(), res.degrees_of(i), b);
  ModMap phi = i == 0 ? ModMap::zero_map(GradedModule::zero(a.ring()), Ci)
                      : hom_transpose_map(a.ring(), res.degrees_of(i - 1), res.degrees_of(i),
                                          res.diffs[i - 1], b);
  ModMap psi = hom_transpose_map(a.ring(), res.degrees_of(i), res.degrees_of(i + 1), res.diffs[i], b);
  return std::make_shared<Homology>(phi, psi);
}

GradedModule tor_fg(int i, const GradedModule& a, const GradedModule& b) {
  check_same_ring(a.ring(), b.ring());
  if (i < 0) fail(Errc::usage_error, "negative homological index");
  Resolution res = min_resolution(a, i + 1);
  if (res.betti(i) == 0) return GradedModule::zero(a.ring());
  GradedModule Ci = tensor_free(a.ring(), res.degrees_of(i), b);
  ModMap phi = tensor_diff_map(a.ring(), res.degrees_of(i + 1), res.degrees_of(i), res.diffs[i], b);
  ModMap psi = i == 0 ? ModMap::zero_map(Ci, GradedModule::zero(a.ring()))
                      : tensor_diff_map(a.ring(), res.degrees_of(i), res.degrees_of(i - 1),
                                        res.diffs[i - 1], b);
  Homology h(phi, psi);
  return trim(h.module()).mod;
}

namespace {

std::vector<Polynomial> ideal_power_gens(const QuotientRing& R, const Ideal& a, int s) {
  if (s == 0)
    return {Polynomial::constant(R.field(), R.nvars(), Scalar::one(R.field()))};
  bool is_max = true;
  std::vector<bool> seen(R.nvars(), false);
  for (const Polynomial& g : a.gens()) {
    if (g.terms().size() == 1 && g.lead().m.degree() == 1) {
      for (int i = 0; i < R.nvars(); ++i)
        if (g.lead().m.e[i] == 1) seen[i] = true;
    } else {
      is_max = false;
    }
  }
  for (bool b : seen) is_max = is_max && b;
  if (is_max && static_cast<int>(a.gens().size()) == R.nvars()) {
    std::vector<Polynomial> gens;
    for (const Monomial& u : monomials_of_degree(R.nvars(), s))
      gens.push_back(Polynomial::monomial(R.field(), Scalar::one(R.field()), u));
    return gens;
  }
  return Ideal::power(a, s).gens();
}

}  // namespace

GradedModule submodule_op(const GradedModule& m, const Ideal& a, int s, SubOp op,
                          std::vector<VecPoly>* incl_out) {
  const RingPtr& R = m.ring();
  std::vector<Polynomial> gens = ideal_power_gens(*R, a, s);
  std::vector<Polynomial> live;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) live.push_back(g);

  if (op == SubOp::quotient_by_scale) {
    std::vector<VecPoly> rels = m.relations();
    for (const Polynomial& g : live)
      for (int j = 0; j < m.rank0(); ++j) rels.push_back(vp_from_poly(g, j));
    return GradedModule(R, m.gen_degrees(), rels);
  }

  if (op == SubOp::scale) {
    std::vector<VecPoly> cols;
    for (const Polynomial& g : live)
      for (int j = 0; j < m.rank0(); ++j) {
        VecPoly c = m.nf(vp_from_poly(g, j));
        if (!vp_is_zero(c)) cols.push_back(std::move(c));
      }
    GradedModule sub = submodule_from_columns(m, cols);
    if (incl_out) {
      incl_out->clear();
      for (const Polynomial& g : live)
        for (int j = 0; j < m.rank0(); ++j) {
          VecPoly c = m.nf(vp_from_poly(g, j));
          if (!vp_is_zero(c)) incl_out->push_back(std::move(c));
        }
    }
    return sub;
  }

  // colon: (0 :_m a^s) = kernel of m -> (+)_g m(deg g), e_j -> (g e_j)_g
  bool has_unit = false;
  for (const Polynomial& g : live)
    if (g.lead().m.is_one()) has_unit = true;
  if (live.empty() || has_unit) {
    // s == 0 or a^s contains a unit: (0 : (1)) = 0
    if (incl_out) incl_out->clear();
    return GradedModule::zero(R);
  }
  std::vector<int> twists;
  for (const Polynomial& g : live) twists.push_back(g.degree());
  GradedModule tgt = direct_sum_twists(m, twists);
  ModLayout Lt = tgt.layout();
  int rb = m.rank0();
  std::vector<VecPoly> cols(m.rank0());
  for (int j = 0; j < rb; ++j) {
    VecPoly col;
    for (size_t t = 0; t < live.size(); ++t)
      for (const Term& term : live[t].terms())
        col.push_back({term.c, static_cast<int>(t) * rb + j, term.m});
    cols[j] = vp_normalize(Lt, std::move(col));
  }
  ModMap f{m, std::move(tgt), std::move(cols), 0};
  return map_kernel(f, incl_out);
}

std::pair<GradedModule, int> gamma_m(const GradedModule& m) {
  const RingPtr& R = m.ring();
  Ideal mx = R->maximal_ideal();
  GradedModule prev = GradedModule::zero(R);
  long prev_len = 0;
  for (int j = 1; j <= 200; ++j) {
    GradedModule cur = submodule_op(m, mx, j, SubOp::colon);
    long len = cur.length();
    if (len == prev_len) return {prev, j - 1};
    prev = cur;
    prev_len = len;
  }
  fail(Errc::no_stabilization, "gamma_m failed to stabilize within 200 steps");
}

namespace {

std::mutex k_memo_mu;
std::map<const QuotientRing*, GradedModule> k_memo;

}  // namespace

static GradedModule residue_field_memo(const RingPtr& ring) {
  std::lock_guard<std::mutex> lk(k_memo_mu);
  auto it = k_memo.find(ring.get());
  if (it != k_memo.end()) return it->second;
  GradedModule k = GradedModule::residue_field(ring);
  k_memo.emplace(ring.get(), k);
  return k;
}

std::vector<long> resolution_betti(const GradedModule& m, int imax) {
  Resolution res = min_resolution(m, imax);
  std::vector<long> betti;
  for (int i = 0; i <= imax; ++i) betti.push_back(res.betti(i));
  return betti;
}

std::pair<std::vector<long>, std::vector<long>> betti_bass(const GradedModule& m, int imax) {
  GradedModule k = residue_field_memo(m.ring());
  std::vector<long> beta, mu;
  for (int i = 0; i <= imax; ++i) {
    beta.push_back(tor_fg(i, k, m).length());
    mu.push_back(ext_fg(i, k, m).length());
  }
  std::vector<long> ranks = resolution_betti(m, imax);
  for (int i = 0; i <= imax; ++i)
    if (ranks[i] != beta[i])
      fail(Errc::internal, "betti cross-check failed: resolution rank " + std::to_string(ranks[i]) +
                               " vs Tor dimension " + std::to_string(beta[i]) + " at i=" + std::to_string(i));
  return {beta, mu};
}

GradedModule twist(const GradedModule& m, int a) {
  std::vector<int> degs = m.gen_degrees();
  for (int& d : degs) d -= a;
  return GradedModule(m.ring(), degs, m.relations());
}

VecPoly apply_columns(const ModLayout& tgt_layout, const std::vector<VecPoly>& cols, const VecPoly& v) {
  VecPoly out;
  for (const VTerm& t : v) out = vp_add(tgt_layout, out, vp_times_monomial(cols[t.pos], t.c, t.m));
  return out;
}

std::vector<std::vector<VecPoly>> lift_chain_map(const ModMap& f, const Resolution& rv,
                                                 const Resolution& rvp, int upto) {
  const RingPtr& R = f.src.ring();
  const FieldSpec& field = R->field();
  int n = R->nvars();
  std::vector<std::vector<VecPoly>> phi(upto + 1);

  // phi_0 : F_0(V) -> F_0(V'): send the kept original generator through f and
  // rewrite in the trimmed cover of V'.
  ModLayout L0p = ModLayout::plain(rvp.f0_degs);
  phi[0].resize(rv.f0_degs.size());
  for (size_t jt = 0; jt < rv.f0_degs.size(); ++jt) {
    const VecPoly& image = f.cols[rv.f0_kept[jt]];  // in F0 of the original V'
    VecPoly rewritten;
    for (const VTerm& t : image)
      rewritten = vp_add(L0p, rewritten, vp_times_monomial(rvp.gen_images[t.pos], t.c, t.m));
    phi[0][jt] = std::move(rewritten);
  }

  for (int t = 1; t <= upto; ++t) {
    ModLayout Lt_prev_p = ModLayout::plain(rvp.degrees_of(t - 1));
    ModLayout Lt_p = ModLayout::plain(rvp.degrees_of(t));
    // solve d'_t phi_t = phi_{t-1} d_t column by column
    std::vector<VecPoly> all = rvp.diffs[t - 1];
    std::vector<VecPoly> ic = ideal_columns(R, Lt_prev_p);
    all.insert(all.end(), ic.begin(), ic.end());
    SyzygyTable table(field, n, Lt_prev_p, all);
    int p = static_cast<int>(rvp.diffs[t - 1].size());
    phi[t].resize(rv.diffs[t - 1].size());
    for (size_t c = 0; c < rv.diffs[t - 1].size(); ++c) {
      VecPoly rhs = apply_columns(Lt_prev_p, phi[t - 1], rv.diffs[t - 1][c]);
      auto lift = table.lift(rhs);
      if (!lift) fail(Errc::internal, "chain map lift failed");
      VecPoly col;
      for (int j = 0; j < p; ++j)
        if (!(*lift)[j].is_zero()) col = vp_add(Lt_p, col, vp_from_poly((*lift)[j], j));
      phi[t][c] = std::move(col);
    }
  }
  return phi;
}

bool hilbert_equal_upto(const GradedModule& a, const GradedModule& b, int dmax) {
  int dmin = 0;
  for (int d : a.gen_degrees()) dmin = std::min(dmin, d);
  for (int d : b.gen_degrees()) dmin = std::min(dmin, d);
  for (int d = dmin; d <= dmax; ++d)
    if (a.hilbert(d) != b.hilbert(d)) return false;
  return true;
}

std::pair<int, int> degree_window(const GradedModule& a) {
  int lo = 0, hi = 0;
  bool first = true;
  for (int d : a.gen_degrees()) {
    lo = first ? d : std::min(lo, d);
    hi = first ? d : std::max(hi, d);
    first = false;
  }
  ModLayout L = a.layout();
  for (const VecPoly& r : a.relations()) {
    int d = vp_degree(L, r).value();
    hi = std::max(hi, d);
  }
  return {lo, hi};
}

long dim_of(const GradedModule& m) { return m.length(); }

Ideal annihilator(const GradedModule& m) {
  const RingPtr& R = m.ring();
  const FieldSpec& field = R->field();
  int n = R->nvars();
  if (m.rank0() == 0)
    return Ideal(R->poly_ptr(), {Polynomial::constant(field, n, Scalar::one(field))});
  Ideal result;
  bool first = true;
  for (int j = 0; j < m.rank0(); ++j) {
    std::vector<VecPoly> all;
    all.push_back(vp_basis(field, n, j));
    all.insert(all.end(), m.relations().begin(), m.relations().end());
    std::vector<VecPoly> ic = ideal_columns(R, m.layout());
    all.insert(all.end(), ic.begin(), ic.end());
    SyzygyTable table(field, n, m.layout(), all);
    std::vector<Polynomial> gens;
    for (const VecPoly& syz : table.syzygies()) {
      Polynomial c(field, n);
      for (const VTerm& t : syz)
        if (t.pos == 0) c.add_term(t.c, t.m);
      if (!c.is_zero()) gens.push_back(c);
    }
    Ideal aj(R->poly_ptr(), gens);
    result = first ? aj : Ideal::intersect(result, aj);
    first = false;
  }
  return result;
}

}  // namespace matlis
