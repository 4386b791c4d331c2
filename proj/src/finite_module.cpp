#include "matlis/finite_module.hpp"

#include <algorithm>
#include <map>

#include "matlis/util.hpp"

namespace matlis {

Vec FiniteLengthModule::coords(const VecPoly& v) const {
  VecPoly nf = base.nf(v);
  Vec out(basis.size(), Scalar::zero(field()));
  for (const VTerm& t : nf) {
    bool found = false;
    for (size_t b = 0; b < basis.size(); ++b)
      if (basis[b].first == t.pos && basis[b].second == t.m) {
        out[b] = out[b] + t.c;
        found = true;
        break;
      }
    if (!found) fail(Errc::internal, "normal form term is not a standard monomial");
  }
  return out;
}

VecPoly FiniteLengthModule::element(const Vec& c) const {
  VecPoly out;
  for (size_t b = 0; b < basis.size(); ++b)
    if (!c[b].is_zero()) out.push_back({c[b], basis[b].first, basis[b].second});
  return vp_normalize(base.layout(), std::move(out));
}

Vec FiniteLengthModule::apply_monomial(const Monomial& u, Vec v) const {
  for (int i = 0; i < u.nvars(); ++i)
    for (int k = 0; k < u.e[i]; ++k) v = ops[i].apply(v);
  return v;
}

std::map<int, long> FiniteLengthModule::hilbert() const {
  std::map<int, long> h;
  for (int d : degrees) h[d] += 1;
  return h;
}

long FiniteLengthModule::min_generators() const {
  if (basis.empty()) return 0;
  Span span(field(), static_cast<int>(basis.size()));
  long total = 0;
  for (const Mat& op : ops)
    for (int c = 0; c < op.cols; ++c) {
      Vec col(op.rows, Scalar::zero(field()));
      for (int r = 0; r < op.rows; ++r) col[r] = op.at(r, c);
      if (span.insert(col)) ++total;
    }
  return dim() - total;
}

long FiniteLengthModule::socle_dim() const {
  if (basis.empty()) return 0;
  int d = static_cast<int>(basis.size());
  Mat stacked(field(), d * static_cast<int>(ops.size()), d);
  for (size_t i = 0; i < ops.size(); ++i)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) stacked.at(static_cast<int>(i) * d + r, c) = ops[i].at(r, c);
  return static_cast<long>(kernel_basis(stacked).size());
}

int FiniteLengthModule::nilpotency() const {
  if (basis.empty()) return 1;
  int d = static_cast<int>(basis.size());
  // m^n V spanned by words of length n in the operators applied to V
  std::vector<Vec> current;
  for (int b = 0; b < d; ++b) {
    Vec e(d, Scalar::zero(field()));
    e[b] = Scalar::one(field());
    current.push_back(std::move(e));
  }
  for (int n = 1; n <= d + 1; ++n) {
    Span next(field(), d);
    std::vector<Vec> next_vecs;
    for (const Mat& op : ops)
      for (const Vec& v : current) {
        Vec w = op.apply(v);
        if (next.insert(w)) next_vecs.push_back(std::move(w));
      }
    if (next_vecs.empty()) return n;
    current = std::move(next_vecs);
  }
  fail(Errc::internal, "operators are not nilpotent");
}

FiniteLengthModule make_finite(const GradedModule& m) {
  const auto& data = m.finite_data();
  if (!data.finite) fail(Errc::not_finite_length, "module does not have finite length");
  FiniteLengthModule f;
  f.base = m;
  f.basis = data.basis;
  for (const auto& [pos, mono] : f.basis) f.degrees.push_back(mono.degree() + m.gen_degrees()[pos]);
  int d = static_cast<int>(f.basis.size());
  int n = m.ring()->nvars();
  const FieldSpec& field = m.ring()->field();
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (int b = 0; b < d; ++b) index[{f.basis[b].first, f.basis[b].second.e}] = b;
  for (int i = 0; i < n; ++i) {
    Mat op(field, d, d);
    for (int b = 0; b < d; ++b) {
      Monomial xi(n);
      xi.e[i] = 1;
      VecPoly nf = m.nf(VecPoly{{Scalar::one(field), f.basis[b].first, f.basis[b].second * xi}});
      for (const VTerm& t : nf) {
        auto it = index.find({t.pos, t.m.e});
        if (it == index.end()) fail(Errc::internal, "normal form escaped the standard basis");
        op.at(it->second, b) = op.at(it->second, b) + t.c;
      }
    }
    f.ops.push_back(std::move(op));
  }
  return f;
}

bool FLMap::intertwines() const {
  for (size_t i = 0; i < src.ops.size(); ++i)
    if (!(mat * src.ops[i] == tgt.ops[i] * mat)) return false;
  return true;
}

bool FLMap::is_injective() const { return rank(mat) == mat.cols; }

bool FLMap::is_isomorphism() const { return mat.rows == mat.cols && inverse(mat).has_value(); }

FLMap compose(const FLMap& g, const FLMap& f) { return FLMap{f.src, g.tgt, g.mat * f.mat}; }

PresentedOps present_operators(const RingPtr& ring, const std::vector<int>& degrees,
                               const std::vector<Mat>& ops) {
  const FieldSpec& field = ring->field();
  int n = ring->nvars();
  int D = static_cast<int>(degrees.size());

  // choose generators: a degreewise basis of W / mW
  std::vector<int> gen_idx;
  std::vector<int> degs_sorted = degrees;
  std::sort(degs_sorted.begin(), degs_sorted.end());
  degs_sorted.erase(std::unique(degs_sorted.begin(), degs_sorted.end()), degs_sorted.end());
  // mW is the operator-image span; pick unit vectors per degree extending it
  Span span(field, std::max(D, 1));
  for (size_t i = 0; i < ops.size(); ++i)
    for (int c = 0; c < D; ++c) {
      Vec col(D, Scalar::zero(field));
      for (int r = 0; r < D; ++r) col[r] = ops[i].at(r, c);
      span.insert(col);
    }
  for (int d : degs_sorted)
    for (int b = 0; b < D; ++b) {
      if (degrees[b] != d) continue;
      Vec e(D, Scalar::zero(field));
      e[b] = Scalar::one(field);
      if (span.insert(e)) gen_idx.push_back(b);
    }

  std::vector<int> gen_degs;
  for (int g : gen_idx) gen_degs.push_back(degrees[g]);
  ModLayout F0 = ModLayout::plain(gen_degs);

  auto evaluate = [&](int j, const Monomial& u) {
    Vec v(D, Scalar::zero(field));
    v[gen_idx[j]] = Scalar::one(field);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < u.e[i]; ++k) v = ops[i].apply(v);
    return v;
  };

  int dmax = 0;
  for (int d : degrees) dmax = std::max(dmax, d);
  int dmin = gen_degs.empty() ? 0 : *std::min_element(gen_degs.begin(), gen_degs.end());

  std::vector<VecPoly> rels;
  std::vector<VecPoly> prev_kernel;  // kernel generators found so far
  for (int d = dmin; D > 0 && d <= dmax + 1; ++d) {
    // basis of (F0)_d
    std::vector<std::pair<int, Monomial>> fbasis;
    for (size_t j = 0; j < gen_idx.size(); ++j) {
      int md = d - gen_degs[j];
      if (md < 0) continue;
      for (const Monomial& u : monomials_of_degree(n, md)) fbasis.push_back({static_cast<int>(j), u});
    }
    if (fbasis.empty()) continue;
    Mat pi(field, D, static_cast<int>(fbasis.size()));
    for (size_t c = 0; c < fbasis.size(); ++c) {
      Vec v = evaluate(fbasis[c].first, fbasis[c].second);
      for (int r = 0; r < D; ++r) pi.at(r, static_cast<int>(c)) = v[r];
    }
    std::vector<Vec> kern = kernel_basis(pi);
    if (kern.empty()) continue;
    // discard kernel vectors already generated by lower-degree relations
    std::map<std::pair<int, std::vector<int>>, int> index;
    for (size_t c = 0; c < fbasis.size(); ++c) index[{fbasis[c].first, fbasis[c].second.e}] = static_cast<int>(c);
    Span known(field, static_cast<int>(fbasis.size()));
    for (const VecPoly& r : rels)
      for (const Monomial& u : monomials_of_degree(n, d - vp_degree(F0, r).value())) {
        VecPoly mult = vp_times_monomial(r, Scalar::one(field), u);
        Vec coords(fbasis.size(), Scalar::zero(field));
        for (const VTerm& t : mult) coords[index.at({t.pos, t.m.e})] = coords[index.at({t.pos, t.m.e})] + t.c;
        known.insert(coords);
      }
    for (const Vec& kv : kern) {
      if (!known.insert(kv)) continue;
      VecPoly r;
      for (size_t c = 0; c < fbasis.size(); ++c)
        if (!kv[c].is_zero()) r.push_back({kv[c], fbasis[c].first, fbasis[c].second});
      rels.push_back(vp_normalize(F0, std::move(r)));
    }
  }

  PresentedOps out;
  out.mod = make_finite(GradedModule(ring, gen_degs, rels));
  if (out.mod.dim() != D) fail(Errc::internal, "present_operators dimension mismatch");

  // change of basis: closure of generators under the operators, with
  // expressions in F0
  Span closure(field, std::max(D, 1));
  std::vector<VecPoly> exprs;  // parallel to closure insertions
  std::vector<std::pair<Vec, VecPoly>> queue;
  for (size_t j = 0; j < gen_idx.size(); ++j) {
    Vec v(D, Scalar::zero(field));
    v[gen_idx[j]] = Scalar::one(field);
    queue.push_back({v, vp_basis(field, n, static_cast<int>(j))});
  }
  ModLayout L0 = F0;
  for (size_t q = 0; q < queue.size(); ++q) {
    Vec v = queue[q].first;
    VecPoly e = queue[q].second;
    if (!closure.insert(v)) continue;
    exprs.push_back(e);
    for (int i = 0; i < n; ++i) {
      Monomial xi(n);
      xi.e[i] = 1;
      queue.push_back({ops[i].apply(v), vp_times_monomial(e, Scalar::one(field), xi)});
    }
  }
  if (static_cast<int>(exprs.size()) != D && D > 0)
    fail(Errc::internal, "generators do not span the module");

  out.to_mod = Mat(field, static_cast<int>(out.mod.dim()), D);
  for (int b = 0; b < D; ++b) {
    Vec unit(D, Scalar::zero(field));
    unit[b] = Scalar::one(field);
    auto combo = closure.express(unit);
    if (!combo) fail(Errc::internal, "closure failed to span");
    VecPoly expr;
    for (size_t i = 0; i < combo->size(); ++i)
      if (!(*combo)[i].is_zero()) expr = vp_add(L0, expr, vp_scale(exprs[i], (*combo)[i]));
    Vec c = out.mod.coords(expr);
    for (size_t r = 0; r < c.size(); ++r) out.to_mod.at(static_cast<int>(r), b) = c[r];
  }
  auto inv = inverse(out.to_mod);
  if (!inv) fail(Errc::internal, "present_operators basis change is singular");
  out.from_mod = *inv;
  return out;
}

DualResult dualize(const FiniteLengthModule& v, bool normalize) {
  const RingPtr& R = v.ring();
  int D = static_cast<int>(v.dim());
  int shift = 0;
  if (normalize && D > 0) {
    int maxdeg = *std::max_element(v.degrees.begin(), v.degrees.end());
    shift = -maxdeg;
  }
  std::vector<int> dual_degs(D);
  for (int b = 0; b < D; ++b) dual_degs[b] = -v.degrees[b] - shift;
  std::vector<Mat> dual_ops;
  for (const Mat& op : v.ops) dual_ops.push_back(op.transpose());
  PresentedOps p = present_operators(R, dual_degs, dual_ops);
  DualResult out;
  out.mod = std::move(p.mod);
  out.mod.dual_shift = shift - v.dual_shift;  // true degree = stored + dual_shift
  out.from_functional = std::move(p.to_mod);
  out.to_functional = std::move(p.from_mod);
  out.shift = shift;
  return out;
}

FLMap dualize_map(const FLMap& f, const DualResult& dual_src, const DualResult& dual_tgt) {
  // D(f) : D(W) -> D(V), matrix transpose in functional coordinates
  Mat m = dual_src.from_functional * f.mat.transpose() * dual_tgt.to_functional;
  return FLMap{dual_tgt.mod, dual_src.mod, std::move(m)};
}

FiniteLengthModule hom_finite(const FiniteLengthModule& v, const FiniteLengthModule& w) {
  check_same_ring(v.ring(), w.ring());
  const FieldSpec& field = v.field();
  int dv = static_cast<int>(v.dim()), dw = static_cast<int>(w.dim());
  if (dv == 0 || dw == 0) {
    PresentedOps p = present_operators(v.ring(), {}, std::vector<Mat>(v.ops.size(), Mat(field, 0, 0)));
    return p.mod;
  }
  int nops = static_cast<int>(v.ops.size());
  // solve Phi X_i = Y_i Phi over all entries; unknowns Phi[r][c], r < dw, c < dv
  int unknowns = dv * dw;
  int eqs = nops * dv * dw;
  Mat sys(field, eqs, unknowns);
  auto uidx = [&](int r, int c) { return r * dv + c; };
  int row = 0;
  for (int i = 0; i < nops; ++i) {
    const Mat& X = v.ops[i];
    const Mat& Y = w.ops[i];
    for (int r = 0; r < dw; ++r)
      for (int c = 0; c < dv; ++c) {
        // (Phi X - Y Phi)[r][c] = sum_k Phi[r][k] X[k][c] - sum_k Y[r][k] Phi[k][c]
        for (int k = 0; k < dv; ++k)
          sys.at(row, uidx(r, k)) = sys.at(row, uidx(r, k)) + X.at(k, c);
        for (int k = 0; k < dw; ++k)
          sys.at(row, uidx(k, c)) = sys.at(row, uidx(k, c)) - Y.at(r, k);
        ++row;
      }
  }
  std::vector<Vec> sol = kernel_basis(sys);
  // split each solution into graded components (offset e maps V_d -> W_{d+e});
  // the components of an intertwiner are again intertwiners
  std::map<int, Span> spans;
  std::vector<Vec> hom_basis;
  std::vector<int> hom_degs;
  std::map<int, std::vector<int>> basis_by_offset;
  std::vector<int> offsets_seen;
  for (const Vec& s : sol) {
    std::map<int, Vec> pieces;
    for (int r = 0; r < dw; ++r)
      for (int c = 0; c < dv; ++c) {
        const Scalar& x = s[uidx(r, c)];
        if (x.is_zero()) continue;
        int e = w.degrees[r] - v.degrees[c];
        auto [it, fresh] = pieces.try_emplace(e, Vec(unknowns, Scalar::zero(field)));
        it->second[uidx(r, c)] = x;
      }
    for (auto& [e, piece] : pieces) {
      auto [it, fresh] = spans.try_emplace(e, Span(field, unknowns));
      if (it->second.insert(piece)) {
        basis_by_offset[e].push_back(static_cast<int>(hom_basis.size()));
        hom_basis.push_back(piece);
        hom_degs.push_back(e);
      }
    }
  }
  int H = static_cast<int>(hom_basis.size());
  // operators: x_i . Phi = Y_i Phi, expressed in the hom basis
  Span full(field, unknowns);
  std::vector<int> order;  // map insertion order -> hom basis index
  for (int b = 0; b < H; ++b) {
    full.insert(hom_basis[b]);
    order.push_back(b);
  }
  std::vector<Mat> hops;
  for (int i = 0; i < nops; ++i) {
    Mat op(field, H, H);
    for (int b = 0; b < H; ++b) {
      // compute Y_i * Phi_b as a vectorized matrix
      Vec img(unknowns, Scalar::zero(field));
      for (int r = 0; r < dw; ++r)
        for (int c = 0; c < dv; ++c) {
          Scalar acc = Scalar::zero(field);
          for (int k = 0; k < dw; ++k) {
            const Scalar& y = w.ops[i].at(r, k);
            const Scalar& p = hom_basis[b][uidx(k, c)];
            if (!y.is_zero() && !p.is_zero()) acc = acc + y * p;
          }
          img[uidx(r, c)] = acc;
        }
      auto combo = full.express(img);
      if (!combo) fail(Errc::internal, "hom operator escaped the intertwiner space");
      for (size_t k = 0; k < combo->size(); ++k) op.at(order[k], b) = (*combo)[k];
    }
    hops.push_back(std::move(op));
  }
  return present_operators(v.ring(), hom_degs, hops).mod;
}

FiniteLengthModule tensor_finite(const FiniteLengthModule& v, const FiniteLengthModule& w) {
  GradedModule t = trim(tensor_fg(v.base, w.base)).mod;
  return make_finite(t);
}

FLMap projection_flm(const FiniteLengthModule& big, const FiniteLengthModule& small) {
  if (big.base.gen_degrees() != small.base.gen_degrees())
    fail(Errc::internal, "projection requires a common free cover");
  Mat m(big.field(), static_cast<int>(small.dim()), static_cast<int>(big.dim()));
  for (size_t b = 0; b < big.basis.size(); ++b) {
    VecPoly elem{{Scalar::one(big.field()), big.basis[b].first, big.basis[b].second}};
    Vec c = small.coords(elem);
    for (size_t r = 0; r < c.size(); ++r) m.at(static_cast<int>(r), static_cast<int>(b)) = c[r];
  }
  return FLMap{big, small, std::move(m)};
}

ModMap flm_to_modmap(const FLMap& f) {
  const FiniteLengthModule& V = f.src;
  const FiniteLengthModule& W = f.tgt;
  const FieldSpec& field = V.field();
  int n = V.ring()->nvars();
  std::vector<VecPoly> cols;
  for (int j = 0; j < V.base.rank0(); ++j) {
    Vec c = f.mat.apply(V.coords(vp_basis(field, n, j)));
    cols.push_back(W.element(c));
  }
  return ModMap{V.base, W.base, std::move(cols), 0};
}

FLMap modmap_to_flm(const ModMap& f, const FiniteLengthModule& src, const FiniteLengthModule& tgt) {
  Mat m(src.field(), static_cast<int>(tgt.dim()), static_cast<int>(src.dim()));
  for (size_t b = 0; b < src.basis.size(); ++b) {
    auto [pos, mono] = src.basis[b];
    Vec img = tgt.apply_monomial(mono, tgt.coords(f.cols[pos]));
    for (size_t r = 0; r < img.size(); ++r) m.at(static_cast<int>(r), static_cast<int>(b)) = img[r];
  }
  return FLMap{src, tgt, std::move(m)};
}

bool conjugate_certificate(const FiniteLengthModule& a, const FiniteLengthModule& b, uint64_t seed) {
  if (a.dim() != b.dim()) return false;
  if (a.dim() == 0) return true;
  const FieldSpec& field = a.field();
  int da = static_cast<int>(a.dim());
  // intertwiner space Hom(a, b)
  int nops = static_cast<int>(a.ops.size());
  int unknowns = da * da;
  Mat sys(field, nops * da * da, unknowns);
  auto uidx = [&](int r, int c) { return r * da + c; };
  int row = 0;
  for (int i = 0; i < nops; ++i) {
    for (int r = 0; r < da; ++r)
      for (int c = 0; c < da; ++c) {
        for (int k = 0; k < da; ++k) sys.at(row, uidx(r, k)) = sys.at(row, uidx(r, k)) + a.ops[i].at(k, c);
        for (int k = 0; k < da; ++k) sys.at(row, uidx(k, c)) = sys.at(row, uidx(k, c)) - b.ops[i].at(r, k);
        ++row;
      }
  }
  std::vector<Vec> sol = kernel_basis(sys);
  if (sol.empty()) return false;
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 24; ++attempt) {
    Mat phi(field, da, da);
    for (const Vec& s : sol) {
      long coef = rng.range(0, field.kind == FieldKind::prime_field ? field.p - 1 : 7);
      Scalar c = Scalar::from_long(field, coef);
      for (int r = 0; r < da; ++r)
        for (int cc = 0; cc < da; ++cc) phi.at(r, cc) = phi.at(r, cc) + c * s[uidx(r, cc)];
    }
    if (inverse(phi)) return true;
  }
  return false;
}

}  // namespace matlis
