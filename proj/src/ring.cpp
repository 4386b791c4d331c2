#include "matlis/ring.hpp"

#include <algorithm>

#include "matlis/util.hpp"

namespace matlis {

namespace {

ModLayout rank1() { return ModLayout::plain({0}); }

std::vector<VecPoly> to_vecs(const std::vector<Polynomial>& ps) {
  std::vector<VecPoly> v;
  v.reserve(ps.size());
  for (const Polynomial& p : ps) v.push_back(vp_from_poly(p));
  return v;
}

}  // namespace

Ideal::Ideal(std::shared_ptr<const PolyRing> ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  for (const Polynomial& g : gens_) {
    if (!g.is_homogeneous())
      fail(Errc::not_homogeneous, "inhomogeneous ideal generator: " + g.to_string(ring_->vars));
    if (g.field() != ring_->field || g.nvars() != ring_->nvars)
      fail(Errc::ring_mismatch, "generator not in the ambient ring");
  }
}

const GBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] {
    std::vector<VecPoly> in;
    for (const Polynomial& g : gens_)
      if (!g.is_zero()) in.push_back(vp_from_poly(g));
    cache_->gb = std::make_shared<const GBasis>(buchberger(rank1(), in));
  });
  return *cache_->gb;
}

std::vector<Polynomial> Ideal::reduced_basis() const {
  std::vector<Polynomial> out;
  for (const VecPoly& e : groebner().elems) out.push_back(vp_component(e, 0, ring_->field, ring_->nvars));
  return out;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  VecPoly r = groebner().normal_form(vp_from_poly(f));
  return vp_component(r, 0, ring_->field, ring_->nvars);
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::is_zero_ideal() const {
  for (const Polynomial& g : gens_)
    if (!g.is_zero()) return false;
  return true;
}

bool Ideal::is_proper() const {
  for (const VecPoly& e : groebner().elems)
    if (vp_lead(e).m.is_one()) return false;
  return true;
}

bool Ideal::is_monomial() const {
  for (const Polynomial& g : gens_)
    if (!g.is_zero() && g.terms().size() != 1) return false;
  return true;
}

void Ideal::check_compatible(const Ideal& o) const {
  if (!ring_->same(*o.ring_)) fail(Errc::ring_mismatch, "ideals live in different rings");
}

Ideal Ideal::sum(const Ideal& a, const Ideal& b) {
  a.check_compatible(b);
  std::vector<Polynomial> gens = a.gens_;
  gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
  return Ideal(a.ring_, std::move(gens));
}

Ideal Ideal::product(const Ideal& a, const Ideal& b) {
  a.check_compatible(b);
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.gens_)
    for (const Polynomial& g : b.gens_) gens.push_back(f * g);
  return Ideal(a.ring_, std::move(gens));
}

Ideal Ideal::power(const Ideal& a, int s) {
  if (s < 0) fail(Errc::usage_error, "negative ideal power");
  Ideal r(a.ring_, {Polynomial::constant(a.ring_->field, a.ring_->nvars, Scalar::one(a.ring_->field))});
  for (int i = 0; i < s; ++i) r = product(r, a);
  return r;
}

Ideal Ideal::intersect(const Ideal& a, const Ideal& b) {
  a.check_compatible(b);
  // Syzygies of the concatenated row [a-gens, b-gens]: each relation evaluates
  // to an element of a ∩ b through its a-part.
  std::vector<Polynomial> all = a.gens_;
  all.insert(all.end(), b.gens_.begin(), b.gens_.end());
  std::vector<Polynomial> nonzero;
  for (auto& p : all)
    if (!p.is_zero()) nonzero.push_back(p);
  size_t na = 0;
  for (const auto& p : a.gens_)
    if (!p.is_zero()) ++na;
  SyzygyTable table(a.ring_->field, a.ring_->nvars, rank1(), to_vecs(nonzero));
  std::vector<Polynomial> gens;
  for (const VecPoly& syz : table.syzygies()) {
    Polynomial elem(a.ring_->field, a.ring_->nvars);
    for (const VTerm& t : syz)
      if (t.pos < static_cast<int>(na)) elem = elem + nonzero[t.pos].times_monomial(t.c, t.m);
    if (!elem.is_zero()) gens.push_back(elem);
  }
  return Ideal(a.ring_, std::move(gens));
}

Ideal Ideal::colon(const Ideal& a, const Ideal& b) {
  a.check_compatible(b);
  // (a : b) = intersection over generators g of b of (a : g); each (a : g) is
  // read off from syzygies of the row [g, a-gens].
  bool first = true;
  Ideal result;
  for (const Polynomial& g : b.gens_) {
    if (g.is_zero()) continue;
    Ideal ag;
    if (a.contains(g)) {
      // (a : g) = (1)
      ag = Ideal(a.ring_, {Polynomial::constant(a.ring_->field, a.ring_->nvars, Scalar::one(a.ring_->field))});
    } else {
      std::vector<Polynomial> row{g};
      for (const Polynomial& f : a.gens_)
        if (!f.is_zero()) row.push_back(f);
      SyzygyTable table(a.ring_->field, a.ring_->nvars, rank1(), to_vecs(row));
      std::vector<Polynomial> gens;
      for (const VecPoly& syz : table.syzygies()) {
        Polynomial c(a.ring_->field, a.ring_->nvars);
        for (const VTerm& t : syz)
          if (t.pos == 0) c.add_term(t.c, t.m);
        if (!c.is_zero()) gens.push_back(c);
      }
      ag = Ideal(a.ring_, std::move(gens));
    }
    result = first ? ag : intersect(result, ag);
    first = false;
  }
  if (first) {
    // colon by the zero ideal is the unit ideal
    return Ideal(a.ring_, {Polynomial::constant(a.ring_->field, a.ring_->nvars, Scalar::one(a.ring_->field))});
  }
  return result;
}

QuotientRing::QuotientRing(std::shared_ptr<const PolyRing> ring, Ideal defining)
    : poly_(std::move(ring)), defining_(std::move(defining)) {
  if (!defining_.ring().same(*poly_)) fail(Errc::ring_mismatch, "defining ideal in wrong ring");
  if (!defining_.is_proper()) fail(Errc::usage_error, "defining ideal is not proper");
}

std::vector<Polynomial> QuotientRing::maximal_ideal_gens() const {
  std::vector<Polynomial> gens;
  for (int i = 0; i < poly_->nvars; ++i) gens.push_back(Polynomial::variable(poly_->field, poly_->nvars, i));
  return gens;
}

Ideal QuotientRing::maximal_ideal() const { return Ideal(poly_, maximal_ideal_gens()); }

std::string QuotientRing::key() const {
  std::vector<std::string> parts;
  parts.push_back(poly_->field.to_string());
  parts.push_back(join(poly_->vars, ","));
  std::vector<std::string> gb;
  for (const Polynomial& p : defining_.reduced_basis()) gb.push_back(p.to_string(poly_->vars));
  std::sort(gb.begin(), gb.end());
  parts.push_back(join(gb, ";"));
  return join(parts, "|");
}

RingPtr make_polynomial_ring(const FieldSpec& f, const std::vector<std::string>& vars) {
  return make_quotient_ring(f, vars, {});
}

RingPtr make_quotient_ring(const FieldSpec& f, const std::vector<std::string>& vars,
                           const std::vector<std::string>& ideal_gens) {
  auto pr = std::make_shared<const PolyRing>(PolyRing{f, static_cast<int>(vars.size()), vars});
  std::vector<Polynomial> gens;
  for (const std::string& s : ideal_gens) gens.push_back(parse_polynomial(f, vars, s));
  return std::make_shared<const QuotientRing>(pr, Ideal(pr, std::move(gens)));
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same(*b)) fail(Errc::ring_mismatch, "operands live over different rings");
}

}  // namespace matlis
