#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "matlis/groebner.hpp"
#include "matlis/polynomial.hpp"

namespace matlis {

// Ambient polynomial ring S = k[x_1..x_n], degrevlex, standard grading.
struct PolyRing {
  FieldSpec field;
  int nvars = 0;
  std::vector<std::string> vars;

  bool same(const PolyRing& o) const { return field == o.field && vars == o.vars; }
};

// Homogeneous ideal of S with a write-once reduced Groebner basis cache.
class Ideal {
 public:
  Ideal() = default;
  Ideal(std::shared_ptr<const PolyRing> ring, std::vector<Polynomial> gens);

  const PolyRing& ring() const { return *ring_; }
  const std::shared_ptr<const PolyRing>& ring_ptr() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  const GBasis& groebner() const;
  std::vector<Polynomial> reduced_basis() const;  // reduced GB as polynomials
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool is_zero_ideal() const;
  bool is_proper() const;
  bool is_monomial() const;  // every generator a single term

  static Ideal sum(const Ideal& a, const Ideal& b);
  static Ideal product(const Ideal& a, const Ideal& b);
  static Ideal power(const Ideal& a, int s);
  static Ideal colon(const Ideal& a, const Ideal& b);       // (a : b)
  static Ideal intersect(const Ideal& a, const Ideal& b);

 private:
  struct Cache {
    std::once_flag once;
    std::shared_ptr<const GBasis> gb;
  };

  void check_compatible(const Ideal& o) const;

  std::shared_ptr<const PolyRing> ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// The graded-local ring R = S/I with maximal ideal (x_1..x_n).
class QuotientRing {
 public:
  QuotientRing(std::shared_ptr<const PolyRing> ring, Ideal defining);

  const PolyRing& poly() const { return *poly_; }
  const std::shared_ptr<const PolyRing>& poly_ptr() const { return poly_; }
  const Ideal& defining_ideal() const { return defining_; }
  const FieldSpec& field() const { return poly_->field; }
  int nvars() const { return poly_->nvars; }
  const std::vector<std::string>& vars() const { return poly_->vars; }

  Polynomial nf(const Polynomial& f) const { return defining_.normal_form(f); }
  std::vector<Polynomial> maximal_ideal_gens() const;
  Ideal maximal_ideal() const;
  bool is_polynomial_ring() const { return defining_.is_zero_ideal(); }
  bool is_monomial_quotient() const { return defining_.is_monomial(); }

  std::string key() const;  // structural identity
  bool same(const QuotientRing& o) const { return key() == o.key(); }

 private:
  std::shared_ptr<const PolyRing> poly_;
  Ideal defining_;
};

using RingPtr = std::shared_ptr<const QuotientRing>;

RingPtr make_polynomial_ring(const FieldSpec& f, const std::vector<std::string>& vars);
RingPtr make_quotient_ring(const FieldSpec& f, const std::vector<std::string>& vars,
                           const std::vector<std::string>& ideal_gens);
void check_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace matlis
