#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matlis/field.hpp"
#include "matlis/monomial.hpp"

namespace matlis {

struct Term {
  Scalar c;
  Monomial m;
};

// Multivariate polynomial over the coefficient field. Terms are kept sorted
// strictly descending in degrevlex with no zero coefficients and no duplicate
// monomials; that form is canonical.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(FieldSpec f, int nvars) : field_(f), nvars_(nvars) {}

  static Polynomial zero(FieldSpec f, int nvars) { return Polynomial(f, nvars); }
  static Polynomial constant(FieldSpec f, int nvars, const Scalar& c);
  static Polynomial monomial(FieldSpec f, const Scalar& c, const Monomial& m);
  static Polynomial variable(FieldSpec f, int nvars, int i);

  const FieldSpec& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& lead() const;

  // Total degree of a homogeneous polynomial; nullopt if inhomogeneous or zero.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  int degree() const;  // max term degree, -1 for zero

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scale(const Scalar& c) const;
  Polynomial times_monomial(const Scalar& c, const Monomial& m) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& vars) const;

  // Appends a term, restoring canonical form.
  void add_term(const Scalar& c, const Monomial& m);

 private:
  FieldSpec field_ = FieldSpec::rationals();
  int nvars_ = 0;
  std::vector<Term> terms_;
};

// Parses conventional text form, e.g. "3*x^2*y - 1/2*z" or "x*y+y^2".
Polynomial parse_polynomial(const FieldSpec& f, const std::vector<std::string>& vars, const std::string& text);

}  // namespace matlis
