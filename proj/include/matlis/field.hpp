#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "matlis/error.hpp"

namespace matlis {

enum class FieldKind { rationals, prime_field };

// Coefficient field: Q or F_p with p prime.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  long p = 0;  // characteristic; 0 for the rationals

  static FieldSpec rationals() { return FieldSpec{FieldKind::rationals, 0}; }
  static FieldSpec prime_field(long p);

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
  std::string to_string() const;
};

bool is_prime(long n);

// Exact field element in canonical form: residue in [0,p) for F_p,
// reduced fraction with positive denominator for Q.
class Scalar {
 public:
  Scalar() = default;  // zero over Q
  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_long(const FieldSpec& f, long v);
  static Scalar from_fraction(const FieldSpec& f, long num, long den);
  static Scalar parse(const FieldSpec& f, const std::string& s);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  FieldSpec field_ = FieldSpec::rationals();
  long fp_ = 0;    // prime-field residue
  mpq_class rat_;  // rational value; unused for prime fields
};

}  // namespace matlis
