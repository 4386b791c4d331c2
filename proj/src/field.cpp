#include "matlis/field.hpp"

#include <cstdlib>

namespace matlis {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(long p) {
  if (!is_prime(p)) fail(Errc::usage_error, "characteristic must be prime, got " + std::to_string(p));
  if (p >= (1L << 31)) fail(Errc::usage_error, "characteristic too large");
  return FieldSpec{FieldKind::prime_field, p};
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::rationals ? std::string("q") : "p:" + std::to_string(p);
}

namespace {

long mod_norm(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

// Inverse mod p by extended Euclid; a in [1, p).
long mod_inv(long a, long p) {
  long t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    long q = r / newr;
    long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) fail(Errc::internal, "non-invertible residue");
  return mod_norm(t, p);
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return from_long(f, 1); }

Scalar Scalar::from_long(const FieldSpec& f, long v) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::prime_field) {
    s.fp_ = mod_norm(v, f.p);
  } else {
    s.rat_ = v;
  }
  return s;
}

Scalar Scalar::from_fraction(const FieldSpec& f, long num, long den) {
  if (den == 0) fail(Errc::division_by_zero, "zero denominator");
  if (f.kind == FieldKind::prime_field) {
    Scalar d = from_long(f, den);
    if (d.is_zero()) fail(Errc::division_by_zero, "denominator vanishes in F_" + std::to_string(f.p));
    return from_long(f, num) / d;
  }
  Scalar s;
  s.field_ = f;
  s.rat_ = mpq_class(num, den);
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& str) {
  auto slash = str.find('/');
  if (f.kind == FieldKind::rationals) {
    Scalar s;
    s.field_ = f;
    s.rat_ = mpq_class(str);
    s.rat_.canonicalize();
    return s;
  }
  if (slash == std::string::npos) return from_long(f, std::strtol(str.c_str(), nullptr, 10));
  long num = std::strtol(str.substr(0, slash).c_str(), nullptr, 10);
  long den = std::strtol(str.substr(slash + 1).c_str(), nullptr, 10);
  return from_fraction(f, num, den);
}

bool Scalar::is_zero() const {
  return field_.kind == FieldKind::prime_field ? fp_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldKind::prime_field ? fp_ == 1 : rat_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) fail(Errc::field_mismatch, "mixed-field operands");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.field_ = field_;
  if (field_.kind == FieldKind::prime_field)
    r.fp_ = mod_norm(fp_ + o.fp_, field_.p);
  else
    r.rat_ = rat_ + o.rat_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.field_ = field_;
  if (field_.kind == FieldKind::prime_field)
    r.fp_ = mod_norm(fp_ - o.fp_, field_.p);
  else
    r.rat_ = rat_ - o.rat_;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.field_ = field_;
  if (field_.kind == FieldKind::prime_field)
    r.fp_ = mod_norm(fp_ * o.fp_, field_.p);
  else
    r.rat_ = rat_ * o.rat_;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar r;
  r.field_ = field_;
  if (field_.kind == FieldKind::prime_field)
    r.fp_ = fp_ == 0 ? 0 : field_.p - fp_;
  else
    r.rat_ = -rat_;
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) fail(Errc::division_by_zero, "division by zero");
  Scalar r;
  r.field_ = field_;
  if (field_.kind == FieldKind::prime_field)
    r.fp_ = mod_inv(fp_, field_.p);
  else
    r.rat_ = 1 / rat_;
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.kind == FieldKind::prime_field ? fp_ == o.fp_ : rat_ == o.rat_;
}

std::string Scalar::to_string() const {
  if (field_.kind == FieldKind::prime_field) return std::to_string(fp_);
  return rat_.get_str();
}

}  // namespace matlis
