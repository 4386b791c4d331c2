#pragma once

#include <string>
#include <vector>

#include "matlis/error.hpp"

namespace matlis {

// Exponent vector with the standard grading (every variable degree 1).
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(int nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
  bool is_one() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial div(const Monomial& o) const;  // *this / o, requires divisibility
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

// Degree-reverse-lexicographic order, x1 > x2 > ... > xn.
// Returns <0, 0, >0 like a three-way comparison with a > b positive.
int degrevlex_cmp(const Monomial& a, const Monomial& b);

inline bool degrevlex_less(const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) < 0; }

// All monomials in n variables of total degree exactly d, in a fixed
// deterministic order (descending degrevlex).
std::vector<Monomial> monomials_of_degree(int nvars, int d);

// All divisors of m (componentwise smaller exponent vectors), deterministic order.
std::vector<Monomial> divisors(const Monomial& m);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

}  // namespace matlis
