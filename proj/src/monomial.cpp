#include "matlis/monomial.hpp"

#include <algorithm>

namespace matlis {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::div(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < e.size(); ++i) {
    r.e[i] -= o.e[i];
    if (r.e[i] < 0) fail(Errc::internal, "monomial division not exact");
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

int degrevlex_cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // equal degree: a > b iff the rightmost nonzero entry of a-b is negative
  for (size_t i = a.e.size(); i-- > 0;) {
    int d = a.e[i] - b.e[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

namespace {

void gen_degree(std::vector<Monomial>& out, Monomial& cur, int var, int remaining) {
  if (var == cur.nvars() - 1) {
    cur.e[var] = remaining;
    out.push_back(cur);
    cur.e[var] = 0;
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur.e[var] = k;
    gen_degree(out, cur, var + 1, remaining - k);
  }
  cur.e[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial(0));
    return out;
  }
  Monomial cur(nvars);
  gen_degree(out, cur, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) > 0; });
  return out;
}

std::vector<Monomial> divisors(const Monomial& m) {
  std::vector<Monomial> out;
  Monomial cur(m.nvars());
  size_t total = 1;
  for (int x : m.e) total *= static_cast<size_t>(x) + 1;
  out.reserve(total);
  out.push_back(cur);
  for (int i = 0; i < m.nvars(); ++i) {
    size_t sz = out.size();
    for (int k = 1; k <= m.e[i]; ++k)
      for (size_t j = 0; j < sz; ++j) {
        Monomial d = out[j];
        d.e[i] += k;
        out.push_back(std::move(d));
      }
  }
  return out;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace matlis
