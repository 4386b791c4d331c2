#include "matlis/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace matlis {

Polynomial Polynomial::constant(FieldSpec f, int nvars, const Scalar& c) {
  Polynomial p(f, nvars);
  if (!c.is_zero()) p.terms_.push_back({c, Monomial(nvars)});
  return p;
}

Polynomial Polynomial::monomial(FieldSpec f, const Scalar& c, const Monomial& m) {
  Polynomial p(f, m.nvars());
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::variable(FieldSpec f, int nvars, int i) {
  Monomial m(nvars);
  m.e[i] = 1;
  return monomial(f, Scalar::one(f), m);
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) fail(Errc::internal, "lead of zero polynomial");
  return terms_.front();
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.front().m.degree();
  for (const Term& t : terms_)
    if (t.m.degree() != d) return std::nullopt;
  return d;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.front().m.degree(); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(field_, nvars_);
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j >= o.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
    } else if (i >= terms_.size()) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      int cmp = degrevlex_cmp(terms_[i].m, o.terms_[j].m);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        Scalar c = terms_[i].c + o.terms_[j].c;
        if (!c.is_zero()) r.terms_.push_back({c, terms_[i].m});
        ++i;
        ++j;
      }
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (Term& t : r.terms_) t.c = -t.c;
  return r;
}

Polynomial Polynomial::scale(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(field_, nvars_);
  Polynomial r(*this);
  for (Term& t : r.terms_) t.c = t.c * c;
  return r;
}

Polynomial Polynomial::times_monomial(const Scalar& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(field_, nvars_);
  Polynomial r(field_, nvars_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.c * c, t.m * m});
  return r;  // multiplication by a monomial preserves the term order
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(field_, nvars_);
  for (const Term& t : o.terms_) r = r + times_monomial(t.c, t.m);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].c != o.terms_[i].c || terms_[i].m != o.terms_[i].m) return false;
  return true;
}

void Polynomial::add_term(const Scalar& c, const Monomial& m) { *this = *this + monomial(field_, c, m); }

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    std::string cs = t.c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (i == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (neg) cs = cs.substr(1);
    std::string ms = monomial_to_string(t.m, vars);
    if (ms == "1") {
      s += cs;
    } else if (cs == "1") {
      s += ms;
    } else {
      s += cs + "*" + ms;
    }
  }
  return s;
}

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char get() {
    skip_ws();
    return s[i++];
  }
};

long parse_int(Lexer& lx) {
  lx.skip_ws();
  size_t start = lx.i;
  while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) ++lx.i;
  if (lx.i == start) fail(Errc::parse_error, "expected integer at position " + std::to_string(start));
  return std::strtol(lx.s.substr(start, lx.i - start).c_str(), nullptr, 10);
}

std::string parse_ident(Lexer& lx) {
  lx.skip_ws();
  size_t start = lx.i;
  while (lx.i < lx.s.size() && (std::isalnum(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '_')) ++lx.i;
  return lx.s.substr(start, lx.i - start);
}

}  // namespace

Polynomial parse_polynomial(const FieldSpec& f, const std::vector<std::string>& vars, const std::string& text) {
  int nvars = static_cast<int>(vars.size());
  Lexer lx{text};
  Polynomial result(f, nvars);
  bool first = true;
  while (!lx.eof()) {
    Scalar sign = Scalar::one(f);
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.get();
      if (c == '-') sign = -sign;
    } else if (!first) {
      fail(Errc::parse_error, "expected '+' or '-' in polynomial: " + text);
    }
    first = false;
    // term: factors separated by '*'
    Scalar coeff = sign;
    Monomial mon(nvars);
    bool any = false;
    while (true) {
      char p = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(p))) {
        long num = parse_int(lx);
        if (lx.peek() == '/') {
          lx.get();
          long den = parse_int(lx);
          coeff = coeff * Scalar::from_fraction(f, num, den);
        } else {
          coeff = coeff * Scalar::from_long(f, num);
        }
        any = true;
      } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
        std::string name = parse_ident(lx);
        int idx = -1;
        for (int v = 0; v < nvars; ++v)
          if (vars[v] == name) {
            idx = v;
            break;
          }
        if (idx < 0) fail(Errc::parse_error, "unknown variable '" + name + "'");
        int exp = 1;
        if (lx.peek() == '^') {
          lx.get();
          exp = static_cast<int>(parse_int(lx));
          if (exp < 0) fail(Errc::parse_error, "negative exponent");
        }
        mon.e[idx] += exp;
        any = true;
      } else {
        break;
      }
      if (lx.peek() == '*') {
        lx.get();
        continue;
      }
      // implicit product only continues on another factor start
      char q = lx.peek();
      if (std::isalpha(static_cast<unsigned char>(q)) || q == '_') continue;
      break;
    }
    if (!any) fail(Errc::parse_error, "empty term in polynomial: " + text);
    result.add_term(coeff, mon);
  }
  return result;
}

}  // namespace matlis
