#include "starq/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace starq {

namespace {
// descending graded-lex
bool term_before(const std::pair<Monomial, Rational>& a, const std::pair<Monomial, Rational>& b) {
  return grlex_less(b.first, a.first);
}
}  // namespace

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  if (!sgn(c) == 0) p.terms_.emplace_back(Monomial::one(), std::move(c));
  return p;
}

Polynomial Polynomial::monomial(Monomial m, Rational c) {
  Polynomial p;
  if (!sgn(c) == 0) p.terms_.emplace_back(m, std::move(c));
  return p;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(m, Rational()), term_before);
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae && b != be) {
    if (a->first == b->first) {
      Rational c = a->second + b->second;
      if (!sgn(c) == 0) out.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    } else if (grlex_less(b->first, a->first)) {
      out.terms_.push_back(*a++);
    } else {
      out.terms_.push_back(*b++);
    }
  }
  out.terms_.insert(out.terms_.end(), a, ae);
  out.terms_.insert(out.terms_.end(), b, be);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<std::pair<Monomial, Rational>> raw;
  raw.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) raw.emplace_back(ma * mb, ca * cb);
  return from_terms(std::move(raw));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (sgn(c) == 0) return Polynomial();
  Polynomial p = *this;
  for (auto& [m, k] : p.terms_) k *= c;
  return p;
}

void Polynomial::add_scaled(const Polynomial& o, const Rational& c) {
  if (sgn(c) == 0 || o.is_zero()) return;
  *this = *this + o * c;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(m, Rational()), term_before);
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  } else {
    terms_.emplace(it, m, c);
  }
}

bool Polynomial::operator<(const Polynomial& o) const {
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  for (; a != ae && b != be; ++a, ++b) {
    if (!(a->first == b->first)) return grlex_less(a->first, b->first);
    if (a->second != b->second) return a->second < b->second;
  }
  return a == ae && b != be;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial out;
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    int k = m[var];
    if (k == 0) continue;
    out.terms_.emplace_back(m.quotient(Monomial::var(var)), c * k);
  }
  // grlex order survives subtracting the same variable from every term
  return out;
}

Polynomial Polynomial::derivative(const MultiIndex& I) const {
  if (I.is_one()) return *this;
  std::vector<std::pair<Monomial, Rational>> raw;
  raw.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    mpz_class f = derivative_factor(m, I);
    if (f == 0) continue;
    raw.emplace_back(m.quotient(I), c * Rational(f));
  }
  return from_terms(std::move(raw));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& args) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(c);
    for (int i = 0; i < kMaxVars; ++i)
      for (int k = 0; k < m[i]; ++k) t = t * args.at(static_cast<std::size_t>(i));
    out += t;
  }
  return out;
}

Polynomial Polynomial::from_terms(std::vector<std::pair<Monomial, Rational>> raw) {
  std::sort(raw.begin(), raw.end(), term_before);
  Polynomial out;
  out.terms_.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (sgn(out.terms_.back().second) == 0) out.terms_.pop_back();
    } else if (!sgn(t.second) == 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

std::string Polynomial::str(const VarSet& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool unit_coeff = (a == 1) && !m.is_one();
    if (!unit_coeff) os << rat_str(a);
    bool printed_factor = !unit_coeff;
    for (int i = 0; i < kMaxVars; ++i) {
      int k = m[i];
      if (k == 0) continue;
      if (printed_factor) os << "*";
      os << vars.name(i);
      if (k > 1) os << "^" << k;
      printed_factor = true;
    }
  }
  return os.str();
}

}  // namespace starq
