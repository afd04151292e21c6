#pragma once

#include <string>
#include <utility>
#include <vector>

#include "starq/monomial.hpp"
#include "starq/rational.hpp"
#include "starq/varset.hpp"

namespace starq {

// Exact multivariate polynomial over the rationals. Terms are kept in
// graded-lex descending order with no zero coefficients, so equality is
// representation equality and printing is canonical.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(Rational c);
  static Polynomial monomial(Monomial m, Rational c = 1);
  static Polynomial variable(int i) { return monomial(Monomial::var(i)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  int degree() const { return terms_.empty() ? -1 : terms_.front().first.total; }
  std::size_t term_count() const { return terms_.size(); }

  const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }

  // Coefficient of m (zero if absent).
  Rational coeff(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Rational& c) { return *this = *this * c; }

  // this += c * o, the workhorse of every cochain expansion.
  void add_scaled(const Polynomial& o, const Rational& c);
  void add_term(const Monomial& m, const Rational& c);

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  bool operator<(const Polynomial& o) const;  // arbitrary total order (for map keys)

  Polynomial derivative(int var) const;
  Polynomial derivative(const MultiIndex& I) const;

  // Substitute polynomials for the variables (args indexed by variable).
  Polynomial substitute(const std::vector<Polynomial>& args) const;

  std::string str(const VarSet& vars) const;

  // Assembles a polynomial from unsorted (monomial, coeff) pairs.
  static Polynomial from_terms(std::vector<std::pair<Monomial, Rational>> raw);

 private:
  std::vector<std::pair<Monomial, Rational>> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace starq
