#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "starq/rational.hpp"

namespace starq {

// Hard cap on the number of variables of a declared variable set. All the
// worked examples live in at most 4 variables; 16 leaves room for larger
// hand-built structures while keeping exponent vectors in a flat array.
inline constexpr int kMaxVars = 16;

// A multiset of variable indices stored as an exponent vector. Doubles as
//   - Monomial: exponents of x_0^{e_0} x_1^{e_1} ...
//   - MultiIndex: multiplicities of a nondecreasing derivative index d^I
// The two views share all structure (x_I has the exponents of I), so they
// share the representation.
struct ExpVec {
  std::array<std::uint8_t, kMaxVars> e{};
  int total = 0;  // sum of entries, cached

  static ExpVec one() { return ExpVec{}; }

  static ExpVec var(int i, int k = 1) {
    check_var(i);
    ExpVec m;
    m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k);
    m.total = k;
    return m;
  }

  // From a sequence of variable indices (need not be sorted).
  static ExpVec of_indices(const std::vector<int>& idx) {
    ExpVec m;
    for (int i : idx) m = m.times_var(i);
    return m;
  }

  static void check_var(int i) {
    if (i < 0 || i >= kMaxVars) throw std::invalid_argument("variable index out of range");
  }

  bool is_one() const { return total == 0; }
  int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

  ExpVec times_var(int i, int k = 1) const {
    check_var(i);
    ExpVec m = *this;
    int v = m.e[static_cast<std::size_t>(i)] + k;
    if (v > 255) throw std::overflow_error("exponent overflow");
    m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
    m.total += k;
    return m;
  }

  ExpVec operator*(const ExpVec& o) const {
    ExpVec m = *this;
    for (int i = 0; i < kMaxVars; ++i) {
      int v = m.e[static_cast<std::size_t>(i)] + o.e[static_cast<std::size_t>(i)];
      if (v > 255) throw std::overflow_error("exponent overflow");
      m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
    }
    m.total += o.total;
    return m;
  }

  // Componentwise <=, i.e. this divides o (as monomials) / this is a
  // submultiset of o (as multi-indices).
  bool divides(const ExpVec& o) const {
    if (total > o.total) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[static_cast<std::size_t>(i)] > o.e[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  // Componentwise difference; requires o.divides(*this).
  ExpVec quotient(const ExpVec& o) const {
    ExpVec m = *this;
    for (int i = 0; i < kMaxVars; ++i)
      m.e[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(m.e[static_cast<std::size_t>(i)] - o.e[static_cast<std::size_t>(i)]);
    m.total -= o.total;
    return m;
  }

  // Smallest variable index with nonzero exponent, or -1 for the unit.
  int min_var() const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
  }

  int max_var() const {
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (e[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
  }

  // The indices as a nondecreasing sequence, e.g. {1,1,2}.
  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(total));
    for (int i = 0; i < kMaxVars; ++i)
      for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) out.push_back(i);
    return out;
  }

  bool operator==(const ExpVec& o) const { return total == o.total && e == o.e; }
  bool operator!=(const ExpVec& o) const { return !(*this == o); }
};

using Monomial = ExpVec;
using MultiIndex = ExpVec;

// Graded-lexicographic order with variables in declared order; ties in
// total degree break on the first differing exponent, larger first being
// "greater". Canonical polynomial iteration is descending in this order.
inline bool grlex_less(const ExpVec& a, const ExpVec& b) {
  if (a.total != b.total) return a.total < b.total;
  for (int i = 0; i < kMaxVars; ++i) {
    auto ai = a.e[static_cast<std::size_t>(i)], bi = b.e[static_cast<std::size_t>(i)];
    if (ai != bi) return ai < bi;
  }
  return false;
}

// Lexicographic order on the index sequences, prefixes first; used for
// sorting multi-index tuples in printed cochains and as map order.
inline bool seq_less(const ExpVec& a, const ExpVec& b) {
  int ia = 0, ib = 0;  // current variable
  int ca = 0, cb = 0;  // copies consumed within the current variable
  for (;;) {
    while (ia < kMaxVars && ca == a.e[static_cast<std::size_t>(ia)]) { ++ia; ca = 0; }
    while (ib < kMaxVars && cb == b.e[static_cast<std::size_t>(ib)]) { ++ib; cb = 0; }
    if (ia == kMaxVars) return ib != kMaxVars;
    if (ib == kMaxVars) return false;
    if (ia != ib) return ia < ib;
    ++ca;
    ++cb;
  }
}

// I! = d^I(x_I): product of factorials of the multiplicities.
inline Rational multiindex_factorial(const MultiIndex& I) {
  mpz_class f = 1;
  for (int i = 0; i < kMaxVars; ++i)
    for (int k = 2; k <= I.e[static_cast<std::size_t>(i)]; ++k) f *= k;
  return Rational(f);
}

// Falling-factorial coefficient of d^J acting on x^m: prod_v m_v (m_v-1)
// ... (m_v - j_v + 1). Zero when J does not divide m.
inline mpz_class derivative_factor(const Monomial& m, const MultiIndex& J) {
  mpz_class f = 1;
  for (int i = 0; i < kMaxVars; ++i) {
    int mv = m.e[static_cast<std::size_t>(i)], jv = J.e[static_cast<std::size_t>(i)];
    if (jv > mv) return 0;
    for (int k = 0; k < jv; ++k) f *= (mv - k);
  }
  return f;
}

// All splittings I = I' + I'' as multisets, with the Leibniz multiplicity
// prod_v C(m_v, a_v); emits (I', I'', multiplicity).
void for_each_two_split(const MultiIndex& I,
                        const std::function<void(const MultiIndex&, const MultiIndex&, const mpz_class&)>& fn);

// All ordered splittings of I into `parts` multisets with multinomial
// multiplicity; emits (parts list, multiplicity).
void for_each_split(const MultiIndex& I, int parts,
                    const std::function<void(const std::vector<MultiIndex>&, const mpz_class&)>& fn);

// All submultisets of I (including empty and I itself).
std::vector<MultiIndex> submultisets(const MultiIndex& I);

// All multi-indices of the given order over variables 0..nvars-1.
std::vector<MultiIndex> multiindices_of_order(int nvars, int order);

std::string multiindex_str(const MultiIndex& I);

}  // namespace starq
