#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "starq/polynomial.hpp"

namespace starq {

inline constexpr int kMaxArity = 4;

// Key of one stored term of an n-cochain: the tuple (I_1,...,I_n) of
// nondecreasing multi-indices of d^{I_1} (x) ... (x) d^{I_n}.
struct IdxTuple {
  std::uint8_t n = 0;
  std::array<MultiIndex, kMaxArity> idx{};

  static IdxTuple of(std::initializer_list<MultiIndex> list) {
    IdxTuple t;
    t.n = static_cast<std::uint8_t>(list.size());
    int i = 0;
    for (const auto& I : list) t.idx[static_cast<std::size_t>(i++)] = I;
    return t;
  }

  int order() const {
    int s = 0;
    for (int i = 0; i < n; ++i) s += idx[static_cast<std::size_t>(i)].total;
    return s;
  }

  bool operator==(const IdxTuple& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
      if (idx[static_cast<std::size_t>(i)] != o.idx[static_cast<std::size_t>(i)]) return false;
    return true;
  }
};

struct IdxTupleLess {
  bool operator()(const IdxTuple& a, const IdxTuple& b) const {
    if (a.n != b.n) return a.n < b.n;
    for (int i = 0; i < a.n; ++i) {
      const auto& x = a.idx[static_cast<std::size_t>(i)];
      const auto& y = b.idx[static_cast<std::size_t>(i)];
      if (x != y) return seq_less(x, y);
    }
    return false;
  }
};

// Sparse n-differential operator sum phi_{I_1..I_n} d^{I_1}(x)...(x)d^{I_n},
// acting on n polynomials. Stored terms never have zero coefficients.
class Cochain {
 public:
  Cochain() = default;
  Cochain(int arity, int nvars);

  static Cochain multiplication(int nvars);  // mu = d[] (x) d[]

  int arity() const { return arity_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;  // max total order of stored tuples; -1 when zero
  std::size_t term_count() const { return terms_.size(); }

  const std::map<IdxTuple, Polynomial, IdxTupleLess>& terms() const { return terms_; }

  void add_term(const IdxTuple& key, const Polynomial& coeff);

  Polynomial apply(const std::vector<Polynomial>& args) const;

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain operator-() const;
  Cochain operator*(const Rational& c) const;
  Cochain& operator+=(const Cochain& o);

  bool operator==(const Cochain& o) const;
  bool operator!=(const Cochain& o) const { return !(*this == o); }

  // Slot permutations.
  Cochain transpose() const;  // arity 2: (p,q) -> (q,p)
  Cochain flip() const;       // arity 3: (p,q,r) -> (r,q,p)

  bool is_symmetric() const { return *this == transpose(); }
  bool is_antisymmetric() const { return *this == -transpose(); }
  bool is_flip_symmetric() const { return *this == flip(); }
  bool is_flip_antisymmetric() const { return *this == -flip(); }

  // Homogeneous part of the given differential-operator order.
  Cochain order_part(int k) const;

  std::string str(const VarSet& vars) const;

 private:
  int arity_ = 0;
  int nvars_ = 0;
  std::map<IdxTuple, Polynomial, IdxTupleLess> terms_;
};

// Hochschild coboundary, computed term by term via the Leibniz splitting
// of each slot; exact match with the pointwise defining formula.
Cochain hochschild_coboundary(const Cochain& c);

// The pointwise defining formula
//   dC(p_1..p_{n+1}) = p_1 C(p_2..) + sum_k (-1)^k C(.., p_k p_{k+1}, ..)
//                      + (-1)^{n+1} C(..p_n) p_{n+1}
// evaluated directly; kept as the independent cross-check of the
// splitting-based implementation.
Polynomial coboundary_apply_pointwise(const Cochain& c, const std::vector<Polynomial>& args);

// Second, evaluation-backed coboundary implementation (reconstructed as an
// operator from the pointwise formula).
Cochain hochschild_coboundary_pointwise(const Cochain& c);

Cochain gerstenhaber_bracket(const Cochain& a, const Cochain& b);

// J psi(p,q,r) = psi(p,q,r) + psi(q,r,p) + psi(r,p,q); arity 3 only.
Cochain jacobi_map(const Cochain& c);

// Arity 2: (symmetric, antisymmetric); arity 3: (flip symmetric, flip
// antisymmetric). part1 + part2 == input.
std::pair<Cochain, Cochain> decompose(const Cochain& c);

// Tensor product (concatenation of slots); used by the graded-derivation
// cross-checks.
Cochain tensor_product(const Cochain& a, const Cochain& b);

// Reconstructs the differential operator of order <= max_order agreeing
// with the multilinear map f on all monomial tuples of total degree
// <= max_order. If f is an operator of order <= max_order this recovers it
// exactly; otherwise the result is its order-truncation.
Cochain cochain_from_evaluator(const std::function<Polynomial(const std::vector<Polynomial>&)>& f,
                               int arity, int nvars, int max_order);

}  // namespace starq
