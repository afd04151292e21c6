#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "starq/hseries.hpp"
#include "starq/poisson.hpp"
#include "starq/star.hpp"

namespace starq {

// Word in the tensor algebra: sequence of generator indices, order
// significant; the empty word is the unit.
using Word = std::vector<std::uint8_t>;

// Element of the truncated tensor algebra: words with h-series scalar
// coefficients (one rational per h power up to the truncation order).
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(int trunc) : trunc_(trunc) {}

  int trunc() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, std::vector<Rational>>& terms() const { return terms_; }

  void add(const Word& w, int hpow, const Rational& c);
  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor& operator+=(const Tensor& o);

  // Multiply by h^k (dropping overflow past the truncation order).
  Tensor shifted(int k) const;

  // Concatenation product.
  Tensor operator*(const Tensor& o) const;

  bool operator==(const Tensor& o) const { return trunc_ == o.trunc_ && terms_ == o.terms_; }

  std::string str() const;

 private:
  int trunc_ = 0;
  std::map<Word, std::vector<Rational>> terms_;
};

// sigma(prod a_i) = 1/n! sum over permutations of the letters.
Tensor symmetrize(const Monomial& m, int trunc);

// Linear extension of sigma to polynomials (coefficients land at h^hpow).
Tensor symmetrize(const Polynomial& p, int trunc, int hpow = 0);

// Rewrites every word onto nondecreasing words by repeatedly replacing
// the leftmost descent x_j (x) x_i (j > i) with x_i (x) x_j + h sigma{x_j,
// x_i}; the result is congruent to the input modulo the relation ideal.
Tensor normal_order(const Tensor& t, const PoissonStructure& P);

// Normal-ordered representative of the diamond element
//   x_a (x) tau{x_b,x_c} - tau{x_b,x_c} (x) x_a + cycl(a,b,c).
Tensor diamond_tensor(const PoissonStructure& P, int a, int b, int c, int trunc);

// The same element computed through the star product on polynomials:
//   x_a * {x_b,x_c} - {x_b,x_c} * x_a + cycl(a,b,c).
HSeries diamond_residual(const StarProduct& S, int a, int b, int c);

struct TauVerdict {
  bool injective = true;
  int order = 0;  // first failing tau order when not injective
  int a = -1, b = -1, c = -1;
};

// Checks injectivity of tau_1..tau_n (n <= 4) via the diamond relations
// on generator triples, inductively in the order.
TauVerdict tau_injective_to(const PoissonStructure& P, int n);

}  // namespace starq
