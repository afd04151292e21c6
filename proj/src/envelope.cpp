#include "starq/envelope.hpp"

#include <algorithm>
#include <sstream>

namespace starq {

void Tensor::add(const Word& w, int hpow, const Rational& c) {
  if (hpow > trunc_ || sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, std::vector<Rational>(static_cast<std::size_t>(trunc_ + 1)));
  it->second[static_cast<std::size_t>(hpow)] += c;
  for (const auto& v : it->second)
    if (sgn(v) != 0) return;
  terms_.erase(it);
}

Tensor Tensor::operator+(const Tensor& o) const {
  Tensor out = *this;
  out += o;
  return out;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (trunc_ != o.trunc_) throw std::invalid_argument("truncation order mismatch");
  for (const auto& [w, cs] : o.terms_)
    for (int k = 0; k <= trunc_; ++k) add(w, k, cs[static_cast<std::size_t>(k)]);
  return *this;
}

Tensor Tensor::operator-(const Tensor& o) const {
  if (trunc_ != o.trunc_) throw std::invalid_argument("truncation order mismatch");
  Tensor out = *this;
  for (const auto& [w, cs] : o.terms_)
    for (int k = 0; k <= trunc_; ++k) out.add(w, k, -cs[static_cast<std::size_t>(k)]);
  return out;
}

Tensor Tensor::shifted(int k) const {
  Tensor out(trunc_);
  for (const auto& [w, cs] : terms_)
    for (int i = 0; i + k <= trunc_; ++i) out.add(w, i + k, cs[static_cast<std::size_t>(i)]);
  return out;
}

Tensor Tensor::operator*(const Tensor& o) const {
  if (trunc_ != o.trunc_) throw std::invalid_argument("truncation order mismatch");
  Tensor out(trunc_);
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      for (int i = 0; i <= trunc_; ++i) {
        if (sgn(ca[static_cast<std::size_t>(i)]) == 0) continue;
        for (int j = 0; i + j <= trunc_; ++j)
          out.add(w, i + j, ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(j)]);
      }
    }
  return out;
}

std::string Tensor::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, cs] : terms_)
    for (int k = 0; k <= trunc_; ++k) {
      if (sgn(cs[static_cast<std::size_t>(k)]) == 0) continue;
      if (!first) os << "\n";
      first = false;
      os << rat_str(cs[static_cast<std::size_t>(k)]) << " * h^" << k << " * (";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        os << static_cast<int>(w[i]) + 1;
      }
      os << ")";
    }
  return os.str();
}

Tensor symmetrize(const Monomial& m, int trunc) {
  Tensor out(trunc);
  std::vector<int> letters = m.indices();
  if (letters.empty()) {
    out.add({}, 0, 1);
    return out;
  }
  mpz_class repeats = 1;
  for (int v = 0; v < kMaxVars; ++v)
    for (int k = 2; k <= m[v]; ++k) repeats *= k;
  mpz_class total = 1;
  for (std::size_t k = 2; k <= letters.size(); ++k) total *= k;
  Rational coeff = Rational(repeats) / Rational(total);
  std::sort(letters.begin(), letters.end());
  do {
    Word w(letters.begin(), letters.end());
    out.add(w, 0, coeff);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

Tensor symmetrize(const Polynomial& p, int trunc, int hpow) {
  Tensor out(trunc);
  for (const auto& [m, c] : p.terms()) {
    Tensor s = symmetrize(m, trunc);
    for (const auto& [w, cs] : s.terms()) out.add(w, hpow, cs[0] * c);
  }
  return out;
}

Tensor normal_order(const Tensor& t, const PoissonStructure& P) {
  Tensor done(t.trunc());
  Tensor work = t;
  while (!work.is_zero()) {
    Tensor next(t.trunc());
    for (const auto& [w, cs] : work.terms()) {
      std::size_t k = 0;
      while (k + 1 < w.size() && w[k] <= w[k + 1]) ++k;
      if (w.size() < 2 || k + 1 == w.size()) {
        for (int i = 0; i <= t.trunc(); ++i) done.add(w, i, cs[static_cast<std::size_t>(i)]);
        continue;
      }
      // leftmost descent at position k: x_j (x) x_i -> x_i (x) x_j
      // + h sigma{x_j, x_i}
      Word swapped = w;
      std::swap(swapped[k], swapped[k + 1]);
      for (int i = 0; i <= t.trunc(); ++i) next.add(swapped, i, cs[static_cast<std::size_t>(i)]);
      const Polynomial& br = P.X(w[k], w[k + 1]);  // {x_j, x_i} with j > i
      if (!br.is_zero()) {
        Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        Word suffix(w.begin() + static_cast<std::ptrdiff_t>(k) + 2, w.end());
        Tensor mid = symmetrize(br, t.trunc());
        for (const auto& [mw, mcs] : mid.terms()) {
          Word full = prefix;
          full.insert(full.end(), mw.begin(), mw.end());
          full.insert(full.end(), suffix.begin(), suffix.end());
          for (int i = 0; i + 1 <= t.trunc(); ++i)
            if (sgn(cs[static_cast<std::size_t>(i)]) != 0)
              next.add(full, i + 1, cs[static_cast<std::size_t>(i)] * mcs[0]);
        }
      }
    }
    work = std::move(next);
  }
  return done;
}

Tensor diamond_tensor(const PoissonStructure& P, int a, int b, int c, int trunc) {
  Tensor acc(trunc);
  const std::array<std::array<int, 3>, 3> cyc = {{{a, b, c}, {b, c, a}, {c, a, b}}};
  for (const auto& t : cyc) {
    Tensor xa(trunc);
    xa.add({static_cast<std::uint8_t>(t[0])}, 0, 1);
    Tensor s = symmetrize(P.X(t[1], t[2]), trunc);
    acc += xa * s - s * xa;
  }
  return normal_order(acc, P);
}

HSeries diamond_residual(const StarProduct& S, int a, int b, int c) {
  const PoissonStructure& P = S.base();
  HSeries out(S.order());
  const std::array<std::array<int, 3>, 3> cyc = {{{a, b, c}, {b, c, a}, {c, a, b}}};
  for (const auto& t : cyc) {
    Polynomial xa = Polynomial::variable(t[0]);
    const Polynomial& br = P.X(t[1], t[2]);
    out += S.apply(xa, br) - S.apply(br, xa);
  }
  return out;
}

TauVerdict tau_injective_to(const PoissonStructure& P, int n) {
  if (n < 0 || n > 4)
    throw std::invalid_argument("tau injectivity is checkable for orders 0..4 only");
  TauVerdict v;
  if (n <= 1 || P.nvars() < 3) return v;  // tau_0, tau_1 always injective
  StarProduct S = star_product(P, 3);
  struct Entry {
    int a, b, c;
    HSeries d;
  };
  std::vector<Entry> residuals;
  for (int a = 0; a < P.nvars(); ++a)
    for (int b = a + 1; b < P.nvars(); ++b)
      for (int c = b + 1; c < P.nvars(); ++c)
        residuals.push_back({a, b, c, diamond_residual(S, a, b, c)});
  // order m fails when some h^{m-1} coefficient of a diamond residual is
  // nonzero; scan orders inductively
  for (int m = 2; m <= n; ++m)
    for (const auto& e : residuals)
      if (!e.d[m - 1].is_zero()) {
        v.injective = false;
        v.order = m;
        v.a = e.a;
        v.b = e.b;
        v.c = e.c;
        return v;
      }
  return v;
}

}  // namespace starq
