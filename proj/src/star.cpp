#include "starq/star.hpp"

#include <algorithm>

namespace starq {

namespace {

MultiIndex mi1(int i) { return MultiIndex::var(i); }
MultiIndex mi2(int i, int j) { return MultiIndex::var(i).times_var(j); }

// Nonzero entries (i,j), both orders, of the Poisson matrix.
std::vector<std::pair<int, int>> nonzero_pairs(const PoissonStructure& P) {
  std::vector<std::pair<int, int>> nz;
  for (int i = 0; i < P.nvars(); ++i)
    for (int j = 0; j < P.nvars(); ++j)
      if (!P.X(i, j).is_zero()) nz.emplace_back(i, j);
  return nz;
}

}  // namespace

StarProduct::StarProduct(PoissonStructure base, std::vector<Cochain> pis)
    : base_(std::move(base)), pis_(std::move(pis)) {
  if (pis_.empty()) throw std::invalid_argument("star product needs at least mu");
  if (pis_[0] != Cochain::multiplication(base_.nvars()))
    throw std::invalid_argument("pi_0 must be the multiplication cochain");
  if (pis_.size() > 1 && pis_[1] != build_pi1(base_))
    throw std::invalid_argument("pi_1 must be half the Poisson bracket");
  for (std::size_t k = 2; k < pis_.size(); ++k) {
    bool ok = (k % 2 == 0) ? pis_[k].is_symmetric() : pis_[k].is_antisymmetric();
    if (!ok) throw std::invalid_argument("pi_k parity violates the quantization alternation");
  }
}

HSeries StarProduct::apply(const Polynomial& p, const Polynomial& q) const {
  HSeries out(order());
  for (int k = 0; k <= order(); ++k) out[k] = pis_[static_cast<std::size_t>(k)].apply({p, q});
  return out;
}

HSeries StarProduct::apply(const HSeries& p, const HSeries& q) const {
  if (p.order() != order() || q.order() != order())
    throw std::invalid_argument("series order mismatch");
  HSeries out(order());
  for (int i = 0; i <= order(); ++i)
    for (int a = 0; i + a <= order(); ++a) {
      if (p[a].is_zero()) continue;
      for (int b = 0; i + a + b <= order(); ++b) {
        if (q[b].is_zero()) continue;
        out[i + a + b] += pis_[static_cast<std::size_t>(i)].apply({p[a], q[b]});
      }
    }
  return out;
}

Cochain build_pi1(const PoissonStructure& P) {
  Cochain c(2, P.nvars());
  Rational half(1, 2);
  for (const auto& [i, j] : nonzero_pairs(P))
    c.add_term(IdxTuple::of({mi1(i), mi1(j)}), P.X(i, j) * half);
  return c;
}

Cochain build_pi2(const PoissonStructure& P) {
  Cochain c(2, P.nvars());
  auto nz = nonzero_pairs(P);
  Rational q12(1, 12), q8(1, 8);
  for (const auto& [i, j] : nz) {
    for (int l = 0; l < P.nvars(); ++l) {
      Polynomial d = P.X(i, j).derivative(l);
      if (d.is_zero()) continue;
      for (int k = 0; k < P.nvars(); ++k) {
        if (P.X(l, k).is_zero()) continue;
        Polynomial coeff = d * P.X(l, k) * q12;
        c.add_term(IdxTuple::of({mi1(i), mi2(j, k)}), coeff);
        c.add_term(IdxTuple::of({mi2(j, k), mi1(i)}), coeff);
      }
    }
  }
  for (const auto& [i, j] : nz)
    for (const auto& [k, l] : nz)
      c.add_term(IdxTuple::of({mi2(i, k), mi2(j, l)}), P.X(i, j) * P.X(k, l) * q8);
  return c;
}

Cochain build_pi3(const PoissonStructure& P) {
  Cochain c(2, P.nvars());
  auto nz = nonzero_pairs(P);
  int n = P.nvars();
  Rational q48(1, 48), q24(1, 24);

  // 2 X_ij X_kl^i X_mn^{jk} (d^n (x) d^{lm} - d^{lm} (x) d^n)
  for (const auto& [i, j] : nz)
    for (const auto& [k, l] : nz) {
      Polynomial dkl = P.X(k, l).derivative(i);
      if (dkl.is_zero()) continue;
      for (const auto& [m, nn] : nz) {
        Polynomial dmn = P.X(m, nn).derivative(mi2(j, k));
        if (dmn.is_zero()) continue;
        Polynomial coeff = P.X(i, j) * dkl * dmn * q24;
        c.add_term(IdxTuple::of({mi1(nn), mi2(l, m)}), coeff);
        c.add_term(IdxTuple::of({mi2(l, m), mi1(nn)}), -coeff);
      }
    }

  // X_ij X_kl X_mn d^{ikm} (x) d^{jln}
  for (const auto& [i, j] : nz)
    for (const auto& [k, l] : nz) {
      Polynomial pij_kl = P.X(i, j) * P.X(k, l);
      for (const auto& [m, nn] : nz)
        c.add_term(IdxTuple::of({mi2(i, k).times_var(m), mi2(j, l).times_var(nn)}),
                   pij_kl * P.X(m, nn) * q48);
    }

  // X_lm^k X_jn^l X_ki (d^{mn} (x) d^{ij} - d^{ij} (x) d^{mn})
  for (const auto& [l, m] : nz)
    for (int k = 0; k < n; ++k) {
      Polynomial dlm = P.X(l, m).derivative(k);
      if (dlm.is_zero()) continue;
      for (const auto& [j, nn] : nz) {
        Polynomial djn = P.X(j, nn).derivative(l);
        if (djn.is_zero()) continue;
        for (int i = 0; i < n; ++i) {
          if (P.X(k, i).is_zero()) continue;
          Polynomial coeff = dlm * djn * P.X(k, i) * q48;
          c.add_term(IdxTuple::of({mi2(m, nn), mi2(i, j)}), coeff);
          c.add_term(IdxTuple::of({mi2(i, j), mi2(m, nn)}), -coeff);
        }
      }
    }

  // X_mn^{kl} X_lj X_ki (d^m (x) d^{nij} - d^{nij} (x) d^m)
  for (const auto& [m, nn] : nz)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        Polynomial dmn = P.X(m, nn).derivative(mi2(k, l));
        if (dmn.is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          if (P.X(l, j).is_zero()) continue;
          for (int i = 0; i < n; ++i) {
            if (P.X(k, i).is_zero()) continue;
            Polynomial coeff = dmn * P.X(l, j) * P.X(k, i) * q48;
            c.add_term(IdxTuple::of({mi1(m), mi2(nn, i).times_var(j)}), coeff);
            c.add_term(IdxTuple::of({mi2(nn, i).times_var(j), mi1(m)}), -coeff);
          }
        }
      }

  // 2 X_ij^k X_kl X_mn (d^{jlm} (x) d^{in} - d^{in} (x) d^{jlm})
  for (const auto& [i, j] : nz)
    for (int k = 0; k < n; ++k) {
      Polynomial dij = P.X(i, j).derivative(k);
      if (dij.is_zero()) continue;
      for (int l = 0; l < n; ++l) {
        if (P.X(k, l).is_zero()) continue;
        Polynomial c2 = dij * P.X(k, l);
        for (const auto& [m, nn] : nz) {
          Polynomial coeff = c2 * P.X(m, nn) * q24;
          c.add_term(IdxTuple::of({mi2(j, l).times_var(m), mi2(i, nn)}), coeff);
          c.add_term(IdxTuple::of({mi2(i, nn), mi2(j, l).times_var(m)}), -coeff);
        }
      }
    }

  return c;
}

SkewPolyMatrix correction_Z(const PoissonStructure& P) {
  int n = P.nvars();
  auto nz = nonzero_pairs(P);
  SkewPolyMatrix Z(n);
  Rational half(1, 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Polynomial z;
      // 1/2 X_ab^{ik} X_ij^l X_kl^j
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          Polynomial dab = P.X(a, b).derivative(mi2(i, k));
          if (dab.is_zero()) continue;
          for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
              Polynomial d1 = P.X(i, j).derivative(l);
              if (d1.is_zero()) continue;
              Polynomial d2 = P.X(k, l).derivative(j);
              if (d2.is_zero()) continue;
              z += dab * d1 * d2 * half;
            }
        }
      // - X_ai^{jk} X_bj^{il} X_kl
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            Polynomial d1 = P.X(a, i).derivative(mi2(j, k));
            if (d1.is_zero()) continue;
            for (int l = 0; l < n; ++l) {
              if (P.X(k, l).is_zero()) continue;
              Polynomial d2 = P.X(b, j).derivative(mi2(i, l));
              if (d2.is_zero()) continue;
              z -= d1 * d2 * P.X(k, l);
            }
          }
      Z.set(a, b, z);
    }
  return Z;
}

Cochain build_phi3_correction(const PoissonStructure& P) {
  SkewPolyMatrix Z = correction_Z(P);
  Cochain c(2, P.nvars());
  Rational q48(1, 48);
  for (int m = 0; m < P.nvars(); ++m)
    for (int n = 0; n < P.nvars(); ++n)
      c.add_term(IdxTuple::of({mi1(m), mi1(n)}), Z.at(m, n) * q48);
  return c;
}

StarProduct star_product(const PoissonStructure& P, int order, bool corrected) {
  if (order < 0 || order > 3) throw std::invalid_argument("star_product supports orders 0..3");
  std::vector<Cochain> pis;
  pis.push_back(Cochain::multiplication(P.nvars()));
  if (order >= 1) pis.push_back(build_pi1(P));
  if (order >= 2) pis.push_back(build_pi2(P));
  if (order >= 3) {
    Cochain pi3 = build_pi3(P);
    if (corrected) pi3 += build_phi3_correction(P);
    pis.push_back(pi3);
  }
  return StarProduct(P, std::move(pis));
}

HSeries associator_residual(const StarProduct& S, const Polynomial& p, const Polynomial& q,
                            const Polynomial& r) {
  int n = S.order();
  HSeries hp = HSeries::of(p, n), hq = HSeries::of(q, n), hr = HSeries::of(r, n);
  return S.apply(S.apply(hp, hq), hr) - S.apply(hp, S.apply(hq, hr));
}

Polynomial obstruction_component(const PoissonStructure& P, int a, int b, int c) {
  auto nz = nonzero_pairs(P);
  int n = P.nvars();
  const std::array<std::array<int, 3>, 3> cyc = {{{a, b, c}, {b, c, a}, {c, a, b}}};
  Polynomial out;
  // Reported in the wedge-basis normalization: the expression below is
  // antisymmetric in (a,b,c), so the component on d^a ^ d^b ^ d^c of the
  // fully antisymmetrized cocycle is 6 times one ordered evaluation.
  for (const auto& [i, j] : nz)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        // group 1: 2 X_ij X_kl^i X_uv^{km} X_wm^{jl}
        Polynomial dkl = P.X(k, l).derivative(i);
        bool g1 = !dkl.is_zero();
        bool g2 = !P.X(k, l).is_zero();
        if (!g1 && !g2) continue;
        for (int m = 0; m < n; ++m)
          for (const auto& t : cyc) {
            int u = t[0], v = t[1], w = t[2];
            Polynomial dwm = P.X(w, m).derivative(mi2(j, l));
            if (dwm.is_zero()) continue;
            if (g1) {
              Polynomial duv = P.X(u, v).derivative(mi2(k, m));
              if (!duv.is_zero()) out += P.X(i, j) * dkl * duv * dwm * 2;
            }
            if (g2) {
              Polynomial duv3 = P.X(u, v).derivative(mi2(i, k).times_var(m));
              if (!duv3.is_zero()) out += P.X(i, j) * P.X(k, l) * duv3 * dwm;
            }
          }
      }
  return out * 6;
}

TriVector obstruction(const PoissonStructure& P) {
  TriVector out;
  for (int a = 0; a < P.nvars(); ++a)
    for (int b = a + 1; b < P.nvars(); ++b)
      for (int c = b + 1; c < P.nvars(); ++c) out.set(a, b, c, obstruction_component(P, a, b, c));
  return out;
}

Polynomial obssol_residual(const PoissonStructure& P, const SkewPolyMatrix& Y,
                           const SkewPolyMatrix& Z, int a0, int b0, int c0) {
  auto nz = nonzero_pairs(P);
  int n = P.nvars();
  const std::array<std::array<int, 3>, 3> cyc = {{{a0, b0, c0}, {b0, c0, a0}, {c0, a0, b0}}};
  Polynomial out;
  for (const auto& t : cyc) {
    int a = t[0], b = t[1], c = t[2];
    for (int m = 0; m < n; ++m) {
      out += P.X(m, c) * Z.at(a, b).derivative(m);
      out += Z.at(m, c) * P.X(a, b).derivative(m);
      out += Y.at(m, c) * Y.at(a, b).derivative(m) * 6;
    }
    for (const auto& [i, j] : nz)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Polynomial dkl = P.X(k, l).derivative(i);
          bool g2 = !dkl.is_zero();
          bool g1 = !P.X(k, l).is_zero();
          if (!g1 && !g2) continue;
          for (int m = 0; m < n; ++m) {
            Polynomial dcm = P.X(c, m).derivative(mi2(j, l));
            if (dcm.is_zero()) continue;
            if (g1) {
              Polynomial dab = P.X(a, b).derivative(mi2(i, k).times_var(m));
              if (!dab.is_zero()) out -= P.X(i, j) * P.X(k, l) * dab * dcm;
            }
            if (g2) {
              Polynomial dab2 = P.X(a, b).derivative(mi2(k, m));
              if (!dab2.is_zero()) out -= P.X(i, j) * dkl * dab2 * dcm * 2;
            }
          }
        }
  }
  return out;
}

StarProduct moyal_constant(const PoissonStructure& P, int order) {
  if (!P.is_constant()) throw std::invalid_argument("moyal_constant requires a constant bracket");
  if (order < 0) throw std::invalid_argument("negative order");
  auto nz = nonzero_pairs(P);
  std::vector<Cochain> pis;
  pis.push_back(Cochain::multiplication(P.nvars()));
  mpz_class kfact = 1;
  for (int k = 1; k <= order; ++k) {
    kfact *= k;
    Cochain c(2, P.nvars());
    if (nz.empty()) {
      pis.push_back(std::move(c));
      continue;
    }
    Rational norm = Rational(1) / Rational(mpz_class(mpz_class(1) << k) * kfact);
    // all k-tuples of nonzero entries
    std::vector<int> pick(static_cast<std::size_t>(k), 0);
    for (;;) {
      MultiIndex left, right;
      Rational coeff = norm;
      for (int t = 0; t < k; ++t) {
        auto [ki, li] = nz[static_cast<std::size_t>(pick[static_cast<std::size_t>(t)])];
        left = left.times_var(ki);
        right = right.times_var(li);
        coeff *= P.X(ki, li).coeff(Monomial::one());
      }
      c.add_term(IdxTuple::of({left, right}), Polynomial::constant(coeff));
      int d = 0;
      while (d < k) {
        if (++pick[static_cast<std::size_t>(d)] < static_cast<int>(nz.size())) break;
        pick[static_cast<std::size_t>(d)] = 0;
        ++d;
      }
      if (d == k) break;
    }
    pis.push_back(std::move(c));
  }
  return StarProduct(P, std::move(pis));
}

HSeries star_symmetrization(const StarProduct& S, const Monomial& m) {
  int n = S.order();
  std::vector<int> letters = m.indices();
  if (letters.empty()) return HSeries::of(Polynomial::constant(1), n);
  // multiplicity of each distinct arrangement among the deg! permutations
  mpz_class repeats = 1;
  for (int v = 0; v < kMaxVars; ++v)
    for (int k = 2; k <= m[v]; ++k) repeats *= k;
  mpz_class total = 1;
  for (std::size_t k = 2; k <= letters.size(); ++k) total *= k;
  HSeries sum(n);
  std::sort(letters.begin(), letters.end());
  do {
    HSeries prod = HSeries::of(Polynomial::variable(letters[0]), n);
    for (std::size_t t = 1; t < letters.size(); ++t)
      prod = S.apply(prod, HSeries::of(Polynomial::variable(letters[t]), n));
    sum += prod;
  } while (std::next_permutation(letters.begin(), letters.end()));
  HSeries out(n);
  Rational scale = Rational(repeats) / Rational(total);
  for (int k = 0; k <= n; ++k) out[k] = sum[k] * scale;
  return out;
}

HSeries balanced_residual(const StarProduct& S, const Monomial& m) {
  HSeries out = star_symmetrization(S, m);
  out[0] -= Polynomial::monomial(m);
  return out;
}

}  // namespace starq
