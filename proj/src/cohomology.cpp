#include "starq/cohomology.hpp"

#include <algorithm>
#include <map>

namespace starq {

namespace {

// d^I applied to a monomial: (factor, remaining monomial), factor 0 when
// I does not divide m.
inline bool mono_derivative(const Monomial& m, const MultiIndex& I, mpz_class& factor,
                            Monomial& rest) {
  factor = derivative_factor(m, I);
  if (factor == 0) return false;
  rest = m.quotient(I);
  return true;
}

Polynomial apply_monomials(const Cochain& c, const std::vector<Monomial>& args) {
  Polynomial out;
  mpz_class f;
  Monomial rest;
  for (const auto& [key, coeff] : c.terms()) {
    mpz_class total = 1;
    Monomial prod;
    bool dead = false;
    for (int s = 0; s < c.arity() && !dead; ++s) {
      if (!mono_derivative(args[static_cast<std::size_t>(s)], key.idx[static_cast<std::size_t>(s)], f, rest))
        dead = true;
      else {
        total *= f;
        prod = prod * rest;
      }
    }
    if (!dead) out += coeff * Polynomial::monomial(prod, Rational(total));
  }
  return out;
}

// Per-slot buckets of the terms of a 3-cochain whose slot multi-index is
// empty or a single variable; evaluation with a degree<=1 argument in
// that slot only ever touches these.
struct TriSlotIndex {
  using TermRef = const std::pair<const IdxTuple, Polynomial>*;
  std::array<std::vector<TermRef>, 3> empty_slot;
  std::array<std::array<std::vector<TermRef>, kMaxVars>, 3> var_slot;

  explicit TriSlotIndex(const Cochain& c) {
    for (const auto& term : c.terms())
      for (int s = 0; s < 3; ++s) {
        const MultiIndex& I = term.first.idx[static_cast<std::size_t>(s)];
        if (I.total == 0)
          empty_slot[static_cast<std::size_t>(s)].push_back(&term);
        else if (I.total == 1)
          var_slot[static_cast<std::size_t>(s)][static_cast<std::size_t>(I.min_var())].push_back(&term);
      }
  }
};

// Evaluate a 3-cochain on monomials where args[slot] has degree <= 1.
Polynomial apply_mono3_indexed(const TriSlotIndex& index, const std::vector<Monomial>& args) {
  int slot = 0;
  for (int s = 1; s < 3; ++s)
    if (args[static_cast<std::size_t>(s)].total < args[static_cast<std::size_t>(slot)].total) slot = s;
  if (args[static_cast<std::size_t>(slot)].total > 1)
    throw std::logic_error("indexed evaluation needs a degree<=1 argument");

  Polynomial out;
  mpz_class f;
  Monomial rest;
  auto accumulate = [&](const std::vector<TriSlotIndex::TermRef>& bucket) {
    for (auto* term : bucket) {
      mpz_class total = 1;
      Monomial prod;
      bool dead = false;
      for (int s = 0; s < 3 && !dead; ++s) {
        if (!mono_derivative(args[static_cast<std::size_t>(s)], term->first.idx[static_cast<std::size_t>(s)], f,
                             rest))
          dead = true;
        else {
          total *= f;
          prod = prod * rest;
        }
      }
      if (!dead) out += term->second * Polynomial::monomial(prod, Rational(total));
    }
  };
  accumulate(index.empty_slot[static_cast<std::size_t>(slot)]);
  if (args[static_cast<std::size_t>(slot)].total == 1)
    accumulate(
        index.var_slot[static_cast<std::size_t>(slot)][static_cast<std::size_t>(args[static_cast<std::size_t>(slot)].min_var())]);
  return out;
}

// Terms psi_{0,0,J} d^J as a 1-cochain; the part of psi seen by (1,1,p).
Cochain constant_slots_part(const Cochain& psi) {
  Cochain g(1, psi.nvars());
  for (const auto& [key, coeff] : psi.terms())
    if (key.idx[0].total == 0 && key.idx[1].total == 0)
      g.add_term(IdxTuple::of({key.idx[2]}), coeff);
  return g;
}

struct MonoPairLess {
  bool operator()(const std::pair<Monomial, Monomial>& a, const std::pair<Monomial, Monomial>& b) const {
    if (a.first != b.first) return grlex_less(a.first, b.first);
    if (a.second != b.second) return grlex_less(a.second, b.second);
    return false;
  }
};

void check_cocycle(const Cochain& psi, const char* what) {
  if (!hochschild_coboundary(psi).is_zero())
    throw SolverPreconditionError(std::string(what) + ": input is not a cocycle");
}

}  // namespace

Cochain solve_sym2(const Cochain& phi) {
  if (phi.arity() != 2) throw SolverPreconditionError("solve_sym2: arity must be 2");
  if (!phi.is_symmetric()) throw SolverPreconditionError("solve_sym2: input is not symmetric");
  check_cocycle(phi, "solve_sym2");
  if (phi.is_zero()) return Cochain(1, phi.nvars());

  std::map<Monomial, Polynomial, decltype(&grlex_less)> memo(&grlex_less);
  std::function<Polynomial(const Monomial&)> lam = [&](const Monomial& m) -> Polynomial {
    if (m.total == 0) return apply_monomials(phi, {Monomial::one(), Monomial::one()});
    if (m.total == 1) return Polynomial();
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    int x = m.min_var();
    Monomial rest = m.quotient(Monomial::var(x));
    // lambda(x q) = x lambda(q) - phi(x, q)
    Polynomial val = Polynomial::variable(x) * lam(rest) - apply_monomials(phi, {Monomial::var(x), rest});
    memo.emplace(m, val);
    return val;
  };

  auto f = [&](const std::vector<Polynomial>& args) -> Polynomial {
    Polynomial out;
    for (const auto& [m, c] : args[0].terms()) out += lam(m) * c;
    return out;
  };
  return cochain_from_evaluator(f, 1, phi.nvars(), std::max(phi.order(), 1));
}

Cochain solve_flip_sym3(const Cochain& psi) {
  if (psi.arity() != 3) throw SolverPreconditionError("solve_flip_sym3: arity must be 3");
  if (!psi.is_flip_symmetric())
    throw SolverPreconditionError("solve_flip_sym3: input is not flip symmetric");
  check_cocycle(psi, "solve_flip_sym3");
  int nv = psi.nvars();
  if (psi.is_zero()) return Cochain(2, nv);

  // theta(p,q) = g(p) q - p g(q) with g(p) = psi(1,1,p); adding d(theta)
  // clears the constant slots of psi.
  Cochain g = constant_slots_part(psi);
  Cochain theta(2, nv);
  for (const auto& [key, coeff] : g.terms()) {
    theta.add_term(IdxTuple::of({key.idx[0], MultiIndex::one()}), coeff);
    theta.add_term(IdxTuple::of({MultiIndex::one(), key.idx[0]}), -coeff);
  }
  Cochain psi2 = psi + hochschild_coboundary(theta);
  TriSlotIndex index(psi2);

  std::map<std::pair<Monomial, Monomial>, Polynomial, MonoPairLess> memo;
  Rational half(1, 2);
  std::function<Polynomial(const Monomial&, const Monomial&)> phi =
      [&](const Monomial& p, const Monomial& q) -> Polynomial {
    if (p.total == 0 || q.total == 0) return Polynomial();
    if (p.total == 1 && q.total == 1) return Polynomial();  // basis pairs pinned to zero
    if (p == q) return Polynomial();                        // antisymmetry
    if (p.total == 1) return -phi(q, p);
    auto it = memo.find({p, q});
    if (it != memo.end()) return it->second;
    int x = p.min_var();
    Monomial rest = p.quotient(Monomial::var(x));
    Monomial xv = Monomial::var(x);
    // 2 phi(x p', q) = 2x phi(p',q) + 2p' phi(x,q)
    //                  - psi(x,p',q) + psi(x,q,p') - psi(q,x,p')
    Polynomial val = Polynomial::variable(x) * phi(rest, q) + Polynomial::monomial(rest) * phi(xv, q) -
                     (apply_mono3_indexed(index, {xv, rest, q}) -
                      apply_mono3_indexed(index, {xv, q, rest}) +
                      apply_mono3_indexed(index, {q, xv, rest})) *
                         half;
    memo.emplace(std::make_pair(p, q), val);
    return val;
  };

  auto f = [&](const std::vector<Polynomial>& args) -> Polynomial {
    Polynomial out;
    for (const auto& [mp, cp] : args[0].terms())
      for (const auto& [mq, cq] : args[1].terms()) out += phi(mp, mq) * (cp * cq);
    return out;
  };
  Cochain result = cochain_from_evaluator(f, 2, nv, std::max(psi2.order(), 2)) - theta;
  if (!result.is_antisymmetric())
    throw std::logic_error("solve_flip_sym3: output failed the antisymmetry postcondition");
  return result;
}

Cochain solve_flip_antisym3(const Cochain& psi) {
  if (psi.arity() != 3) throw SolverPreconditionError("solve_flip_antisym3: arity must be 3");
  if (!psi.is_flip_antisymmetric())
    throw SolverPreconditionError("solve_flip_antisym3: input is not flip antisymmetric");
  check_cocycle(psi, "solve_flip_antisym3");
  int nv = psi.nvars();
  if (psi.is_zero()) return Cochain(2, nv);

  // J psi must vanish; a failure is reported with the first generator
  // triple carrying a nonzero value.
  Cochain j = jacobi_map(psi);
  if (!j.is_zero()) {
    for (int a = 0; a < nv; ++a)
      for (int b = a + 1; b < nv; ++b)
        for (int c = b + 1; c < nv; ++c) {
          Polynomial v =
              apply_monomials(j, {Monomial::var(a), Monomial::var(b), Monomial::var(c)});
          if (!v.is_zero()) throw JacobiObstructionError(a, b, c, v, VarSet::numbered(nv));
        }
    throw SolverPreconditionError("solve_flip_antisym3: J(psi) != 0 beyond generator triples");
  }

  // theta(p,q) = p g(q) + q g(p) with g(p) = -psi(1,1,p).
  Cochain g = -constant_slots_part(psi);
  Cochain theta(2, nv);
  for (const auto& [key, coeff] : g.terms()) {
    theta.add_term(IdxTuple::of({MultiIndex::one(), key.idx[0]}), coeff);
    theta.add_term(IdxTuple::of({key.idx[0], MultiIndex::one()}), coeff);
  }
  Cochain psi2 = psi + hochschild_coboundary(theta);
  TriSlotIndex index(psi2);

  std::map<std::pair<Monomial, Monomial>, Polynomial, MonoPairLess> memo;
  std::function<Polynomial(const Monomial&, const Monomial&)> phi =
      [&](const Monomial& p0, const Monomial& q0) -> Polynomial {
    if (p0.total == 0 || q0.total == 0) return Polynomial();
    // symmetric: canonical argument order
    const bool swap = grlex_less(q0, p0);
    const Monomial& p = swap ? q0 : p0;
    const Monomial& q = swap ? p0 : q0;
    auto it = memo.find({p, q});
    if (it != memo.end()) return it->second;
    // split off the overall minimal variable: phi(x p', q) = x phi(p', q)
    // + psi(q, p', x); phi(x, q) = 0 for x <= q falls out via phi(1,q)=0
    int xp = p.min_var(), xq = q.min_var();
    Polynomial val;
    if (xp <= xq) {
      Monomial rest = p.quotient(Monomial::var(xp));
      val = Polynomial::variable(xp) * phi(rest, q) +
            apply_mono3_indexed(index, {q, rest, Monomial::var(xp)});
    } else {
      Monomial rest = q.quotient(Monomial::var(xq));
      val = Polynomial::variable(xq) * phi(rest, p) +
            apply_mono3_indexed(index, {p, rest, Monomial::var(xq)});
    }
    memo.emplace(std::make_pair(p, q), val);
    return val;
  };

  auto f = [&](const std::vector<Polynomial>& args) -> Polynomial {
    Polynomial out;
    for (const auto& [mp, cp] : args[0].terms())
      for (const auto& [mq, cq] : args[1].terms()) out += phi(mp, mq) * (cp * cq);
    return out;
  };
  Cochain result = cochain_from_evaluator(f, 2, nv, std::max(psi2.order(), 2)) - theta;
  if (!result.is_symmetric())
    throw std::logic_error("solve_flip_antisym3: output failed the symmetry postcondition");
  return result;
}

Cochain build_pi4(const PoissonStructure& P) {
  Cochain pi1 = build_pi1(P);
  Cochain pi2 = build_pi2(P);
  Cochain pi3c = build_pi3(P) + build_phi3_correction(P);
  Cochain psi = gerstenhaber_bracket(pi1, pi3c) + gerstenhaber_bracket(pi2, pi2) * Rational(1, 2);
  Cochain pi4 = solve_flip_antisym3(psi);
  if (hochschild_coboundary(pi4) != psi)
    throw std::logic_error("build_pi4: d(pi4) != [pi1,pi3+phi3] + 1/2 [pi2,pi2]");
  return pi4;
}

StarProduct extend4(const PoissonStructure& P) {
  std::vector<Cochain> pis;
  pis.push_back(Cochain::multiplication(P.nvars()));
  pis.push_back(build_pi1(P));
  pis.push_back(build_pi2(P));
  pis.push_back(build_pi3(P) + build_phi3_correction(P));
  pis.push_back(build_pi4(P));
  return StarProduct(P, std::move(pis));
}

}  // namespace starq
