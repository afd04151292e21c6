#include "starq/cochain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace starq {

Cochain::Cochain(int arity, int nvars) : arity_(arity), nvars_(nvars) {
  if (arity < 1 || arity > kMaxArity) throw std::invalid_argument("cochain arity out of range");
  if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("cochain variable count out of range");
}

Cochain Cochain::multiplication(int nvars) {
  Cochain mu(2, nvars);
  mu.add_term(IdxTuple::of({MultiIndex::one(), MultiIndex::one()}), Polynomial::constant(1));
  return mu;
}

int Cochain::order() const {
  int m = -1;
  for (const auto& [key, coeff] : terms_) m = std::max(m, key.order());
  return m;
}

void Cochain::add_term(const IdxTuple& key, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  if (key.n != arity_) throw std::invalid_argument("tuple length != cochain arity");
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Cochain::apply(const std::vector<Polynomial>& args) const {
  if (static_cast<int>(args.size()) != arity_) throw std::invalid_argument("arity mismatch");
  Polynomial out;
  for (const auto& [key, coeff] : terms_) {
    Polynomial prod = coeff;
    bool dead = false;
    for (int k = 0; k < arity_ && !dead; ++k) {
      Polynomial d = args[static_cast<std::size_t>(k)].derivative(key.idx[static_cast<std::size_t>(k)]);
      if (d.is_zero()) dead = true;
      else prod *= d;
    }
    if (!dead) out += prod;
  }
  return out;
}

Cochain Cochain::operator+(const Cochain& o) const {
  Cochain out = *this;
  out += o;
  return out;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && arity_ == 0) { arity_ = o.arity_; nvars_ = o.nvars_; }
  if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch in cochain sum");
  for (const auto& [key, coeff] : o.terms_) add_term(key, coeff);
  return *this;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + (-o); }

Cochain Cochain::operator-() const {
  Cochain out = *this;
  for (auto& [key, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Cochain Cochain::operator*(const Rational& c) const {
  Cochain out = *this;
  if (sgn(c) == 0) {
    out.terms_.clear();
    return out;
  }
  for (auto& [key, coeff] : out.terms_) coeff *= c;
  return out;
}

bool Cochain::operator==(const Cochain& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  if (arity_ != o.arity_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (!(a->first == b->first) || a->second != b->second) return false;
  return true;
}

Cochain Cochain::transpose() const {
  if (arity_ != 2) throw std::invalid_argument("transpose requires arity 2");
  Cochain out(2, nvars_);
  for (const auto& [key, coeff] : terms_)
    out.add_term(IdxTuple::of({key.idx[1], key.idx[0]}), coeff);
  return out;
}

Cochain Cochain::flip() const {
  if (arity_ != 3) throw std::invalid_argument("flip requires arity 3");
  Cochain out(3, nvars_);
  for (const auto& [key, coeff] : terms_)
    out.add_term(IdxTuple::of({key.idx[2], key.idx[1], key.idx[0]}), coeff);
  return out;
}

Cochain Cochain::order_part(int k) const {
  Cochain out(arity_, nvars_);
  for (const auto& [key, coeff] : terms_)
    if (key.order() == k) out.add_term(key, coeff);
  return out;
}

std::string Cochain::str(const VarSet& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    if (!first) os << "\n";
    first = false;
    os << coeff.str(vars) << " :: ";
    for (int i = 0; i < key.n; ++i) {
      if (i) os << " (x) ";
      os << multiindex_str(key.idx[static_cast<std::size_t>(i)]);
    }
  }
  return os.str();
}

Cochain hochschild_coboundary(const Cochain& c) {
  int n = c.arity();
  if (n + 1 > kMaxArity) throw std::invalid_argument("coboundary exceeds supported arity");
  Cochain out(n + 1, c.nvars());
  Rational end_sign = (n % 2 == 0) ? Rational(-1) : Rational(1);  // (-1)^{n+1}
  for (const auto& [key, coeff] : c.terms()) {
    // p_1 C(p_2,...): prepend an identity slot
    {
      IdxTuple t;
      t.n = static_cast<std::uint8_t>(n + 1);
      t.idx[0] = MultiIndex::one();
      for (int i = 0; i < n; ++i) t.idx[static_cast<std::size_t>(i + 1)] = key.idx[static_cast<std::size_t>(i)];
      out.add_term(t, coeff);
    }
    // (-1)^k C(..., p_k p_{k+1}, ...): Leibniz split of slot k
    for (int k = 0; k < n; ++k) {
      Rational sign = (k % 2 == 0) ? Rational(-1) : Rational(1);  // (-1)^{k+1} for 1-based k+1
      for_each_two_split(key.idx[static_cast<std::size_t>(k)],
                         [&](const MultiIndex& left, const MultiIndex& right, const mpz_class& mult) {
                           IdxTuple t;
                           t.n = static_cast<std::uint8_t>(n + 1);
                           for (int i = 0; i < k; ++i) t.idx[static_cast<std::size_t>(i)] = key.idx[static_cast<std::size_t>(i)];
                           t.idx[static_cast<std::size_t>(k)] = left;
                           t.idx[static_cast<std::size_t>(k + 1)] = right;
                           for (int i = k + 1; i < n; ++i) t.idx[static_cast<std::size_t>(i + 1)] = key.idx[static_cast<std::size_t>(i)];
                           out.add_term(t, coeff * (sign * Rational(mult)));
                         });
    }
    // (-1)^{n+1} C(...) p_{n+1}: append an identity slot
    {
      IdxTuple t;
      t.n = static_cast<std::uint8_t>(n + 1);
      for (int i = 0; i < n; ++i) t.idx[static_cast<std::size_t>(i)] = key.idx[static_cast<std::size_t>(i)];
      t.idx[static_cast<std::size_t>(n)] = MultiIndex::one();
      out.add_term(t, coeff * end_sign);
    }
  }
  return out;
}

Polynomial coboundary_apply_pointwise(const Cochain& c, const std::vector<Polynomial>& args) {
  int n = c.arity();
  if (static_cast<int>(args.size()) != n + 1) throw std::invalid_argument("arity mismatch");
  std::vector<Polynomial> sub(args.begin() + 1, args.end());
  Polynomial out = args[0] * c.apply(sub);
  for (int k = 0; k < n; ++k) {
    std::vector<Polynomial> merged;
    merged.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i) merged.push_back(args[static_cast<std::size_t>(i)]);
    merged.push_back(args[static_cast<std::size_t>(k)] * args[static_cast<std::size_t>(k + 1)]);
    for (int i = k + 2; i <= n; ++i) merged.push_back(args[static_cast<std::size_t>(i)]);
    Polynomial v = c.apply(merged);
    if ((k + 1) % 2 == 1) out -= v;
    else out += v;
  }
  sub.assign(args.begin(), args.end() - 1);
  Polynomial tail = c.apply(sub) * args[static_cast<std::size_t>(n)];
  if ((n + 1) % 2 == 1) out -= tail;
  else out += tail;
  return out;
}

Cochain hochschild_coboundary_pointwise(const Cochain& c) {
  int ord = std::max(c.order(), 0);
  return cochain_from_evaluator(
      [&c](const std::vector<Polynomial>& args) { return coboundary_apply_pointwise(c, args); },
      c.arity() + 1, c.nvars(), ord);
}

namespace {

// One composition sum of the Gerstenhaber bracket: F with G inserted into
// every slot, with sign (-1)^{(k-1)(gn-1)} * outer_sign for slot k.
void compose_into(const Cochain& outer, const Cochain& inner, const Rational& outer_sign, Cochain& out) {
  int m = outer.arity(), n = inner.arity();
  for (const auto& [fk, fc] : outer.terms()) {
    for (int k = 0; k < m; ++k) {
      Rational sign = (k * (n - 1)) % 2 == 0 ? outer_sign : -outer_sign;
      for (const auto& [gk, gc] : inner.terms()) {
        // d^{I_k} hits the inner coefficient and the inner slots (Leibniz)
        for_each_split(fk.idx[static_cast<std::size_t>(k)], n + 1,
                       [&](const std::vector<MultiIndex>& parts, const mpz_class& mult) {
                         Polynomial dcoeff = gc.derivative(parts[0]);
                         if (dcoeff.is_zero()) return;
                         IdxTuple t;
                         t.n = static_cast<std::uint8_t>(m + n - 1);
                         int slot = 0;
                         for (int i = 0; i < k; ++i) t.idx[static_cast<std::size_t>(slot++)] = fk.idx[static_cast<std::size_t>(i)];
                         for (int j = 0; j < n; ++j)
                           t.idx[static_cast<std::size_t>(slot++)] = gk.idx[static_cast<std::size_t>(j)] * parts[static_cast<std::size_t>(j + 1)];
                         for (int i = k + 1; i < m; ++i) t.idx[static_cast<std::size_t>(slot++)] = fk.idx[static_cast<std::size_t>(i)];
                         out.add_term(t, fc * dcoeff * (sign * Rational(mult)));
                       });
      }
    }
  }
}

}  // namespace

Cochain gerstenhaber_bracket(const Cochain& a, const Cochain& b) {
  int m = a.arity(), n = b.arity();
  if (m + n - 1 > kMaxArity) throw std::invalid_argument("bracket exceeds supported arity");
  Cochain out(m + n - 1, a.nvars() ? a.nvars() : b.nvars());
  compose_into(a, b, Rational(1), out);
  Rational s = ((m - 1) * (n - 1)) % 2 == 0 ? Rational(-1) : Rational(1);
  compose_into(b, a, s, out);
  return out;
}

Cochain jacobi_map(const Cochain& c) {
  if (c.arity() != 3) throw std::invalid_argument("jacobi map requires arity 3");
  Cochain out(3, c.nvars());
  for (const auto& [key, coeff] : c.terms()) {
    out.add_term(key, coeff);
    out.add_term(IdxTuple::of({key.idx[2], key.idx[0], key.idx[1]}), coeff);
    out.add_term(IdxTuple::of({key.idx[1], key.idx[2], key.idx[0]}), coeff);
  }
  return out;
}

std::pair<Cochain, Cochain> decompose(const Cochain& c) {
  Rational half(1, 2);
  if (c.arity() == 2) {
    Cochain t = c.transpose();
    return {(c + t) * half, (c - t) * half};
  }
  if (c.arity() == 3) {
    Cochain t = c.flip();
    return {(c + t) * half, (c - t) * half};
  }
  throw std::invalid_argument("decompose supports arity 2 and 3 only");
}

Cochain tensor_product(const Cochain& a, const Cochain& b) {
  int m = a.arity(), n = b.arity();
  if (m + n > kMaxArity) throw std::invalid_argument("tensor product exceeds supported arity");
  Cochain out(m + n, a.nvars());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      IdxTuple t;
      t.n = static_cast<std::uint8_t>(m + n);
      for (int i = 0; i < m; ++i) t.idx[static_cast<std::size_t>(i)] = ka.idx[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j) t.idx[static_cast<std::size_t>(m + j)] = kb.idx[static_cast<std::size_t>(j)];
      out.add_term(t, ca * cb);
    }
  return out;
}

Cochain cochain_from_evaluator(const std::function<Polynomial(const std::vector<Polynomial>&)>& f,
                               int arity, int nvars, int max_order) {
  Cochain out(arity, nvars);
  // tuples of total order s, solved in increasing s (the recursion only
  // refers to componentwise submultisets, which have smaller total order)
  std::vector<std::vector<MultiIndex>> by_order;
  for (int s = 0; s <= max_order; ++s) by_order.push_back(multiindices_of_order(nvars, s));

  std::vector<MultiIndex> tuple(static_cast<std::size_t>(arity));
  std::function<void(int, int)> enumerate = [&](int slot, int budget) {
    if (slot == arity - 1) {
      for (int s = 0; s <= budget; ++s)
        for (const auto& I : by_order[static_cast<std::size_t>(s)]) {
          tuple[static_cast<std::size_t>(slot)] = I;
          // solve for phi_{tuple}
          std::vector<Polynomial> margs;
          margs.reserve(static_cast<std::size_t>(arity));
          for (const auto& J : tuple) margs.push_back(Polynomial::monomial(J));
          Polynomial val = f(margs);
          // subtract contributions of all proper sub-tuples
          std::vector<std::vector<MultiIndex>> subs;
          subs.reserve(static_cast<std::size_t>(arity));
          for (const auto& J : tuple) subs.push_back(submultisets(J));
          std::vector<std::size_t> pick(static_cast<std::size_t>(arity), 0);
          for (;;) {
            IdxTuple sk;
            sk.n = static_cast<std::uint8_t>(arity);
            bool proper = false;
            for (int i = 0; i < arity; ++i) {
              sk.idx[static_cast<std::size_t>(i)] = subs[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
              if (sk.idx[static_cast<std::size_t>(i)] != tuple[static_cast<std::size_t>(i)]) proper = true;
            }
            if (proper) {
              auto it = out.terms().find(sk);
              if (it != out.terms().end()) {
                mpz_class factor = 1;
                Monomial rest;
                for (int i = 0; i < arity; ++i) {
                  factor *= derivative_factor(tuple[static_cast<std::size_t>(i)], sk.idx[static_cast<std::size_t>(i)]);
                  rest = rest * tuple[static_cast<std::size_t>(i)].quotient(sk.idx[static_cast<std::size_t>(i)]);
                }
                if (factor != 0)
                  val -= it->second * Polynomial::monomial(rest, Rational(factor));
              }
            }
            // advance mixed-radix counter
            int d = 0;
            while (d < arity) {
              if (++pick[static_cast<std::size_t>(d)] < subs[static_cast<std::size_t>(d)].size()) break;
              pick[static_cast<std::size_t>(d)] = 0;
              ++d;
            }
            if (d == arity) break;
          }
          Rational fact = 1;
          for (const auto& J : tuple) fact *= multiindex_factorial(J);
          IdxTuple full;
          full.n = static_cast<std::uint8_t>(arity);
          for (int i = 0; i < arity; ++i) full.idx[static_cast<std::size_t>(i)] = tuple[static_cast<std::size_t>(i)];
          out.add_term(full, val * (Rational(1) / fact));
        }
      return;
    }
    for (int s = 0; s <= budget; ++s)
      for (const auto& I : by_order[static_cast<std::size_t>(s)]) {
        tuple[static_cast<std::size_t>(slot)] = I;
        enumerate(slot + 1, budget - s);
      }
  };
  enumerate(0, max_order);
  return out;
}

}  // namespace starq
