#include "starq/poisson.hpp"

#include <algorithm>
#include <sstream>

namespace starq {

PoissonStructure::PoissonStructure(VarSet vars, SkewPolyMatrix X, bool validate)
    : vars_(std::move(vars)), X_(std::move(X)) {
  if (X_.size() != vars_.size()) throw std::invalid_argument("matrix size != variable count");
  if (validate) validate_jacobi();
}

Polynomial PoissonStructure::bracket(const Polynomial& p, const Polynomial& q) const {
  int n = nvars();
  Polynomial out;
  for (int i = 0; i < n; ++i) {
    Polynomial pi = p.derivative(i);
    if (pi.is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (X_.at(i, j).is_zero()) continue;
      Polynomial qj = q.derivative(j);
      if (qj.is_zero()) continue;
      out += X_.at(i, j) * pi * qj;
    }
  }
  return out;
}

Polynomial PoissonStructure::jacobi_residual(int a, int b, int c) const {
  Polynomial out;
  for (int l = 0; l < nvars(); ++l) {
    out += X_.at(a, b).derivative(l) * X_.at(c, l);
    out += X_.at(b, c).derivative(l) * X_.at(a, l);
    out += X_.at(c, a).derivative(l) * X_.at(b, l);
  }
  return out;
}

Polynomial PoissonStructure::jacobi_derivative_residual(int a, int b, int c, int m) const {
  Polynomial out;
  for (int l = 0; l < nvars(); ++l) {
    out += X_.at(a, b).derivative(MultiIndex::var(l).times_var(m)) * X_.at(c, l);
    out += X_.at(b, c).derivative(MultiIndex::var(l).times_var(m)) * X_.at(a, l);
    out += X_.at(c, a).derivative(MultiIndex::var(l).times_var(m)) * X_.at(b, l);
    out += X_.at(a, b).derivative(l) * X_.at(c, l).derivative(m);
    out += X_.at(b, c).derivative(l) * X_.at(a, l).derivative(m);
    out += X_.at(c, a).derivative(l) * X_.at(b, l).derivative(m);
  }
  return out;
}

void PoissonStructure::validate_jacobi() const {
  int n = nvars();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Polynomial r = jacobi_residual(a, b, c);
        if (!r.is_zero()) throw JacobiError(a, b, c, r, vars_);
      }
}

int PoissonStructure::degree() const {
  int d = 0;
  for (int i = 0; i < nvars(); ++i)
    for (int j = i + 1; j < nvars(); ++j) d = std::max(d, X_.at(i, j).degree());
  return d;
}

bool PoissonStructure::is_constant() const {
  for (int i = 0; i < nvars(); ++i)
    for (int j = i + 1; j < nvars(); ++j)
      if (!X_.at(i, j).is_constant()) return false;
  return true;
}

PoissonStructure PoissonStructure::renamed(VarSet new_vars) const {
  if (new_vars.size() != nvars()) throw std::invalid_argument("renaming must preserve arity");
  return PoissonStructure(std::move(new_vars), X_, false);
}

void TriVector::set(int a, int b, int c, Polynomial p) {
  if (!(a < b && b < c)) throw std::invalid_argument("trivector triples must be increasing");
  if (p.is_zero())
    comps_.erase({a, b, c});
  else
    comps_[{a, b, c}] = std::move(p);
}

const Polynomial& TriVector::at(int a, int b, int c) const {
  static const Polynomial kZero;
  auto it = comps_.find({a, b, c});
  return it == comps_.end() ? kZero : it->second;
}

std::string TriVector::str(const VarSet& vars) const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, p] : comps_) {
    if (!first) os << "\n";
    first = false;
    os << "(" << key[0] + 1 << "," << key[1] + 1 << "," << key[2] + 1 << "): " << p.str(vars);
  }
  return os.str();
}

namespace unipoly {

UniPoly mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

static void trim(UniPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly rem_monic(UniPoly p, const UniPoly& u) {
  std::size_t d = u.size() - 1;  // u monic of degree d
  trim(p);
  while (p.size() > d) {
    Polynomial lead = p.back();
    std::size_t shift = p.size() - 1 - d;
    for (std::size_t k = 0; k < d; ++k) p[shift + k] -= lead * u[k];
    p.pop_back();
    trim(p);
  }
  p.resize(d);
  return p;
}

UniPoly rem_monic_substitution(const UniPoly& p, const UniPoly& u) {
  std::size_t d = u.size() - 1;
  // lambda^d = -(u_d-1 ... ), substituted power by power from the top
  UniPoly out(d);
  // powers[k] = lambda^k reduced, maintained incrementally
  UniPoly pw(d);  // current reduced power, starts at lambda^0 = 1
  pw[0] = Polynomial::constant(1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (std::size_t i = 0; i < d; ++i) out[i] += p[k] * pw[i];
    // multiply pw by lambda and reduce
    Polynomial top = d == 0 ? Polynomial() : pw[d - 1];
    for (std::size_t i = d; i-- > 1;) pw[i] = pw[i - 1];
    pw[0] = Polynomial();
    if (!top.is_zero())
      for (std::size_t i = 0; i < d; ++i) pw[i] -= top * u[i];
  }
  return out;
}

}  // namespace unipoly

VarSet phi_vars() { return VarSet({"x", "y"}); }

PoissonStructure from_phi(const Polynomial& phi, int d) {
  if (d < 1) throw std::invalid_argument("from_phi requires d >= 1");
  if (2 * d > kMaxVars) throw std::invalid_argument("from_phi: too many variables");
  std::vector<std::string> names;
  for (int k = 1; k <= d; ++k) names.push_back("u" + std::to_string(k));
  for (int k = 1; k <= d; ++k) names.push_back("v" + std::to_string(k));
  VarSet vars(std::move(names));

  using unipoly::UniPoly;
  // u(lambda) = lambda^d + u_1 lambda^{d-1} + ... + u_d  (monic)
  UniPoly u(static_cast<std::size_t>(d) + 1);
  u[static_cast<std::size_t>(d)] = Polynomial::constant(1);
  for (int k = 1; k <= d; ++k) u[static_cast<std::size_t>(d - k)] = Polynomial::variable(k - 1);
  // v(lambda) = v_1 lambda^{d-1} + ... + v_d
  UniPoly v(static_cast<std::size_t>(d));
  for (int k = 1; k <= d; ++k) v[static_cast<std::size_t>(d - k)] = Polynomial::variable(d + k - 1);

  // phi(lambda, v(lambda))
  UniPoly phiv;
  for (const auto& [m, c] : phi.terms()) {
    int a = m[0], b = m[1];
    UniPoly t = {Polynomial::constant(c)};
    for (int k = 0; k < b; ++k) t = unipoly::mul(t, v);
    // times lambda^a
    UniPoly shifted(t.size() + static_cast<std::size_t>(a));
    for (std::size_t i = 0; i < t.size(); ++i) shifted[i + static_cast<std::size_t>(a)] = t[i];
    if (phiv.size() < shifted.size()) phiv.resize(shifted.size());
    for (std::size_t i = 0; i < shifted.size(); ++i) phiv[i] += shifted[i];
  }

  SkewPolyMatrix X(2 * d);
  for (int j = 1; j <= d; ++j) {
    // [u(lambda)/lambda^{d-j+1}]_+ = lambda^{j-1} + u_1 lambda^{j-2} + ... + u_{j-1}
    UniPoly s(static_cast<std::size_t>(j));
    s[static_cast<std::size_t>(j - 1)] = Polynomial::constant(1);
    for (int m = 1; m < j; ++m) s[static_cast<std::size_t>(j - 1 - m)] = Polynomial::variable(m - 1);
    UniPoly w = unipoly::rem_monic(unipoly::mul(phiv, s), u);
    // {u_j, v_k} = coefficient of lambda^{d-k}
    for (int k = 1; k <= d; ++k) {
      std::size_t pw = static_cast<std::size_t>(d - k);
      Polynomial entry = pw < w.size() ? w[pw] : Polynomial();
      X.set(j - 1, d + k - 1, entry);
    }
  }
  return PoissonStructure(std::move(vars), std::move(X));
}

}  // namespace starq
