#pragma once

#include <map>
#include <string>
#include <vector>

#include "starq/polynomial.hpp"
#include "starq/varset.hpp"

namespace starq {

// Antisymmetric matrix of polynomials with zero diagonal; both triangles
// are materialized so entry lookups never compute signs.
class SkewPolyMatrix {
 public:
  SkewPolyMatrix() = default;
  explicit SkewPolyMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n)) {}

  int size() const { return n_; }

  const Polynomial& at(int i, int j) const { return a_.at(static_cast<std::size_t>(i * n_ + j)); }

  void set(int i, int j, const Polynomial& p) {
    if (i == j && !p.is_zero()) throw std::invalid_argument("diagonal entries must vanish");
    a_.at(static_cast<std::size_t>(i * n_ + j)) = p;
    a_.at(static_cast<std::size_t>(j * n_ + i)) = -p;
  }

  bool operator==(const SkewPolyMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_ = 0;
  std::vector<Polynomial> a_;
};

struct JacobiError : std::runtime_error {
  JacobiError(int a_, int b_, int c_, Polynomial res, const VarSet& vars)
      : std::runtime_error("Jacobi identity fails at (" + std::to_string(a_ + 1) + "," +
                           std::to_string(b_ + 1) + "," + std::to_string(c_ + 1) +
                           "): residual " + res.str(vars)),
        a(a_), b(b_), c(c_), residual(std::move(res)) {}
  int a, b, c;
  Polynomial residual;
};

// A Poisson structure on the polynomial algebra over a declared variable
// set: X_ij = {x_i, x_j}. Construction validates the Jacobi identity on
// every index triple unless explicitly deferred (needed to build the
// deliberately broken test structures).
class PoissonStructure {
 public:
  PoissonStructure(VarSet vars, SkewPolyMatrix X, bool validate = true);

  const VarSet& vars() const { return vars_; }
  int nvars() const { return vars_.size(); }
  const Polynomial& X(int i, int j) const { return X_.at(i, j); }
  const SkewPolyMatrix& matrix() const { return X_; }

  // {p,q} = sum_ij X_ij d^i(p) d^j(q)
  Polynomial bracket(const Polynomial& p, const Polynomial& q) const;

  // X_ab^l X_cl + X_bc^l X_al + X_ca^l X_bl summed over l; zero for all
  // triples exactly when the structure is Poisson.
  Polynomial jacobi_residual(int a, int b, int c) const;

  // Derivative of the Jacobi identity in direction m.
  Polynomial jacobi_derivative_residual(int a, int b, int c, int m) const;

  void validate_jacobi() const;  // throws JacobiError with first witness

  // Largest total degree among the X_ij (degree of the bracket).
  int degree() const;

  bool is_constant() const;

  PoissonStructure renamed(VarSet new_vars) const;

 private:
  VarSet vars_;
  SkewPolyMatrix X_;
};

// Trivector in the basis d^a ^ d^b ^ d^c (strictly increasing triples).
class TriVector {
 public:
  void set(int a, int b, int c, Polynomial p);
  const Polynomial& at(int a, int b, int c) const;
  bool is_zero() const { return comps_.empty(); }
  const std::map<std::array<int, 3>, Polynomial>& components() const { return comps_; }
  bool operator==(const TriVector& o) const { return comps_ == o.comps_; }
  std::string str(const VarSet& vars) const;

 private:
  std::map<std::array<int, 3>, Polynomial> comps_;
};

// The two-variable-polynomial family of Poisson brackets on C^{2d}:
// {u_j, v(lambda)} = phi(lambda, v(lambda)) [u(lambda)/lambda^{d-j+1}]_+
// mod u(lambda), with {u_i,u_j} = {v_i,v_j} = 0. phi is a polynomial over
// the two abstract variables (x, y); the result lives on (u_1..u_d,
// v_1..v_d).
PoissonStructure from_phi(const Polynomial& phi, int d);

// Variable set the `phi` argument of from_phi is parsed over.
VarSet phi_vars();

// One-variable polynomials over the polynomial coefficient ring, used by
// the from_phi construction; exposed so the uniqueness-of-division
// invariant can be cross-checked.
namespace unipoly {
using UniPoly = std::vector<Polynomial>;  // index = power of lambda
UniPoly mul(const UniPoly& a, const UniPoly& b);
// Remainder of p modulo a monic u, classic long division.
UniPoly rem_monic(UniPoly p, const UniPoly& u);
// Same remainder via iterated substitution of the leading relation
// lambda^d = -(u_1 lambda^{d-1} + ... + u_d); the independent route.
UniPoly rem_monic_substitution(const UniPoly& p, const UniPoly& u);
}  // namespace unipoly

}  // namespace starq
