#pragma once

#include <vector>

#include "starq/cochain.hpp"
#include "starq/hseries.hpp"
#include "starq/poisson.hpp"

namespace starq {

// Truncated star product mu + h pi_1 + ... + h^n pi_n. Construction
// asserts the deformation-quantization shape: pi_0 = mu, pi_1 = half the
// Poisson bracket, pi_k symmetric for even k and antisymmetric for odd k.
class StarProduct {
 public:
  StarProduct(PoissonStructure base, std::vector<Cochain> pis);

  const PoissonStructure& base() const { return base_; }
  int order() const { return static_cast<int>(pis_.size()) - 1; }
  const Cochain& pi(int k) const { return pis_.at(static_cast<std::size_t>(k)); }

  HSeries apply(const Polynomial& p, const Polynomial& q) const;
  HSeries apply(const HSeries& p, const HSeries& q) const;

 private:
  PoissonStructure base_;
  std::vector<Cochain> pis_;
};

// pi_1 = 1/2 X_ij d^i (x) d^j
Cochain build_pi1(const PoissonStructure& P);

// pi_2 = 1/12 X_ij^l X_lk (d^i (x) d^{jk} + d^{jk} (x) d^i)
//      + 1/8  X_ij X_kl  d^{ik} (x) d^{jl}
Cochain build_pi2(const PoissonStructure& P);

// The five-group h^3/48 cochain assembled from the order-3..6 pieces of
// [pi_1, pi_2].
Cochain build_pi3(const PoissonStructure& P);

// Z_ab = 1/2 X_ab^{ik} X_ij^l X_kl^j - X_ai^{jk} X_bj^{il} X_kl
SkewPolyMatrix correction_Z(const PoissonStructure& P);

// phi_3 = 1/48 Z_mn d^m (x) d^n, the antisymmetric biderivation whose
// addition to pi_3 removes the fourth-order obstruction.
Cochain build_phi3_correction(const PoissonStructure& P);

// Star product of the given order (0..3); `corrected` adds phi_3 to pi_3.
StarProduct star_product(const PoissonStructure& P, int order, bool corrected = false);

// (p * q) * r - p * (q * r), truncated at the order of S.
HSeries associator_residual(const StarProduct& S, const Polynomial& p, const Polynomial& q,
                            const Polynomial& r);

// Left side of the fourth-order extension condition for the triple
// a < b < c, in the paper's normalization.
Polynomial obstruction_component(const PoissonStructure& P, int a, int b, int c);

// All components a < b < c; zero exactly when the order-3 deformation
// extends to order four (hence five).
TriVector obstruction(const PoissonStructure& P);

// Residual of the solvability equation for antisymmetric biderivation
// coefficient matrices Y and Z (cyclic sum over (a,b,c) included).
Polynomial obssol_residual(const PoissonStructure& P, const SkewPolyMatrix& Y,
                           const SkewPolyMatrix& Z, int a, int b, int c);

// Closed-form star product for constant brackets:
// pi_k = 1/(2^k k!) X_{k1 l1} ... X_{kk lk} d^{k1..kk} (x) d^{l1..lk}.
StarProduct moyal_constant(const PoissonStructure& P, int order);

// Average of the star products of the letters of m over all orderings.
HSeries star_symmetrization(const StarProduct& S, const Monomial& m);

// star_symmetrization(m) - m; zero up to degree s for an s-balanced product.
HSeries balanced_residual(const StarProduct& S, const Monomial& m);

}  // namespace starq
