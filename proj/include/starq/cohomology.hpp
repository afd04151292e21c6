#pragma once

#include "starq/cochain.hpp"
#include "starq/poisson.hpp"
#include "starq/star.hpp"

namespace starq {

struct SolverPreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// J psi != 0: the input is not the coboundary of any symmetric cochain.
// Carries the first generator triple where the cyclic sum is nonzero --
// this is exactly the fourth-order obstruction signal.
struct JacobiObstructionError : std::runtime_error {
  JacobiObstructionError(int a_, int b_, int c_, Polynomial value_, const VarSet& vars)
      : std::runtime_error("J(psi) does not vanish, witness triple (" + std::to_string(a_ + 1) +
                           "," + std::to_string(b_ + 1) + "," + std::to_string(c_ + 1) +
                           "): " + value_.str(vars)),
        a(a_), b(b_), c(c_), value(std::move(value_)) {}
  int a, b, c;
  Polynomial value;
};

// Symmetric 2-cocycle phi -> 1-cochain lambda with d(lambda) = phi,
// lambda normalized to vanish on basis elements (recursion
// lambda(pq) = p lambda(q) + q lambda(p) - phi(p,q), lambda(1) = phi(1,1)).
Cochain solve_sym2(const Cochain& phi);

// Flip symmetric 3-cocycle psi -> antisymmetric 2-cochain phi with
// d(phi) = psi; phi vanishes on basis pairs after the theta pre-pass that
// absorbs psi(1,1,p).
Cochain solve_flip_sym3(const Cochain& psi);

// Flip antisymmetric 3-cocycle psi with J psi = 0 -> symmetric 2-cochain
// phi with d(phi) = psi; phi(x,p) = 0 whenever x <= p in the basis order.
// Throws JacobiObstructionError when J psi != 0.
Cochain solve_flip_antisym3(const Cochain& psi);

// Symmetric pi_4 solving d(pi_4) = [pi_1, pi_3 + phi_3] + 1/2 [pi_2, pi_2]
// for the corrected third-order product; verifies the coboundary equation
// exactly before returning.
Cochain build_pi4(const PoissonStructure& P);

// The order-4 star product mu + h pi_1 + h^2 pi_2 + h^3 (pi_3 + phi_3)
// + h^4 pi_4; associative mod h^5.
StarProduct extend4(const PoissonStructure& P);

}  // namespace starq
