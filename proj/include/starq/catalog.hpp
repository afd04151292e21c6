#pragma once

#include <string>
#include <vector>

#include "starq/poisson.hpp"

namespace starq {

// The built-in example structures. Every entry is Jacobi-validated on
// construction and serializes through the bracket file format; the phi-*
// entries are produced by the from_phi generator on (x,y)-polynomials and
// renamed to x1..x4.
std::vector<std::string> catalog_names();

PoissonStructure catalog(const std::string& name);

// Bracket-file text of a catalog entry (what `catalog export` prints).
std::string catalog_text(const std::string& name);

}  // namespace starq
