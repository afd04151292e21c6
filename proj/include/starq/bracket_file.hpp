#pragma once

#include <string>

#include "starq/poisson.hpp"

namespace starq {

// Line-oriented serialization of a Poisson structure:
//   # comment
//   name: phi-y2            (optional)
//   vars: x1 x2 x3 x4
//   {x1,x3} = 2*x3*x4 - x1*x3^2
// Pairs must appear with i < j in declared order, each at most once;
// unlisted pairs default to zero.
struct BracketFile {
  std::string name;
  VarSet vars;
  SkewPolyMatrix entries;
};

BracketFile parse_bracket_text(const std::string& text);
BracketFile load_bracket_file(const std::string& path);

PoissonStructure to_poisson(const BracketFile& f, bool validate = true);

std::string bracket_text(const std::string& name, const PoissonStructure& P);

}  // namespace starq
