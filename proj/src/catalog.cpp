#include "starq/catalog.hpp"

#include <stdexcept>

#include "starq/bracket_file.hpp"
#include "starq/parse.hpp"

namespace starq {

namespace {

struct Entry {
  const char* name;
  const char* phi;   // non-null: built by from_phi(phi, 2), renamed x1..x4
  const char* text;  // non-null: bracket-file body
};

const Entry kEntries[] = {
    {"constant-sympl-2", nullptr,
     "vars: x1 x2\n"
     "{x1,x2} = 1\n"},
    {"constant-sympl-4", nullptr,
     "vars: x1 x2 x3 x4\n"
     "{x1,x3} = 1\n"
     "{x2,x4} = 1\n"},
    {"affine-central", nullptr,
     "vars: x1 x2 x3\n"
     "{x1,x2} = x3 + 1\n"},
    {"linear-sl2", nullptr,
     "vars: x1 x2 x3\n"
     "{x1,x2} = x3\n"
     "{x1,x3} = -x2\n"
     "{x2,x3} = x1\n"},
    {"aij-quadratic", nullptr,
     "vars: x1 x2 x3 x4\n"
     "{x1,x2} = x1*x2\n"},
    {"gl2-quadratic", nullptr,
     "vars: x1 x2 x3 x4\n"
     "{x1,x2} = x1*x2\n"
     "{x1,x4} = x2*x3\n"
     "{x2,x4} = x2*x4\n"},
    {"gl2-cubic", nullptr,
     "vars: x1 x2 x3 x4\n"
     "{x1,x2} = x1^2*x2\n"
     "{x1,x3} = x2*x3^2\n"
     "{x1,x4} = x2*x3*(x1 + x4)\n"
     "{x2,x3} = x2*x3*(x4 - x1)\n"
     "{x2,x4} = x2*x4^2\n"
     "{x3,x4} = x2*x3^2\n"},
    {"phi-x3", "x^3", nullptr},
    {"phi-y", "y", nullptr},
    {"phi-x3y", "x^3 + y", nullptr},
    {"phi-x4", "x^4", nullptr},
    {"phi-y2", "y^2", nullptr},
    {"phi-y2xy", "y^2 + x*y", nullptr},
};

const Entry& find_entry(const std::string& name) {
  for (const auto& e : kEntries)
    if (name == e.name) return e;
  throw std::invalid_argument("unknown catalog entry: " + name);
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : kEntries) out.push_back(e.name);
  return out;
}

PoissonStructure catalog(const std::string& name) {
  const Entry& e = find_entry(name);
  if (e.phi) {
    PoissonStructure uv = from_phi(parse_poly(e.phi, phi_vars()), 2);
    return uv.renamed(VarSet::numbered(uv.nvars()));
  }
  return to_poisson(parse_bracket_text(e.text));
}

std::string catalog_text(const std::string& name) {
  return bracket_text(name, catalog(name));
}

}  // namespace starq
