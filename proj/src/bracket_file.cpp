#include "starq/bracket_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "starq/parse.hpp"

namespace starq {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

BracketFile parse_bracket_text(const std::string& text) {
  BracketFile f;
  bool have_vars = false;
  std::vector<std::vector<bool>> seen;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("name:", 0) == 0) {
      f.name = trim(t.substr(5));
      continue;
    }
    if (t.rfind("vars:", 0) == 0) {
      if (have_vars) throw ParseError("duplicate vars line", lineno);
      f.vars = VarSet(split_ws(t.substr(5)));
      if (f.vars.size() == 0) throw ParseError("empty variable list", lineno);
      f.entries = SkewPolyMatrix(f.vars.size());
      seen.assign(static_cast<std::size_t>(f.vars.size()),
                  std::vector<bool>(static_cast<std::size_t>(f.vars.size()), false));
      have_vars = true;
      continue;
    }
    if (t[0] == '{') {
      if (!have_vars) throw ParseError("bracket entry before vars line", lineno);
      std::size_t comma = t.find(',');
      std::size_t close = t.find('}');
      std::size_t eq = t.find('=');
      if (comma == std::string::npos || close == std::string::npos || eq == std::string::npos ||
          !(comma < close && close < eq))
        throw ParseError("malformed bracket entry, expected {xi,xj} = expr", lineno);
      std::string na = trim(t.substr(1, comma - 1));
      std::string nb = trim(t.substr(comma + 1, close - comma - 1));
      auto ia = f.vars.index(na), ib = f.vars.index(nb);
      if (!ia) throw ParseError("undeclared variable '" + na + "'", lineno);
      if (!ib) throw ParseError("undeclared variable '" + nb + "'", lineno);
      if (*ia >= *ib) throw ParseError("bracket pairs must be declared with i < j", lineno);
      if (seen[static_cast<std::size_t>(*ia)][static_cast<std::size_t>(*ib)])
        throw ParseError("duplicate bracket pair {" + na + "," + nb + "}", lineno);
      seen[static_cast<std::size_t>(*ia)][static_cast<std::size_t>(*ib)] = true;
      f.entries.set(*ia, *ib, parse_poly(t.substr(eq + 1), f.vars));
      continue;
    }
    throw ParseError("unrecognized line: " + t, lineno);
  }
  if (!have_vars) throw ParseError("missing vars line", 0);
  return f;
}

BracketFile load_bracket_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open bracket file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bracket_text(buf.str());
}

PoissonStructure to_poisson(const BracketFile& f, bool validate) {
  return PoissonStructure(f.vars, f.entries, validate);
}

std::string bracket_text(const std::string& name, const PoissonStructure& P) {
  std::ostringstream os;
  if (!name.empty()) os << "name: " << name << "\n";
  os << "vars:";
  for (const auto& n : P.vars().names()) os << " " << n;
  os << "\n";
  for (int i = 0; i < P.nvars(); ++i)
    for (int j = i + 1; j < P.nvars(); ++j)
      if (!P.X(i, j).is_zero())
        os << "{" << P.vars().name(i) << "," << P.vars().name(j) << "} = " << P.X(i, j).str(P.vars())
           << "\n";
  return os.str();
}

}  // namespace starq
