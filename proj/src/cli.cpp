#include "starq/cli.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "starq/bracket_file.hpp"
#include "starq/catalog.hpp"
#include "starq/cohomology.hpp"
#include "starq/envelope.hpp"
#include "starq/parse.hpp"
#include "starq/star.hpp"

namespace starq {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitUsage = 64;

struct Ctx {
  std::ostringstream out;
  std::ostringstream err;
  int code = kExitOk;
};

PoissonStructure load(const std::string& path, bool validate = true) {
  return to_poisson(load_bracket_file(path), validate);
}

// Seeded generator for the reproducible order-4 verification suite.
struct SuiteRng {
  std::uint64_t state;
  explicit SuiteRng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545F4914F6CDD1DULL;
  }
  int uniform(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Polynomial poly(int nvars, int max_deg) {
    Polynomial p;
    int nterms = uniform(1, 3);
    for (int t = 0; t < nterms; ++t) {
      Monomial m;
      int deg = uniform(0, max_deg);
      for (int d = 0; d < deg; ++d) m = m.times_var(uniform(0, nvars - 1));
      p += Polynomial::monomial(m, Rational(uniform(-3, 3)));
    }
    return p;
  }
};

StarProduct product_of_order(const PoissonStructure& P, int order, bool corrected) {
  if (order == 4) return extend4(P);
  return star_product(P, order, corrected);
}

void cmd_check_jacobi(Ctx& ctx, const std::string& file) {
  PoissonStructure P = load(file, false);
  try {
    P.validate_jacobi();
    ctx.out << "Jacobi: OK\n";
  } catch (const JacobiError& e) {
    ctx.out << "Jacobi: FAIL (" << e.a + 1 << "," << e.b + 1 << "," << e.c + 1
            << "): " << e.residual.str(P.vars()) << "\n";
    ctx.code = kExitFail;
  }
}

void cmd_star_term(Ctx& ctx, const std::string& file, const std::string& k) {
  PoissonStructure P = load(file);
  Cochain c(2, P.nvars());
  if (k == "1") c = build_pi1(P);
  else if (k == "2") c = build_pi2(P);
  else if (k == "3") c = build_pi3(P);
  else if (k == "phi3") c = build_phi3_correction(P);
  else throw CLI::ValidationError("--k must be one of 1|2|3|phi3");
  ctx.out << c.str(P.vars()) << "\n";
}

void cmd_star_apply(Ctx& ctx, const std::string& file, const std::string& pexpr,
                    const std::string& qexpr, int order, bool corrected) {
  PoissonStructure P = load(file);
  StarProduct S = product_of_order(P, order, corrected);
  HSeries r = S.apply(parse_poly(pexpr, P.vars()), parse_poly(qexpr, P.vars()));
  ctx.out << r.str(P.vars()) << "\n";
}

void cmd_associator(Ctx& ctx, const std::string& file, const std::string& pexpr,
                    const std::string& qexpr, const std::string& rexpr, int order, bool corrected) {
  PoissonStructure P = load(file);
  StarProduct S = product_of_order(P, order, corrected);
  HSeries r = associator_residual(S, parse_poly(pexpr, P.vars()), parse_poly(qexpr, P.vars()),
                                  parse_poly(rexpr, P.vars()));
  ctx.out << r.str(P.vars()) << "\n";
  if (!r.is_zero()) ctx.code = kExitFail;
}

void cmd_obstruction(Ctx& ctx, const std::string& file) {
  PoissonStructure P = load(file);
  TriVector obs = obstruction(P);
  ctx.out << obs.str(P.vars()) << "\n";
  if (!obs.is_zero()) ctx.code = kExitFail;
}

void cmd_correction(Ctx& ctx, const std::string& file) {
  PoissonStructure P = load(file);
  ctx.out << build_phi3_correction(P).str(P.vars()) << "\n";
}

void cmd_extend4(Ctx& ctx, const std::string& file, int ntriples) {
  PoissonStructure P = load(file);
  StarProduct S = extend4(P);
  const std::uint64_t seed = 0x5eed04ULL;
  ctx.out << "pi4: " << S.pi(4).term_count() << " terms, order "
          << std::max(S.pi(4).order(), 0) << "\n";
  ctx.out << "seed: " << seed << "\n";
  SuiteRng rng(seed);
  for (int rep = 0; rep < ntriples; ++rep) {
    Polynomial p = rng.poly(P.nvars(), 3), q = rng.poly(P.nvars(), 3), r = rng.poly(P.nvars(), 3);
    HSeries res = associator_residual(S, p, q, r);
    if (!res.is_zero()) {
      ctx.out << "associator mod h^5: FAIL on triple " << rep << "\n";
      ctx.code = kExitFail;
      return;
    }
  }
  ctx.out << "associator mod h^5: OK (" << ntriples << " seeded triples)\n";
}

void cmd_diamond(Ctx& ctx, const std::string& file, int order) {
  PoissonStructure P = load(file);
  TauVerdict v = tau_injective_to(P, order);
  if (v.injective) {
    ctx.out << "diamond relations hold through order " << order << ": tau_" << order
            << " injective\n";
  } else {
    ctx.out << "diamond fails at order " << v.order << ", triple (" << v.a + 1 << "," << v.b + 1
            << "," << v.c + 1 << ")\n";
    ctx.code = kExitFail;
  }
}

void cmd_moyal(Ctx& ctx, const std::string& file, int order) {
  PoissonStructure P = load(file);
  StarProduct S = moyal_constant(P, order);
  for (int k = 0; k <= order; ++k)
    ctx.out << "pi_" << k << ":\n" << S.pi(k).str(P.vars()) << "\n";
}

void cmd_catalog(Ctx& ctx, const std::string& action, const std::string& name) {
  if (action == "list") {
    for (const auto& n : catalog_names()) ctx.out << n << "\n";
    return;
  }
  if (action == "export") {
    if (name.empty()) throw CLI::ValidationError("catalog export needs a name");
    ctx.out << catalog_text(name);
    return;
  }
  throw CLI::ValidationError("catalog action must be list or export");
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv) {
  Ctx ctx;
  CLI::App app{"exact deformation-quantization engine for polynomial Poisson algebras"};
  app.require_subcommand(1);

  std::string file, pexpr, qexpr, rexpr, kterm, action, name;
  int order = 3, ntriples = 8;
  bool corrected = false;

  auto* jac = app.add_subcommand("check-jacobi", "validate the Jacobi identity of a bracket file");
  jac->add_option("file", file)->required();

  auto* term = app.add_subcommand("star-term", "print pi_1, pi_2, pi_3 or the phi3 correction");
  term->add_option("file", file)->required();
  term->add_option("--k", kterm, "1|2|3|phi3")->required();

  auto* sap = app.add_subcommand("star-apply", "evaluate p * q as a truncated h-series");
  sap->add_option("file", file)->required();
  sap->add_option("p", pexpr)->required();
  sap->add_option("q", qexpr)->required();
  sap->add_option("--order", order)->check(CLI::Range(0, 4));
  sap->add_flag("--corrected", corrected, "add the phi3 correction to pi_3");

  auto* assoc = app.add_subcommand("associator", "print (p*q)*r - p*(q*r); exit 0 iff zero");
  assoc->add_option("file", file)->required();
  assoc->add_option("p", pexpr)->required();
  assoc->add_option("q", qexpr)->required();
  assoc->add_option("r", rexpr)->required();
  assoc->add_option("--order", order)->check(CLI::Range(0, 4));
  assoc->add_flag("--corrected", corrected);

  auto* obs = app.add_subcommand("obstruction", "fourth-order obstruction trivector; exit 0 iff zero");
  obs->add_option("file", file)->required();

  auto* corr = app.add_subcommand("correction", "print the phi3 correction biderivation");
  corr->add_option("file", file)->required();

  auto* ext = app.add_subcommand("extend4", "build pi4 for the corrected product and verify mod h^5");
  ext->add_option("file", file)->required();
  ext->add_option("--triples", ntriples, "seeded triples to verify")->check(CLI::Range(1, 1000));

  auto* dia = app.add_subcommand("diamond", "check the diamond relations / tau injectivity");
  dia->add_option("file", file)->required();
  dia->add_option("--order", order)->check(CLI::Range(0, 4));

  auto* moy = app.add_subcommand("moyal", "closed-form star product of a constant bracket");
  moy->add_option("file", file)->required();
  moy->add_option("--order", order)->check(CLI::Range(0, 8));

  auto* cat = app.add_subcommand("catalog", "list or export the built-in example brackets");
  cat->add_option("action", action)->required();
  cat->add_option("name", name);

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream help;
    help << app.help();
    return {kExitOk, help.str(), ""};
  } catch (const CLI::ParseError& e) {
    return {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
  }

  try {
    if (*jac) cmd_check_jacobi(ctx, file);
    else if (*term) cmd_star_term(ctx, file, kterm);
    else if (*sap) cmd_star_apply(ctx, file, pexpr, qexpr, order, corrected);
    else if (*assoc) cmd_associator(ctx, file, pexpr, qexpr, rexpr, order, corrected);
    else if (*obs) cmd_obstruction(ctx, file);
    else if (*corr) cmd_correction(ctx, file);
    else if (*ext) cmd_extend4(ctx, file, ntriples);
    else if (*dia) cmd_diamond(ctx, file, order);
    else if (*moy) cmd_moyal(ctx, file, order);
    else if (*cat) cmd_catalog(ctx, action, name);
  } catch (const ParseError& e) {
    return {kExitParse, ctx.out.str(), std::string("parse error: ") + e.what() + "\n"};
  } catch (const CLI::ValidationError& e) {
    return {kExitUsage, ctx.out.str(), std::string("usage error: ") + e.what() + "\n"};
  } catch (const JacobiObstructionError& e) {
    return {kExitFail, ctx.out.str(), std::string("obstruction: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitFail, ctx.out.str(), std::string("error: ") + e.what() + "\n"};
  }
  return {ctx.code, ctx.out.str(), ctx.err.str()};
}

}  // namespace starq
