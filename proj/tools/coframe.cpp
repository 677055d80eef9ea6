// coframe: exact-arithmetic toolkit for Maurer-Cartan structure equations,
// deformed cohomologies, and differential coverings.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coframe/reproduce.hpp"

namespace {

int emit(const coframe::RunReport& rep, const std::string& format) {
  if (format == "structured")
    std::cout << coframe::render_structured(rep);
  else
    std::cout << coframe::render_text(rep);
  return rep.exitCode;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact deformed-cohomology and covering verification tool"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t seed = 20240817;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized probes")
      ->capture_default_str();

  std::string checkFile;
  auto* check = app.add_subcommand("check",
                                   "validate a structure-equation file");
  check->add_option("file", checkFile, "presentation (.alg) file or fixture")
      ->required();

  std::string cohoFile, cohoLambda, cohoZeta = "zeta";
  int cohoDegree = 2;
  bool cohoGeneric = false, restrictIdeal = false;
  auto* coho = app.add_subcommand("cohomology",
                                  "deformed cohomology at a given lambda");
  coho->add_option("file", cohoFile, "presentation file or fixture")->required();
  coho->add_option("--degree", cohoDegree, "cochain degree")->required();
  auto* lamOpt = coho->add_option("--lambda", cohoLambda,
                                  "rational deformation parameter");
  coho->add_flag("--generic", cohoGeneric, "use a generic (non-resonant) probe")
      ->excludes(lamOpt);
  coho->add_option("--zeta", cohoZeta, "closed-mark name")
      ->capture_default_str();
  coho->add_flag("--restrict-ideal", restrictIdeal,
                 "restrict cochains to the ideal generators (always in "
                 "effect: the computable complex is the restricted one)");

  std::string resFile, resZeta = "zeta";
  int resDegree = 2;
  auto* res = app.add_subcommand("resonances",
                                 "scan for resonant lambda values");
  res->add_option("file", resFile, "presentation file or fixture")->required();
  res->add_option("--degree", resDegree, "cochain degree")->required();
  res->add_option("--zeta", resZeta, "closed-mark name")->capture_default_str();

  std::string covFile;
  auto* cov = app.add_subcommand("verify-covering",
                                 "check a nonlocal covering of a PDE");
  cov->add_option("file", covFile, "covering (.pde) file or fixture")
      ->required();

  std::string vcFixture, vcAlgebra, vcEquation, vcExtension;
  bool vcAll = false;
  auto* vc = app.add_subcommand(
      "verify-coords", "verify printed coordinate forms against the algebra");
  vc->add_option("fixture", vcFixture, "coordinate fixture (.mcf) or name")
      ->required();
  vc->add_option("--algebra", vcAlgebra,
                 "presentation file (default: embedded fixture named by the "
                 "coordinate fixture)");
  auto* eqOpt = vc->add_option("--equation", vcEquation,
                               "verify a single structure equation");
  auto* exOpt = vc->add_option("--extension", vcExtension,
                               "verify a single extension solution");
  vc->add_flag("--all", vcAll, "verify everything verifiable")
      ->excludes(eqOpt)
      ->excludes(exOpt);

  auto* repro = app.add_subcommand(
      "reproduce-paper", "run every acceptance criterion and print verdicts");

  // let --format/--seed appear after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed())
      return emit(coframe::run_check(checkFile,
                                     coframe::resolve_input(checkFile)),
                  format);
    if (coho->parsed()) {
      std::optional<coframe::Rat> lam;
      if (!cohoGeneric) {
        if (cohoLambda.empty())
          throw coframe::Error("need --lambda or --generic");
        lam = coframe::parse_rational(cohoLambda);
      }
      return emit(coframe::run_cohomology(cohoFile,
                                          coframe::resolve_input(cohoFile),
                                          cohoDegree, lam, cohoZeta, seed),
                  format);
    }
    if (res->parsed())
      return emit(coframe::run_resonances(resFile,
                                          coframe::resolve_input(resFile),
                                          resDegree, resZeta, seed),
                  format);
    if (cov->parsed())
      return emit(coframe::run_verify_covering(
                      covFile, coframe::resolve_input(covFile)),
                  format);
    if (vc->parsed()) {
      std::string mcfText;
      try {
        mcfText = coframe::resolve_input(vcFixture);
      } catch (const coframe::Error&) {
        mcfText = coframe::resolve_input(vcFixture + ".mcf");
      }
      coframe::MCFixture fx = coframe::parse_mcf(mcfText);
      std::string algName =
          vcAlgebra.empty() ? fx.algebraName + ".alg" : vcAlgebra;
      std::string algText = coframe::resolve_input(algName);
      std::string mode = "all", item;
      if (!vcEquation.empty()) {
        mode = "equation";
        item = vcEquation;
      } else if (!vcExtension.empty()) {
        mode = "extension";
        item = vcExtension;
      }
      return emit(coframe::run_verify_coords(vcFixture, mcfText, algName,
                                             algText, mode, item),
                  format);
    }
    if (repro->parsed()) return emit(coframe::run_reproduce(seed), format);
  } catch (const coframe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
