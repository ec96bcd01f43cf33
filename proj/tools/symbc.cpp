#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "symbc/symbc.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string default_data_dir() {
  if (const char* env = std::getenv("SYMBC_DATA_DIR")) return env;
  return SYMBC_DEFAULT_DATA_DIR;
}

// Accepts a descriptor path or the name of a shipped manifold.
std::string resolve_manifold(const std::string& arg, const std::string& data_dir) {
  if (std::filesystem::exists(arg)) return arg;
  auto shipped = std::filesystem::path(data_dir) / "manifolds" / (arg + ".json");
  return std::filesystem::exists(shipped) ? shipped.string() : arg;
}

int error(symbc_status s) {
  std::cerr << "error: " << symbc_last_error() << "\n";
  return s == SYMBC_ERR_INTERNAL ? kExitFail : kExitUsage;
}

int emit(symbc_report* report, const std::string& output) {
  int code = symbc_report_passed(report) ? kExitPass : kExitFail;
  if (output.empty() || output == "-") {
    std::cout << symbc_report_json(report);
  } else {
    std::ofstream out(output);
    if (!out) {
      symbc_report_free(report);
      std::cerr << "error: cannot write " << output << "\n";
      return kExitUsage;
    }
    out << symbc_report_json(report);
  }
  symbc_report_free(report);
  return code;
}

int with_manifold(const std::string& path, const std::function<symbc_status(symbc_manifold*, symbc_report**)>& run,
                  const std::string& output) {
  symbc_manifold* m = nullptr;
  if (auto s = symbc_manifold_load(path.c_str(), &m)) return error(s);
  symbc_report* report = nullptr;
  auto s = run(m, &report);
  symbc_manifold_free(m);
  if (s) return error(s);
  return emit(report, output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic checks for symplectic boundary conditions and primitive cohomology"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(symbc_version()));

  std::string output;
  std::string data_dir = default_data_dir();
  app.add_option("-o,--output", output, "Write the JSON report to a file instead of stdout");
  app.add_option("--data", data_dir, "Directory holding fixtures/ and manifolds/")->capture_default_str();

  const std::map<std::string, symbc_variant> variants = {{"printed", SYMBC_PRINTED}, {"corrected", SYMBC_CORRECTED}};

  auto* identities = app.add_subcommand("identities", "Run the operator identity suite on seeded random forms");
  int n = 0, cases = 100;
  std::uint64_t seed = 1;
  identities->add_option("--n", n, "Half-dimension, 1 to 3")->required()->check(CLI::Range(1, 3));
  identities->add_option("--cases", cases, "Random forms per identity")->capture_default_str()->check(CLI::PositiveNumber);
  identities->add_option("--seed", seed, "Generator seed")->capture_default_str();

  auto* cohomology = app.add_subcommand("cohomology", "Dimension tables of de Rham and primitive cohomology");
  std::string manifold;
  cohomology->add_option("--manifold", manifold, "Descriptor JSON file or shipped manifold name")->required();

  auto* check_form = app.add_subcommand("check-form", "Check a boundary condition, optionally a harmonic-field claim");
  std::string form, bc, space;
  check_form->add_option("--manifold", manifold, "Descriptor JSON file or shipped manifold name")->required();
  check_form->add_option("--form", form, "Form expression, e.g. \"x1*dy1^(dx2^dy2 - dx3^dy3)\"")->required();
  check_form->add_option("--bc", bc, "D N JD JN Dplus Nplus Dminus Nminus DplusMinus NplusMinus DplusPlus NminusMinus")
      ->required();
  check_form->add_option("--space", space, "plus minus plusplus minusminus deRham");

  auto* verify = app.add_subcommand("verify-tables", "Verify the shipped fixture tables");
  std::string fixture = "all", perturb;
  symbc_variant variant = SYMBC_PRINTED;
  verify->add_option("--fixture", fixture, "Fixture name or all")->capture_default_str();
  verify->add_option("--variant", variant, "printed or corrected")
      ->transform(CLI::CheckedTransformer(variants, CLI::ignore_case));
  verify->add_option("--perturb", perturb, "Testing hook: shift one expected dimension, row:k:delta");

  auto* pairing = app.add_subcommand("pairing", "Pairing matrices between absolute and relative bases");
  int k = -1;
  pairing->add_option("--fixture", fixture, "Fixture name or all")->capture_default_str();
  pairing->add_option("--k", k, "Degree; all degrees when omitted");
  pairing->add_option("--variant", variant, "printed or corrected")
      ->transform(CLI::CheckedTransformer(variants, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  symbc_report* report = nullptr;
  if (*identities) {
    if (auto s = symbc_run_identities(n, cases, seed, &report)) return error(s);
    return emit(report, output);
  }
  if (*cohomology)
    return with_manifold(
        resolve_manifold(manifold, data_dir), [](symbc_manifold* m, symbc_report** r) { return symbc_run_cohomology(m, r); },
        output);
  if (*check_form)
    return with_manifold(
        resolve_manifold(manifold, data_dir),
        [&](symbc_manifold* m, symbc_report** r) {
          return symbc_run_check_form(m, form.c_str(), bc.c_str(), space.empty() ? nullptr : space.c_str(), r);
        },
        output);
  if (*verify) {
    if (auto s = symbc_run_verify_tables(data_dir.c_str(), fixture.c_str(), variant,
                                         perturb.empty() ? nullptr : perturb.c_str(), &report))
      return error(s);
    return emit(report, output);
  }
  if (*pairing) {
    if (auto s = symbc_run_pairing(data_dir.c_str(), fixture.c_str(), k, variant, &report)) return error(s);
    return emit(report, output);
  }
  return kExitUsage;
}
