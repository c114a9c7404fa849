// toric: batch command-line front end for the toric Euler-characteristic engine.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "toric/catalog.hpp"
#include "toric/divisor.hpp"
#include "toric/error.hpp"
#include "toric/euler.hpp"
#include "toric/fan.hpp"
#include "toric/report.hpp"
#include "toric/todd.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

using toric::ChiMethod;

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw toric::Error("coefficient range must look like LO..HI");
  try {
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const long long lo = std::stoll(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument("lo");
    const long long hi = std::stoll(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument("hi");
    if (lo > hi) throw toric::Error("coefficient range LO..HI needs LO <= HI");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw toric::Error("coefficient range must look like LO..HI, got '" + text + "'");
  }
}

int run_check(const std::string& fan_arg) {
  const auto named = toric::resolve_fan(fan_arg);
  const auto& fan = *named.fan;
  std::cout << "fan " << named.label << "\n"
            << "dimension " << fan.dimension() << "\n"
            << "rays " << fan.num_rays() << "\n"
            << "maximal_cones " << fan.maximal_cones().size() << "\n";
  for (int k = 0; k <= fan.dimension(); ++k)
    std::cout << "faces[" << k << "] " << fan.faces(k).size() << "\n";
  const auto smooth = toric::is_smooth(fan);
  std::cout << "smooth " << (smooth ? "yes" : "no");
  if (!smooth)
    std::cout << " (cone " << smooth.witness->to_string() << " has determinant "
              << smooth.witness_determinant << ")";
  std::cout << "\n";
  const auto complete = toric::is_complete(fan);
  std::cout << "complete " << (complete ? "yes" : "no");
  if (!complete) {
    std::cout << " (" << complete.reason;
    if (complete.wall) std::cout << ": " << complete.wall->to_string();
    if (complete.point) {
      std::cout << ": point";
      for (auto x : *complete.point) std::cout << " " << x;
    }
    std::cout << ")";
  }
  std::cout << "\n";
  return smooth && complete ? kOk : kCheckFailed;
}

void require_smooth_complete(const toric::NamedFan& named) {
  if (const auto s = toric::is_smooth(*named.fan); !s)
    throw toric::DomainError("fan " + named.label + " is not smooth at cone " + s.witness->to_string());
  if (const auto c = toric::is_complete(*named.fan); !c)
    throw toric::DomainError("fan " + named.label + " is not complete: " + c.reason);
}

int run_chi(const std::string& fan_arg, const std::string& divisor_text, const std::string& method) {
  const auto named = toric::resolve_fan(fan_arg);
  require_smooth_complete(named);
  const auto d = toric::parse_divisor(named.fan, divisor_text);
  std::vector<ChiMethod> methods;
  if (method == "hrr" || method == "all") methods.push_back(ChiMethod::kHrr);
  if (method == "recursive" || method == "all") methods.push_back(ChiMethod::kRecursive);
  if (method == "cohomology" || method == "all") methods.push_back(ChiMethod::kCohomology);
  std::vector<std::int64_t> values;
  for (auto m : methods) {
    values.push_back(toric::chi_by_method(d, m));
    std::cout << "CHI " << named.label << " " << d.to_string() << " " << toric::to_string(m) << " "
              << values.back() << "\n";
  }
  if (auto count = toric::count_lattice_points(d); count && method == "all")
    std::cout << "CHI " << named.label << " " << d.to_string() << " lattice " << *count << "\n";
  for (auto v : values)
    if (v != values.front()) {
      std::cout << "methods disagree\n";
      return kCheckFailed;
    }
  return kOk;
}

int run_ishida(const std::string& fan_arg) {
  const auto named = toric::resolve_fan(fan_arg);
  require_smooth_complete(named);
  const auto td = toric::todd_class(named.fan);
  const auto deg = toric::degree(td);
  const bool ok = deg == 1;
  std::cout << "fan " << named.label << "\n"
            << "todd_class " << td.to_string() << "\n"
            << "degree " << deg.get_str() << "\n"
            << "ishida " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kCheckFailed;
}

int run_verify_hrr(const std::string& fan_arg, int trials, const std::string& range, std::uint64_t seed,
                   bool include_zero) {
  const auto named = toric::resolve_fan(fan_arg);
  require_smooth_complete(named);
  toric::VerificationOptions options;
  options.trials = trials;
  std::tie(options.coeff_lo, options.coeff_hi) = parse_range(range);
  options.seed = seed;
  options.force_zero_first = include_zero;
  options.recursive = toric::RecursiveOptions::from_environment();
  const auto run = toric::run_verification(named.fan, named.label, options);
  std::cout << toric::format_report(run);
  return run.passed() ? kOk : kCheckFailed;
}

int run_verify_step(const std::string& fan_arg, const std::string& divisor_text, int ray) {
  const auto named = toric::resolve_fan(fan_arg);
  require_smooth_complete(named);
  const auto d = toric::parse_divisor(named.fan, divisor_text);
  if (ray < 0 || static_cast<std::size_t>(ray) >= named.fan->num_rays())
    throw toric::DomainError("ray index " + std::to_string(ray) + " out of range");
  const auto report = toric::verify_induction_step(d, ray);
  const auto star = toric::star_fan(named.fan, toric::Cone{ray});
  std::cout << "fan " << named.label << "\n"
            << "divisor " << d.to_string() << "\n"
            << "ray " << ray << "\n"
            << "star_rays";
  for (int g : star.star_to_original) std::cout << " " << g;
  std::cout << "\n"
            << "restricted " << toric::restrict_divisor(d, ray, star).to_string() << "\n"
            << "star_side " << report.star_side.get_str() << "\n"
            << "difference_side " << report.difference_side.get_str() << "\n"
            << "cancelled_side " << report.cancelled_side.get_str() << "\n"
            << "adjacent_side " << report.adjacent_side.get_str() << "\n"
            << "step " << (report.holds() ? "PASS" : "FAIL") << "\n";
  return report.holds() ? kOk : kCheckFailed;
}

int run_catalog_list() {
  for (const auto& e : toric::catalog()) {
    std::cout << e.name;
    if (!e.parameters.empty()) std::cout << " " << e.parameters;
    std::cout << "\n";
  }
  std::cout << "standard:";
  for (const auto& nf : toric::standard_catalog()) std::cout << " " << nf.label;
  std::cout << "\n";
  return kOk;
}

int run_catalog_emit(const std::string& name, const std::vector<std::int64_t>& params) {
  std::cout << toric::format_fan(*toric::build_catalog(name, params));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler characteristics of line bundles on smooth complete toric varieties"};
  app.require_subcommand(1);

  std::string fan_arg;
  std::string divisor_text;
  std::string method = "all";
  int trials = 100;
  std::string range = "-4..4";
  std::uint64_t seed = 1;
  bool include_zero = false;
  int ray = 0;
  std::string catalog_name;
  std::vector<std::int64_t> catalog_params;

  auto* check = app.add_subcommand("check", "validate a fan, report smoothness and completeness");
  check->add_option("fan", fan_arg, "fan file or catalog:NAME[:PARAMS]")->required();

  auto* chi = app.add_subcommand("chi", "Euler characteristic of O(D)");
  chi->add_option("fan", fan_arg, "fan file or catalog:NAME[:PARAMS]")->required();
  chi->add_option("--divisor", divisor_text, "coefficients a0,a1,... in ray order")->required();
  chi->add_option("--method", method, "hrr|recursive|cohomology|all")
      ->check(CLI::IsMember({"hrr", "recursive", "cohomology", "all"}));

  auto* ishida = app.add_subcommand("verify-ishida", "check deg Td(X) = 1");
  ishida->add_option("fan", fan_arg, "fan file or catalog:NAME[:PARAMS]")->required();

  auto* verify = app.add_subcommand("verify-hrr", "compare all methods on seeded random divisors");
  verify->add_option("fan", fan_arg, "fan file or catalog:NAME[:PARAMS]")->required();
  verify->add_option("--trials", trials, "number of random divisors")->check(CLI::NonNegativeNumber);
  verify->add_option("--coeff-range", range, "coefficient range LO..HI (use --coeff-range=LO..HI for negative LO)");
  verify->add_option("--seed", seed, "PRNG seed");
  verify->add_flag("--include-zero", include_zero, "make the first trial the zero divisor");

  auto* step = app.add_subcommand("verify-step", "check the induction identity for one ray");
  step->add_option("fan", fan_arg, "fan file or catalog:NAME[:PARAMS]")->required();
  step->add_option("--divisor", divisor_text, "coefficients a0,a1,... in ray order")->required();
  step->add_option("--ray", ray, "ray index")->required();

  auto* cat = app.add_subcommand("catalog", "list or emit catalog fans");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list catalog entries");
  auto* emit = cat->add_subcommand("emit", "print a catalog fan in fan-file format");
  emit->add_option("name", catalog_name, "catalog entry")->required();
  emit->add_option("params", catalog_params, "integer parameters");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return run_check(fan_arg);
    if (*chi) return run_chi(fan_arg, divisor_text, method);
    if (*ishida) return run_ishida(fan_arg);
    if (*verify) return run_verify_hrr(fan_arg, trials, range, seed, include_zero);
    if (*step) return run_verify_step(fan_arg, divisor_text, ray);
    if (*cat) {
      if (*emit) return run_catalog_emit(catalog_name, catalog_params);
      return run_catalog_list();
    }
  } catch (const toric::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
