#include "toric/report.hpp"

#include <iomanip>
#include <sstream>

#include "toric/error.hpp"
#include "toric/random.hpp"

namespace toric {

bool ChiReport::methods_agree() const {
  return chi_hrr == Rational(chi_recursive) && chi_recursive == chi_cohomology;
}

bool ChiReport::induction_holds() const {
  for (const auto& step : induction)
    if (!step.holds()) return false;
  return true;
}

bool ChiReport::passed() const {
  return !error && methods_agree() && induction_holds() && serre_holds() && nef_consistent();
}

bool VerificationRun::passed() const {
  if (!ishida) return false;
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

std::vector<TorusDivisor> random_divisors(const FanPtr& fan, int count, std::int64_t lo,
                                          std::int64_t hi, std::uint64_t seed) {
  if (lo > hi) throw DomainError("empty coefficient range");
  Rng rng(seed);
  std::vector<TorusDivisor> out;
  for (int t = 0; t < count; ++t) {
    IntVector c(fan->num_rays());
    for (auto& a : c) a = uniform_int(rng, lo, hi);
    out.emplace_back(fan, std::move(c));
  }
  return out;
}

ChiReport evaluate_divisor(const HrrEngine& engine, RecursiveChiSolver& solver,
                           const std::string& fan_name, const TorusDivisor& d) {
  ChiReport r(fan_name, d);
  try {
    const int n = d.fan()->dimension();
    const std::int64_t sign = n % 2 == 0 ? 1 : -1;
    const TorusDivisor dual = canonical_divisor(d.fan()) - d;

    r.chi_hrr = engine.chi(d);
    r.chi_recursive = solver.chi(d);
    r.chi_cohomology = chi_graded_cohomology(d);

    r.serre_hrr = r.chi_hrr == Rational(sign) * engine.chi(dual);
    r.serre_recursive = r.chi_recursive == sign * solver.chi(dual);
    r.serre_cohomology = r.chi_cohomology == sign * chi_graded_cohomology(dual);

    for (std::size_t rho = 0; rho < d.fan()->num_rays(); ++rho)
      r.induction.push_back(verify_induction_step(engine, d, static_cast<int>(rho)));

    r.nef_count = count_lattice_points(d);
  } catch (const std::exception& e) {
    r.error = std::string(e.what());
  }
  return r;
}

VerificationRun run_verification(const FanPtr& fan, const std::string& fan_name,
                                 const VerificationOptions& options) {
  if (options.trials < 0) throw DomainError("trials must be non-negative");
  VerificationRun run;
  run.fan_name = fan_name;
  const HrrEngine engine(fan);
  run.todd_degree = degree(engine.todd());
  run.ishida = run.todd_degree == 1;

  auto divisors = random_divisors(fan, options.trials, options.coeff_lo, options.coeff_hi, options.seed);
  if (options.force_zero_first && !divisors.empty()) divisors.front() = TorusDivisor::zero(fan);

  RecursiveChiSolver solver(options.recursive);
  for (const auto& d : divisors) run.reports.push_back(evaluate_divisor(engine, solver, fan_name, d));
  return run;
}

namespace {

const char* mark(bool ok) { return ok ? "ok" : "FAIL"; }

}  // namespace

std::string format_report(const VerificationRun& run) {
  std::ostringstream out;
  out << "fan " << run.fan_name << "\n";
  out << "ishida deg Td(X) = " << run.todd_degree.get_str() << " " << mark(run.ishida) << "\n";
  if (!run.reports.empty()) {
    out << std::left << std::setw(6) << "trial" << std::setw(28) << "divisor" << std::setw(10) << "hrr"
        << std::setw(10) << "recursive" << std::setw(11) << "cohomology" << std::setw(8) << "nef"
        << std::setw(10) << "induction" << std::setw(7) << "serre" << "status\n";
  }
  std::size_t failures = run.ishida ? 0 : 1;
  for (std::size_t i = 0; i < run.reports.size(); ++i) {
    const auto& r = run.reports[i];
    out << std::left << std::setw(6) << i << std::setw(28) << r.divisor.to_string();
    if (r.error) {
      out << "ERROR " << *r.error << "\n";
      ++failures;
      continue;
    }
    out << std::setw(10) << r.chi_hrr.get_str() << std::setw(10) << r.chi_recursive << std::setw(11)
        << r.chi_cohomology << std::setw(8) << (r.nef_count ? std::to_string(*r.nef_count) : "-")
        << std::setw(10) << mark(r.induction_holds()) << std::setw(7) << mark(r.serre_holds())
        << mark(r.passed()) << "\n";
    if (!r.passed()) ++failures;
  }
  for (const auto& r : run.reports) {
    if (r.error) continue;
    const std::string prefix = "CHI " + run.fan_name + " " + r.divisor.to_string() + " ";
    out << prefix << "hrr " << r.chi_hrr.get_str() << "\n";
    out << prefix << "recursive " << r.chi_recursive << "\n";
    out << prefix << "cohomology " << r.chi_cohomology << "\n";
    if (r.nef_count) out << prefix << "lattice " << *r.nef_count << "\n";
  }
  out << "summary " << run.reports.size() << " trial(s), " << failures << " failure(s): "
      << (failures == 0 ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace toric
