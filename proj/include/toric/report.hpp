#pragma once

// Seeded verification runs over random divisors and their text reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/divisor.hpp"
#include "toric/euler.hpp"
#include "toric/rational.hpp"
#include "toric/todd.hpp"

namespace toric {

struct ChiReport {
  ChiReport(std::string fan, TorusDivisor d) : fan_name(std::move(fan)), divisor(std::move(d)) {}

  std::string fan_name;
  TorusDivisor divisor;
  Rational chi_hrr;
  std::int64_t chi_recursive = 0;
  std::int64_t chi_cohomology = 0;
  std::vector<InductionStepReport> induction;  // one per ray
  bool serre_hrr = false;
  bool serre_recursive = false;
  bool serre_cohomology = false;
  std::optional<std::int64_t> nef_count;
  // Set when a method threw; the row then counts as failed.
  std::optional<std::string> error;

  bool methods_agree() const;
  bool induction_holds() const;
  bool serre_holds() const { return serre_hrr && serre_recursive && serre_cohomology; }
  bool nef_consistent() const { return !nef_count || *nef_count == chi_recursive; }
  bool passed() const;
};

struct VerificationOptions {
  int trials = 0;
  std::int64_t coeff_lo = -4;
  std::int64_t coeff_hi = 4;
  std::uint64_t seed = 1;
  // Make trial 0 the zero divisor.
  bool force_zero_first = false;
  RecursiveOptions recursive;
};

struct VerificationRun {
  std::string fan_name;
  Rational todd_degree;
  bool ishida = false;
  std::vector<ChiReport> reports;
  bool passed() const;
};

// Random divisors: mt19937_64 seeded with `seed`, coefficients drawn per ray
// in ray order, trial by trial, uniform on [coeff_lo, coeff_hi] by rejection.
std::vector<TorusDivisor> random_divisors(const FanPtr& fan, int count, std::int64_t lo,
                                          std::int64_t hi, std::uint64_t seed);

ChiReport evaluate_divisor(const HrrEngine& engine, RecursiveChiSolver& solver,
                           const std::string& fan_name, const TorusDivisor& d);

VerificationRun run_verification(const FanPtr& fan, const std::string& fan_name,
                                 const VerificationOptions& options);

// Plain-text table followed by "CHI <fan> <divisor> <method> <value>" lines
// and a summary line.
std::string format_report(const VerificationRun& run);

}  // namespace toric
