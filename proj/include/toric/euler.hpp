#pragma once

// Euler characteristics of O(D) computed without the Chow ring: the induction
// on dimension run as a recursion, a sum over the character lattice of
// simplicial-complex Euler characteristics, and a lattice-point count for nef
// divisors.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/divisor.hpp"
#include "toric/fan.hpp"

namespace toric {

inline constexpr std::int64_t kDefaultRecursionBudget = 10'000'000;

struct RecursiveOptions {
  // Maximum number of non-memoized descent/ascent steps.
  std::int64_t budget = kDefaultRecursionBudget;
  // When set, each fan's ray-selection order is a seeded shuffle instead of
  // input order.
  std::optional<std::uint64_t> selection_seed;

  // Defaults, with TORIC_RECURSION_BUDGET applied when set.
  static RecursiveOptions from_environment();
};

// chi(O(D)) from
//   chi(D) - chi(D - D_r) = chi_{V(r)}(D|V(r))
// with base cases chi = d + 1 on P^1 and chi(O) = 1. Divisors are first moved
// to the representative vanishing on the lexicographically first maximal
// cone; the recursion then walks the remaining coefficients to zero.
class RecursiveChiSolver {
 public:
  explicit RecursiveChiSolver(RecursiveOptions options = {});

  std::int64_t chi(const TorusDivisor& d);

  // Representative of d's class with zero coefficients on the
  // lexicographically first maximal cone.
  static TorusDivisor canonical_representative(const TorusDivisor& d);

  std::int64_t steps() const noexcept { return steps_; }
  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  const StarFan& star(const FanPtr& fan, int rho);
  const std::vector<int>& selection_order(const Fan& fan);
  void charge();

  RecursiveOptions options_;
  std::int64_t steps_ = 0;
  std::map<std::pair<std::string, IntVector>, std::int64_t> memo_;
  std::map<std::pair<std::string, int>, StarFan> stars_;
  std::map<std::string, std::vector<int>> orders_;
};

std::int64_t chi_recursive(const TorusDivisor& d, const RecursiveOptions& options = {});

struct CohomologyOptions {
  // Lattice padding around the arrangement-vertex bounding box.
  int pad = 2;
  // Give up after this many shells beyond the padded box.
  int max_shells = 64;
};

struct CohomologyScan {
  std::int64_t chi = 0;
  IntVector box_lo;  // final scanned box, inclusive
  IntVector box_hi;
  int shells = 0;    // shells examined beyond the padded box
  std::int64_t points = 0;
};

// sum over m of (1 - chi(Delta_m)), Delta_m the subcomplex of the fan induced
// on rays with <m, u_r> < -a_r. Throws ScanRegionError if the shell check
// never stabilises.
CohomologyScan scan_graded_cohomology(const TorusDivisor& d, const CohomologyOptions& options = {});
std::int64_t chi_graded_cohomology(const TorusDivisor& d);

// Cartier data m_sigma with <m_sigma, u_r> = -a_r on sigma's rays.
std::vector<Character> cartier_data(const TorusDivisor& d);
bool is_nef(const TorusDivisor& d);

// |{m : <m, u_r> >= -a_r for all r}| when D is nef, else nullopt.
std::optional<std::int64_t> count_lattice_points(const TorusDivisor& d);

enum class ChiMethod { kHrr, kRecursive, kCohomology };

std::string to_string(ChiMethod method);
std::int64_t chi_by_method(const TorusDivisor& d, ChiMethod method);

// chi(D) == (-1)^n chi(K - D), both sides by `method`.
bool serre_duality_check(const TorusDivisor& d, ChiMethod method);

}  // namespace toric
