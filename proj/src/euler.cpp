#include "toric/euler.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <functional>
#include <unordered_map>

#include "toric/error.hpp"
#include "toric/random.hpp"
#include "toric/todd.hpp"

namespace toric {

RecursiveOptions RecursiveOptions::from_environment() {
  RecursiveOptions options;
  if (const char* env = std::getenv("TORIC_RECURSION_BUDGET"); env && *env) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (*end != '\0' || v <= 0)
      throw DomainError(std::string("TORIC_RECURSION_BUDGET must be a positive integer, got '") +
                        env + "'");
    options.budget = v;
  }
  return options;
}

RecursiveChiSolver::RecursiveChiSolver(RecursiveOptions options) : options_(options) {}

void RecursiveChiSolver::charge() {
  if (++steps_ > options_.budget)
    throw RecursionBudgetExceeded("recursive Euler characteristic exceeded budget of " +
                                  std::to_string(options_.budget) + " steps");
}

TorusDivisor RecursiveChiSolver::canonical_representative(const TorusDivisor& d) {
  const Fan& fan = *d.fan();
  const std::size_t sigma = fan.maximal_cones_containing(Cone{}).front();
  const auto& dual = fan.dual_basis(sigma);
  if (!dual) throw DomainError("fan is not smooth at cone " + fan.maximal_cones()[sigma].to_string());
  const auto& rays = fan.maximal_cones()[sigma].rays();
  Character m{IntVector(static_cast<std::size_t>(fan.dimension()), 0)};
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::int64_t a = d.coefficient(rays[i]);
    for (std::size_t j = 0; j < m.coords.size(); ++j)
      m.coords[j] = checked_add(m.coords[j], checked_mul(a, (*dual)[i][j]));
  }
  return d - principal_divisor(d.fan(), m);
}

const StarFan& RecursiveChiSolver::star(const FanPtr& fan, int rho) {
  auto key = std::make_pair(fan->fingerprint(), rho);
  auto it = stars_.find(key);
  if (it == stars_.end()) it = stars_.emplace(std::move(key), star_fan(fan, Cone{rho})).first;
  return it->second;
}

const std::vector<int>& RecursiveChiSolver::selection_order(const Fan& fan) {
  auto it = orders_.find(fan.fingerprint());
  if (it != orders_.end()) return it->second;
  std::vector<int> order(fan.num_rays());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (options_.selection_seed) {
    Rng rng(*options_.selection_seed ^ fnv1a(fan.fingerprint()));
    shuffle(order, rng);
  }
  return orders_.emplace(fan.fingerprint(), std::move(order)).first->second;
}

std::int64_t RecursiveChiSolver::chi(const TorusDivisor& d) {
  const FanPtr& fan = d.fan();
  if (fan->dimension() == 0) return 1;
  if (fan->dimension() == 1) {
    // P^1: chi(O(d)) = d + 1 with d the total degree.
    std::int64_t total = 1;
    for (auto a : d.coefficients()) total = checked_add(total, a);
    return total;
  }

  struct Step {
    IntVector key;
    std::int64_t contribution;
  };
  std::vector<Step> chain;
  TorusDivisor current = canonical_representative(d);
  std::int64_t base = 1;
  while (true) {
    if (auto it = memo_.find({fan->fingerprint(), current.coefficients()}); it != memo_.end()) {
      base = it->second;
      break;
    }
    if (current.is_zero()) {
      // chi(O_X) = 1 (Todd genus of a smooth complete toric variety).
      memo_.emplace(std::make_pair(fan->fingerprint(), current.coefficients()), 1);
      base = 1;
      break;
    }
    charge();
    int rho = -1;
    for (int r : selection_order(*fan)) {
      if (current.coefficient(r) != 0) {
        rho = r;
        break;
      }
    }
    const StarFan& st = star(fan, rho);
    const TorusDivisor prime = TorusDivisor::prime(fan, rho);
    if (current.coefficient(rho) > 0) {
      const std::int64_t below = chi(restrict_divisor(current, rho, st));
      chain.push_back({current.coefficients(), below});
      current = current - prime;
    } else {
      TorusDivisor next = current + prime;
      const std::int64_t below = chi(restrict_divisor(next, rho, st));
      chain.push_back({current.coefficients(), -below});
      current = std::move(next);
    }
  }

  std::int64_t value = base;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    value = checked_add(value, it->contribution);
    memo_.emplace(std::make_pair(fan->fingerprint(), std::move(it->key)), value);
  }
  return value;
}

std::int64_t chi_recursive(const TorusDivisor& d, const RecursiveOptions& options) {
  RecursiveChiSolver solver(options);
  return solver.chi(d);
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Visits every lattice point of [lo, hi] (inclusive, per coordinate).
template <typename F>
void for_each_point(const IntVector& lo, const IntVector& hi, F&& visit) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  IntVector p = lo;
  while (true) {
    visit(p);
    std::size_t i = 0;
    while (i < n && p[i] == hi[i]) {
      p[i] = lo[i];
      ++i;
    }
    if (i == n) return;
    ++p[i];
  }
}

void for_each_combination(std::size_t total, std::size_t k,
                          const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
  if (k > total) return;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && static_cast<std::size_t>(idx[i - 1]) == total - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class ComplexEvaluator {
 public:
  explicit ComplexEvaluator(const Fan& fan) {
    if (fan.num_rays() > 62) throw DomainError("cohomology scan supports at most 62 rays");
    for (int k = 1; k <= fan.dimension(); ++k) {
      for (const auto& face : fan.faces(k)) {
        std::uint64_t mask = 0;
        for (int r : face.rays()) mask |= std::uint64_t{1} << r;
        faces_.push_back({mask, (k % 2 == 1) ? 1 : -1});
      }
    }
  }

  // 1 - chi of the subcomplex induced on `mask`.
  std::int64_t contribution(std::uint64_t mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    std::int64_t chi = 0;
    for (const auto& [face, sign] : faces_)
      if ((face & mask) == face) chi += sign;
    cache_.emplace(mask, 1 - chi);
    return 1 - chi;
  }

 private:
  std::vector<std::pair<std::uint64_t, int>> faces_;
  std::unordered_map<std::uint64_t, std::int64_t> cache_;
};

}  // namespace

CohomologyScan scan_graded_cohomology(const TorusDivisor& d, const CohomologyOptions& options) {
  const Fan& fan = *d.fan();
  const auto n = static_cast<std::size_t>(fan.dimension());
  CohomologyScan scan;
  if (n == 0) {
    scan.chi = 1;
    scan.points = 1;
    return scan;
  }

  // Bounding box of the vertices of the arrangement <m, u_r> = -a_r.
  IntVector lo(n, INT64_MAX);
  IntVector hi(n, INT64_MIN);
  for_each_combination(fan.num_rays(), n, [&](const std::vector<int>& rays) {
    IntMatrix a;
    IntVector b;
    for (int r : rays) {
      a.push_back(fan.ray(r));
      b.push_back(-d.coefficient(r));
    }
    const std::int64_t det = determinant(a);
    if (det == 0) return;
    const IntVector num = multiply(adjugate(a), b);
    for (std::size_t j = 0; j < n; ++j) {
      lo[j] = std::min(lo[j], det > 0 ? floor_div(num[j], det) : floor_div(-num[j], -det));
      hi[j] = std::max(hi[j], det > 0 ? ceil_div(num[j], det) : ceil_div(-num[j], -det));
    }
  });
  if (lo[0] == INT64_MAX) throw DomainError("ray generators do not span the lattice");
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] -= options.pad;
    hi[j] += options.pad;
  }

  ComplexEvaluator complex(fan);
  const auto& rays = fan.rays();
  const auto& coeffs = d.coefficients();
  auto contribution_at = [&](const IntVector& m) {
    std::uint64_t mask = 0;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (dot(m, rays[r]) < -coeffs[r]) mask |= std::uint64_t{1} << r;
    ++scan.points;
    return complex.contribution(mask);
  };

  std::int64_t total = 0;
  for_each_point(lo, hi, [&](const IntVector& m) { total += contribution_at(m); });

  int quiet_shells = 0;
  while (quiet_shells < 2) {
    if (scan.shells >= options.max_shells)
      throw ScanRegionError("cohomology scan did not stabilise after " +
                            std::to_string(options.max_shells) + " shells for divisor " +
                            d.to_string());
    IntVector outer_lo = lo;
    IntVector outer_hi = hi;
    for (std::size_t j = 0; j < n; ++j) {
      --outer_lo[j];
      ++outer_hi[j];
    }
    std::int64_t shell = 0;
    for_each_point(outer_lo, outer_hi, [&](const IntVector& m) {
      for (std::size_t j = 0; j < n; ++j)
        if (m[j] < lo[j] || m[j] > hi[j]) {
          shell += contribution_at(m);
          return;
        }
    });
    ++scan.shells;
    total += shell;
    quiet_shells = (shell == 0) ? quiet_shells + 1 : 0;
    lo = std::move(outer_lo);
    hi = std::move(outer_hi);
  }
  scan.chi = total;
  scan.box_lo = std::move(lo);
  scan.box_hi = std::move(hi);
  return scan;
}

std::int64_t chi_graded_cohomology(const TorusDivisor& d) { return scan_graded_cohomology(d).chi; }

std::vector<Character> cartier_data(const TorusDivisor& d) {
  const Fan& fan = *d.fan();
  const auto n = static_cast<std::size_t>(fan.dimension());
  std::vector<Character> out;
  for (std::size_t s = 0; s < fan.maximal_cones().size(); ++s) {
    const auto& dual = fan.dual_basis(s);
    if (!dual) throw DomainError("Cartier data needs a smooth fan");
    const auto& rays = fan.maximal_cones()[s].rays();
    Character m{IntVector(n, 0)};
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        m.coords[j] = checked_add(m.coords[j], checked_mul(-d.coefficient(rays[i]), (*dual)[i][j]));
    out.push_back(std::move(m));
  }
  return out;
}

bool is_nef(const TorusDivisor& d) {
  const Fan& fan = *d.fan();
  for (const auto& m : cartier_data(d))
    for (std::size_t g = 0; g < fan.num_rays(); ++g)
      if (dot(m.coords, fan.rays()[g]) < -d.coefficients()[g]) return false;
  return true;
}

std::optional<std::int64_t> count_lattice_points(const TorusDivisor& d) {
  if (!is_nef(d)) return std::nullopt;
  const Fan& fan = *d.fan();
  const auto n = static_cast<std::size_t>(fan.dimension());
  if (n == 0) return 1;
  // For nef D the polytope is the convex hull of its Cartier data.
  const auto vertices = cartier_data(d);
  IntVector lo = vertices.front().coords;
  IntVector hi = lo;
  for (const auto& v : vertices)
    for (std::size_t j = 0; j < n; ++j) {
      lo[j] = std::min(lo[j], v.coords[j]);
      hi[j] = std::max(hi[j], v.coords[j]);
    }
  std::int64_t count = 0;
  for_each_point(lo, hi, [&](const IntVector& m) {
    for (std::size_t r = 0; r < fan.num_rays(); ++r)
      if (dot(m, fan.rays()[r]) < -d.coefficients()[r]) return;
    ++count;
  });
  return count;
}

std::string to_string(ChiMethod method) {
  switch (method) {
    case ChiMethod::kHrr:
      return "hrr";
    case ChiMethod::kRecursive:
      return "recursive";
    case ChiMethod::kCohomology:
      return "cohomology";
  }
  return "?";
}

std::int64_t chi_by_method(const TorusDivisor& d, ChiMethod method) {
  switch (method) {
    case ChiMethod::kHrr:
      return to_int64(chi_hrr(d));
    case ChiMethod::kRecursive:
      return chi_recursive(d, RecursiveOptions::from_environment());
    case ChiMethod::kCohomology:
      return chi_graded_cohomology(d);
  }
  throw DomainError("unknown method");
}

bool serre_duality_check(const TorusDivisor& d, ChiMethod method) {
  const TorusDivisor dual = canonical_divisor(d.fan()) - d;
  const std::int64_t sign = d.fan()->dimension() % 2 == 0 ? 1 : -1;
  return chi_by_method(d, method) == sign * chi_by_method(dual, method);
}

}  // namespace toric
