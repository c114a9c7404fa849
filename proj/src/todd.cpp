#include "toric/todd.hpp"

#include "toric/error.hpp"

namespace toric {

std::vector<Rational> todd_inverse_series(int n) {
  std::vector<Rational> f;
  Rational factorial = 1;
  for (int j = 0; j <= n; ++j) {
    factorial *= j + 1;
    Rational term = 1 / factorial;
    if (j % 2 == 1) term = -term;
    f.push_back(term);
  }
  return f;
}

ToddCoefficients todd_univariate(int n) {
  if (n < 0) throw DomainError("Todd series order must be non-negative");
  const auto f = todd_inverse_series(n);
  std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
  g[0] = 1 / f[0];
  for (std::size_t k = 1; k < g.size(); ++k) {
    Rational s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += f[j] * g[k - j];
    g[k] = -s / f[0];
  }
  return {std::move(g)};
}

CycleClass apply_todd_factors(const CycleClass& c, std::span<const int> rays, int order) {
  const auto td = todd_univariate(order);
  CycleClass acc = c;
  for (int r : rays) {
    CycleClass power = acc;
    CycleClass next = acc;  // t_0 = 1
    for (int k = 1; k <= order; ++k) {
      power = multiply_ray_divisor(power, r);
      if (power.is_zero()) break;
      next += power.scaled(td.coefficients[static_cast<std::size_t>(k)]);
    }
    acc = std::move(next);
  }
  return acc;
}

CycleClass todd_class(const FanPtr& fan, int order) {
  if (order < 0) order = fan->dimension();
  std::vector<int> rays(fan->num_rays());
  for (std::size_t i = 0; i < rays.size(); ++i) rays[i] = static_cast<int>(i);
  return apply_todd_factors(CycleClass::fundamental(fan), rays, order);
}

HrrEngine::HrrEngine(FanPtr fan, int todd_order) : fan_(fan), todd_(todd_class(fan, todd_order)) {}

Rational HrrEngine::integral(const TorusDivisor& d) const {
  if (!(*d.fan() == *fan_)) throw DomainError("divisor is not on this engine's fan");
  const auto terms = exp_divisor(d, fan_->dimension());
  return degree(apply_divisor_polynomial(todd_, terms));
}

Rational HrrEngine::chi(const TorusDivisor& d) const {
  Rational value = integral(d);
  if (!is_integer(value))
    throw IntegralityError("HRR integral " + value.get_str() + " for divisor " + d.to_string() +
                           " is not an integer");
  return value;
}

Rational chi_hrr(const TorusDivisor& d) { return HrrEngine(d.fan()).chi(d); }

bool verify_ishida(const FanPtr& fan) { return degree(todd_class(fan)) == 1; }

InductionStepReport verify_induction_step(const TorusDivisor& d, int rho) {
  return verify_induction_step(HrrEngine(d.fan()), d, rho);
}

InductionStepReport verify_induction_step(const HrrEngine& engine, const TorusDivisor& d, int rho) {
  const FanPtr& fan = d.fan();
  const int n = fan->dimension();
  InductionStepReport report;
  report.ray = rho;

  const StarFan star = star_fan(fan, Cone{rho});
  report.star_side = HrrEngine(star.fan).integral(restrict_divisor(d, rho, star));

  DivisorPolynomial difference = exp_divisor(d, n);
  for (auto& term : exp_divisor(d - TorusDivisor::prime(fan, rho), n)) {
    term.coefficient = -term.coefficient;
    difference.push_back(std::move(term));
  }
  report.difference_side = degree(apply_divisor_polynomial(engine.todd(), difference));

  std::vector<int> others;
  std::vector<int> adjacent;
  for (std::size_t g = 0; g < fan->num_rays(); ++g) {
    const int gi = static_cast<int>(g);
    if (gi == rho) continue;
    others.push_back(gi);
    if (star.original_to_star[g]) adjacent.push_back(gi);
  }
  const auto exp_terms = exp_divisor(d, n);
  const CycleClass on_ray = multiply_ray_divisor(CycleClass::fundamental(fan), rho);
  report.cancelled_side =
      degree(apply_divisor_polynomial(apply_todd_factors(on_ray, others, n), exp_terms));
  report.adjacent_side =
      degree(apply_divisor_polynomial(apply_todd_factors(on_ray, adjacent, n), exp_terms));
  return report;
}

}  // namespace toric
