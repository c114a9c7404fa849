#pragma once

// Todd series, the Todd class prod_r D_r / (1 - e^{-D_r}), and the
// Hirzebruch-Riemann-Roch Euler characteristic deg(e^D Td(X)).

#include <span>
#include <vector>

#include "toric/chow.hpp"
#include "toric/divisor.hpp"
#include "toric/rational.hpp"

namespace toric {

// t_0..t_n with sum t_k x^k == x / (1 - e^{-x}) mod x^{n+1}.
struct ToddCoefficients {
  std::vector<Rational> coefficients;
  int order() const { return static_cast<int>(coefficients.size()) - 1; }
};

// Inverts the series (1 - e^{-x}) / x = sum_j (-1)^j x^j / (j+1)!.
ToddCoefficients todd_univariate(int n);

// The truncated series (1 - e^{-x}) / x through degree n.
std::vector<Rational> todd_inverse_series(int n);

// c * prod_{r in rays} Td(D_r), each factor truncated at `order` and applied
// in the given ray order.
CycleClass apply_todd_factors(const CycleClass& c, std::span<const int> rays, int order);

// Td(X) applied to [X], rays in input order. order < 0 means the dimension.
CycleClass todd_class(const FanPtr& fan, int order = -1);

// Caches Td(X) for repeated Euler characteristics on one fan.
class HrrEngine {
 public:
  explicit HrrEngine(FanPtr fan, int todd_order = -1);

  const FanPtr& fan() const noexcept { return fan_; }
  const CycleClass& todd() const noexcept { return todd_; }

  // deg(e^D Td(X)), without the integrality check.
  Rational integral(const TorusDivisor& d) const;
  // Same, throwing IntegralityError when the value is not an integer.
  Rational chi(const TorusDivisor& d) const;

 private:
  FanPtr fan_;
  CycleClass todd_;
};

Rational chi_hrr(const TorusDivisor& d);

// deg Td(X) == 1.
bool verify_ishida(const FanPtr& fan);

struct InductionStepReport {
  int ray = -1;
  // chi_hrr on the star fan of the restricted divisor.
  Rational star_side;
  // deg((e^D - e^{D - D_r}) Td(X)).
  Rational difference_side;
  // deg(e^D D_r prod_{g != r} Td(D_g)), the form after cancelling r's factor.
  Rational cancelled_side;
  // deg(e^D D_r prod_{g adjacent to r} Td(D_g)).
  Rational adjacent_side;
  bool holds() const {
    return star_side == difference_side && difference_side == cancelled_side &&
           cancelled_side == adjacent_side;
  }
};

InductionStepReport verify_induction_step(const TorusDivisor& d, int rho);
// Reuses `engine` for the ambient fan (its fan must be d's fan).
InductionStepReport verify_induction_step(const HrrEngine& engine, const TorusDivisor& d, int rho);

}  // namespace toric
