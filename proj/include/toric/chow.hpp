#pragma once

// Cycle classes spanned by orbit closures [V(tau)] on a smooth complete fan,
// multiplication by the ray divisors D_r, and the degree map.
//
// Classes live in the (redundant) spanning set {[V(tau)]}: two classes that
// differ by a linear relation compare unequal, but their degrees agree. Only
// degree() is meaningful as an invariant.

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "toric/divisor.hpp"
#include "toric/fan.hpp"
#include "toric/rational.hpp"

namespace toric {

// coefficient * D_{r1} * D_{r2} * ... (rays applied in the listed order).
struct DivisorPolynomialTerm {
  Rational coefficient;
  std::vector<int> rays;
};

using DivisorPolynomial = std::vector<DivisorPolynomialTerm>;

// Picks one of the maximal cones (indices into Fan::maximal_cones(), listed
// lexicographically smallest first) for the self-intersection move.
using MoveConeChooser = std::function<std::size_t(std::span<const std::size_t>)>;

class CycleClass {
 public:
  using Component = std::map<Cone, Rational>;

  explicit CycleClass(FanPtr fan);
  // [X] = [V(0)].
  static CycleClass fundamental(FanPtr fan);
  static CycleClass orbit(FanPtr fan, const Cone& tau, const Rational& coefficient = 1);

  const FanPtr& fan() const noexcept { return fan_; }
  // Classes of codimension k, keyed by faces with k rays.
  const Component& component(int codim) const { return components_.at(static_cast<std::size_t>(codim)); }

  void add(const Cone& tau, const Rational& coefficient);
  CycleClass& operator+=(const CycleClass& other);
  CycleClass operator+(const CycleClass& other) const;
  CycleClass operator-(const CycleClass& other) const;
  CycleClass scaled(const Rational& k) const;

  bool is_zero() const;
  // Representation equality in the spanning set.
  bool operator==(const CycleClass& other) const { return components_ == other.components_; }

  std::string to_string() const;

 private:
  FanPtr fan_;
  std::vector<Component> components_;
};

// D_rho * c. Transverse terms use the face rule; the self-intersection case
// D_rho * V(tau), rho in tau, is moved off rho with the character dual to
// u_rho in a maximal cone sigma containing tau:
//   D_rho * V(tau) = -sum_{g not in sigma} <m, u_g> D_g * V(tau).
// The default chooser takes the lexicographically first sigma.
CycleClass multiply_ray_divisor(const CycleClass& c, int rho, const MoveConeChooser& chooser = {});

CycleClass apply_divisor_polynomial(const CycleClass& c, std::span<const DivisorPolynomialTerm> terms,
                                    const MoveConeChooser& chooser = {});

// Sum of the codimension-n coefficients; every maximal cone is a point.
Rational degree(const CycleClass& c);

// sum_{k=0}^{n} D^k / k!, expanded into monomials with sorted ray lists.
DivisorPolynomial exp_divisor(const TorusDivisor& d, int n);

}  // namespace toric
