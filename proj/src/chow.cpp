#include "toric/chow.hpp"

#include <algorithm>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

CycleClass::CycleClass(FanPtr fan)
    : fan_(std::move(fan)), components_(static_cast<std::size_t>(fan_->dimension()) + 1) {}

CycleClass CycleClass::fundamental(FanPtr fan) { return orbit(std::move(fan), Cone{}); }

CycleClass CycleClass::orbit(FanPtr fan, const Cone& tau, const Rational& coefficient) {
  if (!fan->is_face(tau)) throw DomainError("cone " + tau.to_string() + " is not a face");
  CycleClass c(std::move(fan));
  c.add(tau, coefficient);
  return c;
}

void CycleClass::add(const Cone& tau, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto& comp = components_.at(tau.dim());
  auto [it, inserted] = comp.try_emplace(tau, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) comp.erase(it);
  }
}

CycleClass& CycleClass::operator+=(const CycleClass& other) {
  for (const auto& comp : other.components_)
    for (const auto& [tau, k] : comp) add(tau, k);
  return *this;
}

CycleClass CycleClass::operator+(const CycleClass& other) const {
  CycleClass out = *this;
  out += other;
  return out;
}

CycleClass CycleClass::operator-(const CycleClass& other) const { return *this + other.scaled(-1); }

CycleClass CycleClass::scaled(const Rational& k) const {
  CycleClass out(fan_);
  if (k == 0) return out;
  for (const auto& comp : components_)
    for (const auto& [tau, v] : comp) out.add(tau, v * k);
  return out;
}

bool CycleClass::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const auto& c) { return c.empty(); });
}

std::string CycleClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& comp : components_) {
    for (const auto& [tau, k] : comp) {
      if (!first) out << " + ";
      first = false;
      out << k.get_str() << "*V" << tau.to_string();
    }
  }
  if (first) out << "0";
  return out.str();
}

namespace {

// D_rho * [V(tau)] accumulated into `out` with weight k.
void multiply_orbit(const Fan& fan, const Cone& tau, const Rational& k, int rho,
                    const MoveConeChooser& chooser, CycleClass& out) {
  if (!tau.contains(rho)) {
    const Cone joined = tau.with(rho);
    if (fan.is_face(joined)) out.add(joined, k);
    return;
  }
  const auto owners = fan.maximal_cones_containing(tau);
  const std::size_t sigma_index = chooser ? chooser(owners) : owners.front();
  const Cone& sigma = fan.maximal_cones()[sigma_index];
  const auto& dual = fan.dual_basis(sigma_index);
  if (!dual) throw DomainError("move rule needs a smooth cone, " + sigma.to_string() + " is not");
  const auto& srays = sigma.rays();
  const auto pos = static_cast<std::size_t>(std::find(srays.begin(), srays.end(), rho) - srays.begin());
  const IntVector& m = (*dual)[pos];
  for (std::size_t g = 0; g < fan.num_rays(); ++g) {
    const int gi = static_cast<int>(g);
    if (sigma.contains(gi)) continue;
    const std::int64_t pairing = dot(m, fan.ray(gi));
    if (pairing == 0) continue;
    const Cone joined = tau.with(gi);
    if (fan.is_face(joined)) out.add(joined, k * Rational(-pairing));
  }
}

}  // namespace

CycleClass multiply_ray_divisor(const CycleClass& c, int rho, const MoveConeChooser& chooser) {
  const Fan& fan = *c.fan();
  if (rho < 0 || static_cast<std::size_t>(rho) >= fan.num_rays())
    throw DomainError("ray index " + std::to_string(rho) + " out of range");
  CycleClass out(c.fan());
  for (int codim = 0; codim <= fan.dimension(); ++codim)
    for (const auto& [tau, k] : c.component(codim)) multiply_orbit(fan, tau, k, rho, chooser, out);
  return out;
}

CycleClass apply_divisor_polynomial(const CycleClass& c, std::span<const DivisorPolynomialTerm> terms,
                                    const MoveConeChooser& chooser) {
  CycleClass out(c.fan());
  for (const auto& term : terms) {
    if (term.coefficient == 0) continue;
    if (static_cast<int>(term.rays.size()) > c.fan()->dimension()) continue;
    CycleClass p = c;
    for (int r : term.rays) {
      p = multiply_ray_divisor(p, r, chooser);
      if (p.is_zero()) break;
    }
    out += p.scaled(term.coefficient);
  }
  return out;
}

Rational degree(const CycleClass& c) {
  Rational sum = 0;
  for (const auto& [tau, k] : c.component(c.fan()->dimension())) sum += k;
  return sum;
}

namespace {

// Nondecreasing sequences of `support` indices of length `remaining`.
void expand_monomials(const std::vector<int>& support, const IntVector& coeffs, std::size_t start,
                      int remaining, std::vector<int>& current, Rational weight, int run_length,
                      DivisorPolynomial& out) {
  if (remaining == 0) {
    out.push_back({weight, current});
    return;
  }
  for (std::size_t i = start; i < support.size(); ++i) {
    const int r = support[i];
    const int run = (!current.empty() && current.back() == r) ? run_length + 1 : 1;
    // a^e / e! built one factor at a time: multiply by a / e.
    Rational w = weight * Rational(coeffs[static_cast<std::size_t>(r)]) / Rational(run);
    current.push_back(r);
    expand_monomials(support, coeffs, i, remaining - 1, current, w, run, out);
    current.pop_back();
  }
}

}  // namespace

DivisorPolynomial exp_divisor(const TorusDivisor& d, int n) {
  std::vector<int> support;
  for (std::size_t i = 0; i < d.coefficients().size(); ++i)
    if (d.coefficients()[i] != 0) support.push_back(static_cast<int>(i));
  DivisorPolynomial out;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> current;
    expand_monomials(support, d.coefficients(), 0, k, current, Rational(1), 0, out);
  }
  return out;
}

}  // namespace toric
