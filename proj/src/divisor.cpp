#include "toric/divisor.hpp"

#include <algorithm>
#include <charconv>

#include "toric/error.hpp"

namespace toric {

namespace {

void require_same_fan(const TorusDivisor& a, const TorusDivisor& b) {
  if (a.fan() != b.fan() && !(*a.fan() == *b.fan()))
    throw DomainError("divisors live on different fans");
}

}  // namespace

TorusDivisor::TorusDivisor(FanPtr fan, IntVector coefficients)
    : fan_(std::move(fan)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != fan_->num_rays())
    throw DomainError("divisor has " + std::to_string(coefficients_.size()) +
                      " coefficients but the fan has " + std::to_string(fan_->num_rays()) + " rays");
}

TorusDivisor TorusDivisor::zero(FanPtr fan) {
  const auto r = fan->num_rays();
  return TorusDivisor(std::move(fan), IntVector(r, 0));
}

TorusDivisor TorusDivisor::prime(FanPtr fan, int rho) {
  IntVector c(fan->num_rays(), 0);
  c.at(static_cast<std::size_t>(rho)) = 1;
  return TorusDivisor(std::move(fan), std::move(c));
}

bool TorusDivisor::is_zero() const {
  for (auto a : coefficients_)
    if (a != 0) return false;
  return true;
}

TorusDivisor TorusDivisor::operator+(const TorusDivisor& other) const {
  require_same_fan(*this, other);
  IntVector c = coefficients_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(c[i], other.coefficients_[i]);
  return TorusDivisor(fan_, std::move(c));
}

TorusDivisor TorusDivisor::operator-(const TorusDivisor& other) const { return *this + (-other); }

TorusDivisor TorusDivisor::operator-() const { return scaled(-1); }

TorusDivisor TorusDivisor::scaled(std::int64_t k) const {
  IntVector c = coefficients_;
  for (auto& a : c) a = checked_mul(a, k);
  return TorusDivisor(fan_, std::move(c));
}

bool TorusDivisor::operator==(const TorusDivisor& other) const {
  return coefficients_ == other.coefficients_ && (fan_ == other.fan_ || *fan_ == *other.fan_);
}

std::string TorusDivisor::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coefficients_[i]);
  }
  return s;
}

TorusDivisor parse_divisor(FanPtr fan, std::string_view literal) {
  IntVector c;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = std::min(literal.find(',', pos), literal.size());
    std::string_view tok = literal.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    const int column = static_cast<int>(pos) + 1;
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad divisor coefficient '" + std::string(tok) + "'", 1, column);
    c.push_back(v);
    if (comma == literal.size()) break;
    pos = comma + 1;
  }
  if (c.size() != fan->num_rays())
    throw ParseError("divisor has " + std::to_string(c.size()) + " coefficients, fan has " +
                         std::to_string(fan->num_rays()) + " rays",
                     1, 1);
  return TorusDivisor(std::move(fan), std::move(c));
}

TorusDivisor principal_divisor(const FanPtr& fan, const Character& m) {
  if (m.coords.size() != static_cast<std::size_t>(fan->dimension()))
    throw DomainError("character has wrong length");
  IntVector c;
  c.reserve(fan->num_rays());
  for (const auto& u : fan->rays()) c.push_back(dot(m.coords, u));
  return TorusDivisor(fan, std::move(c));
}

ClearedDivisor clear_ray_coefficient(const TorusDivisor& d, int rho) {
  const Fan& fan = *d.fan();
  const std::int64_t a = d.coefficient(rho);
  const auto n = static_cast<std::size_t>(fan.dimension());
  if (a == 0) return {Character{IntVector(n, 0)}, d};
  const auto owners = fan.maximal_cones_containing(Cone{rho});
  const std::size_t sigma = owners.front();
  const auto& dual = fan.dual_basis(sigma);
  if (!dual) throw DomainError("maximal cone containing ray " + std::to_string(rho) + " is not smooth");
  const auto& rays = fan.maximal_cones()[sigma].rays();
  const auto pos = static_cast<std::size_t>(std::find(rays.begin(), rays.end(), rho) - rays.begin());
  Character m{IntVector(n, 0)};
  for (std::size_t i = 0; i < n; ++i) m.coords[i] = checked_mul(a, (*dual)[pos][i]);
  TorusDivisor cleared = d - principal_divisor(d.fan(), m);
  return {std::move(m), std::move(cleared)};
}

TorusDivisor restrict_divisor(const TorusDivisor& d, int rho, RestrictionDiagnostics* diagnostics) {
  return restrict_divisor(d, rho, star_fan(d.fan(), Cone{rho}), diagnostics);
}

TorusDivisor restrict_divisor(const TorusDivisor& d, int rho, const StarFan& star,
                              RestrictionDiagnostics* diagnostics) {
  const TorusDivisor cleared = clear_ray_coefficient(d, rho).divisor;
  IntVector c(star.fan->num_rays(), 0);
  for (std::size_t g = 0; g < cleared.coefficients().size(); ++g) {
    if (static_cast<int>(g) == rho) continue;
    const std::int64_t a = cleared.coefficients()[g];
    if (const auto s = star.original_to_star.at(g)) {
      c[static_cast<std::size_t>(*s)] = a;
    } else if (diagnostics && a != 0) {
      diagnostics->discarded.emplace_back(static_cast<int>(g), a);
    }
  }
  return TorusDivisor(star.fan, std::move(c));
}

std::optional<Character> is_linearly_equivalent(const TorusDivisor& d1, const TorusDivisor& d2) {
  const TorusDivisor diff = d1 - d2;
  const Fan& fan = *d1.fan();
  auto m = solve_integer(fan.rays(), static_cast<std::size_t>(fan.dimension()), diff.coefficients());
  if (!m) return std::nullopt;
  return Character{std::move(*m)};
}

TorusDivisor canonical_divisor(const FanPtr& fan) {
  return TorusDivisor(fan, IntVector(fan->num_rays(), -1));
}

}  // namespace toric
