#pragma once

// Torus-invariant divisors D = sum a_r D_r on a fan, characters of the dual
// lattice, and the linear-equivalence machinery used to restrict divisors to
// orbit closures.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

// An element m of the dual lattice M.
struct Character {
  IntVector coords;
  bool operator==(const Character&) const = default;
};

class TorusDivisor {
 public:
  TorusDivisor(FanPtr fan, IntVector coefficients);
  static TorusDivisor zero(FanPtr fan);
  // The prime divisor D_rho.
  static TorusDivisor prime(FanPtr fan, int rho);

  const FanPtr& fan() const noexcept { return fan_; }
  const IntVector& coefficients() const noexcept { return coefficients_; }
  std::int64_t coefficient(int rho) const { return coefficients_.at(static_cast<std::size_t>(rho)); }
  bool is_zero() const;

  TorusDivisor operator+(const TorusDivisor& other) const;
  TorusDivisor operator-(const TorusDivisor& other) const;
  TorusDivisor operator-() const;
  TorusDivisor scaled(std::int64_t k) const;

  // Same fan (by fingerprint) and same coefficients.
  bool operator==(const TorusDivisor& other) const;

  // "a0,a1,...", the CLI literal form.
  std::string to_string() const;

 private:
  FanPtr fan_;
  IntVector coefficients_;
};

// Parses "a0,a1,...,ak" against the fan's ray order. Throws ParseError.
TorusDivisor parse_divisor(FanPtr fan, std::string_view literal);

// div(chi^m): coefficient <m, u_r> at each ray.
TorusDivisor principal_divisor(const FanPtr& fan, const Character& m);

struct ClearedDivisor {
  Character m;
  TorusDivisor divisor;  // D - div(chi^m), zero at the cleared ray
};

// Uses the dual basis of the lexicographically first maximal cone containing
// rho. Throws DomainError if that cone is not unimodular.
ClearedDivisor clear_ray_coefficient(const TorusDivisor& d, int rho);

// Coefficients of the cleared divisor on rays not adjacent to rho; these
// restrict to zero on V(rho).
struct RestrictionDiagnostics {
  std::vector<std::pair<int, std::int64_t>> discarded;
};

// O(D) restricted to V(rho), as a divisor on the star fan of rho.
TorusDivisor restrict_divisor(const TorusDivisor& d, int rho,
                              RestrictionDiagnostics* diagnostics = nullptr);
// Same, reusing an already computed star fan of rho.
TorusDivisor restrict_divisor(const TorusDivisor& d, int rho, const StarFan& star,
                              RestrictionDiagnostics* diagnostics = nullptr);

// m with d1 - d2 = div(chi^m), if any.
std::optional<Character> is_linearly_equivalent(const TorusDivisor& d1, const TorusDivisor& d2);

// K = -sum D_r.
TorusDivisor canonical_divisor(const FanPtr& fan);

}  // namespace toric
