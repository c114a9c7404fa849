#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace toric {

using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Caller must check is_integer() and that the value fits.
inline std::int64_t to_int64(const Rational& r) { return r.get_num().get_si(); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace toric
