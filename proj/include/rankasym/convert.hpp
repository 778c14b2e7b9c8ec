#pragma once

#include <gmpxx.h>

#include <string>
#include <type_traits>

namespace rankasym {

/// Nearest Real to an exact integer; long double goes through the decimal string.
template <class Real>
Real to_real(const mpz_class& v) {
  if constexpr (std::is_same_v<Real, double>) {
    return v.get_d();
  } else {
    return std::stold(v.get_str());
  }
}

template <class Real>
Real to_real(const mpq_class& v) {
  if constexpr (std::is_same_v<Real, double>) {
    return v.get_d();
  } else {
    return to_real<Real>(v.get_num()) / to_real<Real>(v.get_den());
  }
}

}  // namespace rankasym
