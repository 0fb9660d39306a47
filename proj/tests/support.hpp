#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace hofd::test {

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace hofd::test
