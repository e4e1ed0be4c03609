#pragma once

#include <cmath>
#include <complex>

namespace smx_test {

inline bool rel_close(double got, double want, double tol) {
  return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

inline bool cx_close(std::complex<double> got, std::complex<double> want,
                     double tol) {
  return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

}  // namespace smx_test
