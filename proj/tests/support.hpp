#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "irreality/irreality.hpp"

namespace irreality::testing {

inline double max_gap(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline Matrix diag(std::initializer_list<double> values) {
  Matrix m = Matrix::Zero(static_cast<Index>(values.size()), static_cast<Index>(values.size()));
  Index k = 0;
  for (double v : values) m(k, k) = v, ++k;
  return m;
}

inline DensityMatrix ket_density(const Vector& v, const DimsSpec& dims) { return pure_density(v, dims); }

inline DensityMatrix plus_state() { return pure_density(plus_ket(), DimsSpec{2}); }
inline DensityMatrix zero_state() { return pure_density(basis_ket(2, 0), DimsSpec{2}); }
inline DensityMatrix one_state() { return pure_density(basis_ket(2, 1), DimsSpec{2}); }
inline DensityMatrix half_identity() { return maximally_mixed(DimsSpec{2}); }
inline DensityMatrix bell() { return bell_state().density(); }

/// Expects `fn` to throw irreality::Error with the given code.
template <class Fn>
void expect_error(ErrorCode code, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

inline constexpr double kH025 = 0.5623351446188083;  // H(0.25) in nats

}  // namespace irreality::testing
