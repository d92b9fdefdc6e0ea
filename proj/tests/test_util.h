// Copyright 2026 The cohread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COHREAD_TESTS_TEST_UTIL_H_
#define COHREAD_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <span>

#include "gtest/gtest.h"

#include "cohread/linalg.h"
#include "cohread/random.h"

namespace cohread::testing {

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  EXPECT_EQ(a.size(), b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline ::testing::AssertionResult MatrixNear(const ComplexMatrix& actual,
                                             const ComplexMatrix& expected, double tol) {
  if (actual.dim() != expected.dim()) {
    return ::testing::AssertionFailure()
           << "dimension " << actual.dim() << " vs " << expected.dim();
  }
  const double d = max_abs_diff(actual, expected);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "max abs difference " << d << " > " << tol;
}

inline ::testing::AssertionResult VectorNear(std::span<const double> actual,
                                             std::span<const double> expected, double tol) {
  if (actual.size() != expected.size()) {
    return ::testing::AssertionFailure()
           << "length " << actual.size() << " vs " << expected.size();
  }
  const double d = max_abs_diff(actual, expected);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "max abs difference " << d << " > " << tol;
}

inline ComplexMatrix random_matrix(std::size_t dim, Rng& rng) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = rng.complex_normal();
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  ComplexMatrix g = random_matrix(dim, rng);
  ComplexMatrix h = g + g.adjoint();
  h *= 0.5;
  return h;
}

}  // namespace cohread::testing

#endif  // COHREAD_TESTS_TEST_UTIL_H_
