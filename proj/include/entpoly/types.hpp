// Copyright 2026 The entpoly authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace entpoly {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// d^n as a 64-bit integer. Throws on overflow.
std::int64_t ipow(int base, int exp);

/// Stride of `site` in a length-N multi-index with site 0 most significant:
/// index = sum_i digit_i * d^(N-1-i).
inline std::int64_t site_stride(int local_dim, int num_sites, int site) {
  return ipow(local_dim, num_sites - 1 - site);
}

inline int digit_at(std::int64_t index, std::int64_t stride, int local_dim) {
  return static_cast<int>((index / stride) % local_dim);
}

}  // namespace entpoly
