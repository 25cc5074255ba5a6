// Copyright 2026 The covobs Authors
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
#include <span>
#include <vector>

namespace covobs {

using Complex = std::complex<double>;

namespace fft {

// Unnormalized DFTs:
//   forward:  X_k = sum_j x_j exp(-2 pi i j k / n)
//   backward: x_j = sum_k X_k exp(+2 pi i j k / n)
// backward(forward(x)) == n * x.  Plans are cached per size and shared across
// threads; execution is reentrant.
std::vector<Complex> forward(std::span<const Complex> input);
std::vector<Complex> backward(std::span<const Complex> input);

/// Circular convolution of equal-length real sequences via one forward pair
/// and one backward transform.
std::vector<double> circular_convolution(std::span<const double> a,
                                         std::span<const double> b);

} // namespace fft
} // namespace covobs
