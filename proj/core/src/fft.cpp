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

#include "covobs/fft.hpp"

#include "covobs/error.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace covobs::fft {
namespace {

class PlanCache {
  public:
    ~PlanCache() {
        for (auto &[key, plan] : plans_) {
            fftw_destroy_plan(plan);
        }
    }

    fftw_plan get(int n, int sign) {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(n, sign);
        if (auto it = plans_.find(key); it != plans_.end()) {
            return it->second;
        }
        // Planning needs scratch arrays; FFTW_ESTIMATE leaves them untouched.
        std::vector<Complex> in(static_cast<std::size_t>(n));
        std::vector<Complex> out(static_cast<std::size_t>(n));
        fftw_plan plan = fftw_plan_dft_1d(
            n, reinterpret_cast<fftw_complex *>(in.data()),
            reinterpret_cast<fftw_complex *>(out.data()), sign,
            FFTW_ESTIMATE | FFTW_UNALIGNED);
        require(plan != nullptr, ErrorCode::InvalidArgument,
                "FFTW could not create a plan of size " + std::to_string(n));
        plans_.emplace(key, plan);
        return plan;
    }

  private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache &cache() {
    static PlanCache instance;
    return instance;
}

std::vector<Complex> execute(std::span<const Complex> input, int sign) {
    require(!input.empty(), ErrorCode::InvalidArgument, "empty FFT input");
    const int n = static_cast<int>(input.size());
    fftw_plan plan = cache().get(n, sign);
    std::vector<Complex> out(input.size());
    // Out-of-place complex transforms never write to their input.
    auto *in_ptr = reinterpret_cast<fftw_complex *>(const_cast<Complex *>(input.data()));
    fftw_execute_dft(plan, in_ptr, reinterpret_cast<fftw_complex *>(out.data()));
    return out;
}

} // namespace

std::vector<Complex> forward(std::span<const Complex> input) {
    return execute(input, FFTW_FORWARD);
}

std::vector<Complex> backward(std::span<const Complex> input) {
    return execute(input, FFTW_BACKWARD);
}

std::vector<double> circular_convolution(std::span<const double> a,
                                         std::span<const double> b) {
    require(a.size() == b.size(), ErrorCode::InvalidArgument,
            "circular convolution needs equal lengths");
    // Pack both real inputs into one complex transform: z = a + i b,
    // A_k = (Z_k + conj Z_{-k}) / 2, B_k = (Z_k - conj Z_{-k}) / (2i).
    const std::size_t n = a.size();
    std::vector<Complex> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        z[j] = Complex(a[j], b[j]);
    }
    const auto spectrum = forward(z);
    std::vector<Complex> product(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex zk = spectrum[k];
        const Complex zm = std::conj(spectrum[(n - k) % n]);
        const Complex ak = 0.5 * (zk + zm);
        const Complex bk = Complex(0.0, -0.5) * (zk - zm);
        product[k] = ak * bk;
    }
    const auto back = backward(product);
    std::vector<double> result(n);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        result[j] = back[j].real() * scale;
    }
    return result;
}

} // namespace covobs::fft
