// Copyright 2026 The ecs-concentration Authors
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

#include "ecs/fock.h"

#include <cmath>

namespace ecs::fock {

double FockVector::norm_squared() const {
    double acc = 0.0;
    for (const auto &c : coeffs) {
        acc += std::norm(c);
    }
    return acc;
}

double poisson_tail(double mean, std::size_t n_max) {
    if (mean == 0.0) {
        return 0.0;
    }
    // p_n in log space up to n_max + 1, then sum forward until terms vanish.
    double log_p = -mean;
    for (std::size_t n = 1; n <= n_max + 1; ++n) {
        log_p += std::log(mean) - std::log(static_cast<double>(n));
    }
    double p = std::exp(log_p);
    double tail = 0.0;
    for (std::size_t n = n_max + 1; n < n_max + 2000; ++n) {
        tail += p;
        p *= mean / static_cast<double>(n + 1);
        if (p < tail * 1e-17 || p == 0.0) {
            break;
        }
    }
    return tail;
}

FockVector coherent_to_fock(ModeAmplitude alpha, std::size_t n_max) {
    if (n_max < 1) {
        throw Error(ErrorKind::kInvalidArgument, "n_max must be at least 1");
    }
    const Complex a = alpha.value();
    FockVector v;
    v.tail_bound = poisson_tail(std::norm(a), n_max);
    if (v.tail_bound > kMaxTailBound) {
        throw Error(ErrorKind::kOracleRefused, "Fock truncation at n_max = " + std::to_string(n_max) +
                                                   " discards weight " + std::to_string(v.tail_bound));
    }
    v.coeffs.resize(n_max + 1);
    v.coeffs[0] = std::exp(-0.5 * std::norm(a));
    for (std::size_t n = 0; n < n_max; ++n) {
        v.coeffs[n + 1] = v.coeffs[n] * a / std::sqrt(static_cast<double>(n + 1));
    }
    return v;
}

Complex fock_overlap(const FockVector &v1, const FockVector &v2) {
    if (v1.coeffs.size() != v2.coeffs.size()) {
        throw Error(ErrorKind::kLengthMismatch, "Fock vectors of different length");
    }
    Complex acc = 0.0;
    for (std::size_t n = 0; n < v1.coeffs.size(); ++n) {
        acc += std::conj(v1.coeffs[n]) * v2.coeffs[n];
    }
    return acc;
}

double superposition_norm_squared(std::span<const Complex> coeffs, std::span<const ModeAmplitude> amps,
                                  std::size_t n_max, double *error_bound) {
    if (coeffs.size() != amps.size()) {
        throw Error(ErrorKind::kLengthMismatch, "one coefficient per amplitude required");
    }
    std::vector<Complex> sum(n_max + 1, 0.0);
    double tail_amplitude = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        FockVector v = coherent_to_fock(amps[i], n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            sum[n] += coeffs[i] * v.coeffs[n];
        }
        tail_amplitude += std::abs(coeffs[i]) * std::sqrt(v.tail_bound);
    }
    double acc = 0.0;
    for (const auto &c : sum) {
        acc += std::norm(c);
    }
    if (error_bound) {
        *error_bound = tail_amplitude * tail_amplitude;
    }
    return acc;
}

}  // namespace ecs::fock
