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

#ifndef ECS_FOCK_H
#define ECS_FOCK_H

#include <cstddef>
#include <span>
#include <vector>

#include "ecs/state.h"

namespace ecs::fock {

inline constexpr std::size_t kDefaultNMax = 60;
/// coherent_to_fock refuses expansions whose discarded weight exceeds this.
inline constexpr double kMaxTailBound = 1e-8;

/// Truncated photon-number expansion of a coherent state,
/// coeffs[n] = e^{-|a|^2/2} a^n / sqrt(n!), n = 0..n_max.
struct FockVector {
    std::vector<Complex> coeffs;
    /// Poisson weight beyond n_max, sum_{n > n_max} e^{-|a|^2} |a|^{2n} / n!.
    double tail_bound = 0.0;

    std::size_t n_max() const noexcept {
        return coeffs.size() - 1;
    }
    double norm_squared() const;
};

/// Weight of a Poisson(mean) distribution above n_max, summed directly (no
/// 1 - cdf cancellation).
double poisson_tail(double mean, std::size_t n_max);

/// Throws kOracleRefused when the tail bound exceeds kMaxTailBound.
FockVector coherent_to_fock(ModeAmplitude alpha, std::size_t n_max = kDefaultNMax);

/// sum_n conj(v1[n]) v2[n].
Complex fock_overlap(const FockVector &v1, const FockVector &v2);

/// Squared norm of sum_i coeffs[i] |amps[i]> computed in the truncated Fock
/// basis. When error_bound is given it receives (sum_i |coeffs[i]| sqrt(tail_i))^2,
/// the most the truncation can have removed from the result.
double superposition_norm_squared(std::span<const Complex> coeffs, std::span<const ModeAmplitude> amps,
                                  std::size_t n_max = kDefaultNMax, double *error_bound = nullptr);

}  // namespace ecs::fock

#endif
