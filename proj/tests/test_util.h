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

#ifndef ECS_TESTS_TEST_UTIL_H
#define ECS_TESTS_TEST_UTIL_H

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ecs/state.h"

namespace ecs::testing {

/// Brute-force <a|b> from the photon-number expansion, with n! built from
/// lgamma. Independent of both the closed form and ecs::fock.
inline Complex brute_force_overlap(Complex a, Complex b, int n_max = 60) {
    Complex acc = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        double inv_fact = std::exp(-std::lgamma(n + 1.0));
        acc += std::pow(std::conj(a), n) * std::pow(b, n) * inv_fact;
    }
    return acc * std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b));
}

class RandomStates {
   public:
    explicit RandomStates(std::uint64_t seed) : rng_(seed) {
    }
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }
    int count(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }
    /// Uniform in the disk of the given radius.
    ModeAmplitude amplitude(double radius) {
        return ModeAmplitude(std::polar(radius * std::sqrt(uniform(0, 1)), uniform(0, 2 * M_PI)));
    }
    Complex coefficient() {
        return {uniform(-1, 1), uniform(-1, 1)};
    }
    StateSuperposition state(std::vector<ModeLabel> modes, int max_terms, double radius) {
        int n = count(1, max_terms);
        std::vector<Term> terms;
        for (int i = 0; i < n; ++i) {
            Term t{coefficient(), {}};
            for (std::size_t k = 0; k < modes.size(); ++k) {
                t.amps.push_back(amplitude(radius));
            }
            terms.push_back(std::move(t));
        }
        return StateSuperposition(std::move(modes), std::move(terms));
    }

   private:
    std::mt19937_64 rng_;
};

}  // namespace ecs::testing

#endif
