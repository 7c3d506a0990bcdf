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

#ifndef ECS_VERIFY_H
#define ECS_VERIFY_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ecs {

struct VerifyOptions {
    std::size_t n_max = 60;
    int trials = 200;
    std::uint64_t seed = 42;
    /// Random amplitudes are drawn uniformly from the disk |a| <= amp_max.
    double amp_max = 2.0;
};

struct VerifyCheck {
    std::string name;
    int checked = 0;
    int refused = 0;
    double max_deviation = 0.0;
    /// Largest deviation/tolerance ratio seen; the check passes when <= 1.
    double worst_ratio = 0.0;
    double tolerance = 0.0;
    bool passed() const noexcept {
        return worst_ratio <= 1.0;
    }
};

/// Randomized consistency checks of the analytic core:
///   overlap      coherent_overlap vs the truncated Fock inner product
///   norm         Gram norm of single-mode superpositions vs Fock norm
///   bs_gram      coefficient-weighted Gram matrix before and after a beam
///                splitter on random two-mode states
///   bs_twice     fidelity of BS(BS(s)) to s
/// Fock cases whose truncation tail exceeds the oracle limit are counted as
/// refused, not failed.
std::vector<VerifyCheck> run_verification(const VerifyOptions &opts);

}  // namespace ecs

#endif
