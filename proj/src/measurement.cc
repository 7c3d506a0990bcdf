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

#include "ecs/measurement.h"

#include <algorithm>
#include <cmath>

namespace ecs {

PostSelectOutcome post_select_vacuum(const StateSuperposition &s, std::span<const ModeLabel> modes) {
    std::vector<std::size_t> idx;
    idx.reserve(modes.size());
    for (const auto &m : modes) {
        idx.push_back(s.mode_index(m));
    }
    const double n2 = norm_squared(s);
    if (std::abs(n2 - 1.0) > kNormalizedTolerance) {
        throw Error(ErrorKind::kNotNormalized, "post-selection input must be normalized (norm^2 = " +
                                                   std::to_string(n2) + ")");
    }

    std::vector<Term> kept;
    for (const auto &t : s.terms()) {
        bool dark = std::all_of(idx.begin(), idx.end(),
                                [&](std::size_t k) { return t.amps[k].magnitude() < kVacuumTolerance; });
        if (dark) {
            kept.push_back(t);
        }
    }
    if (kept.empty()) {
        throw EmptySelectionError("post-selection kept no term; success probability 0");
    }
    StateSuperposition with_vacuum(s.modes(), std::move(kept));
    PostSelectOutcome out;
    out.exact_probability = norm_squared(with_vacuum);
    if (out.exact_probability > 1.0 + kProbabilityTolerance) {
        // Filtering non-orthogonal terms is not a projection; for some inputs
        // the kept part outweighs the whole state.
        throw Error(ErrorKind::kToleranceViolation,
                    "kept terms carry norm^2 " + std::to_string(out.exact_probability) +
                        " > 1; term filtering is not a valid measurement for this state");
    }
    out.paper_probability = out.exact_probability;
    out.kept_state = drop_modes(with_vacuum, modes);
    return out;
}

StateSuperposition measure_remove_mode(const StateSuperposition &s, const ModeLabel &mode) {
    const std::size_t k = s.mode_index(mode);
    if (s.empty()) {
        throw Error(ErrorKind::kEmptyState, "measure_remove_mode: state has no terms");
    }
    const double ref = s.terms().front().amps[k].magnitude();
    for (const auto &t : s.terms()) {
        double m = t.amps[k].magnitude();
        if (std::abs(m - ref) > kMagnitudeTolerance * std::max(1.0, ref)) {
            throw Error(ErrorKind::kMagnitudeMismatch,
                        "mode '" + mode + "' carries amplitudes of different magnitude; sign-blind measurement "
                        "is only defined for +/-a branches");
        }
    }
    const ModeLabel labels[] = {mode};
    return normalize(drop_modes(s, labels));
}

StateSuperposition measure_remove_modes(const StateSuperposition &s, std::span<const ModeLabel> modes) {
    StateSuperposition out = s;
    for (const auto &m : modes) {
        out = measure_remove_mode(out, m);
    }
    return out;
}

namespace {

double normalizer(double alpha, double c1, double c2, double overlap_exponent) {
    return 1.0 / std::sqrt(c1 * c1 + c2 * c2 + 2.0 * c1 * c2 * std::exp(-overlap_exponent * alpha * alpha));
}

}  // namespace

double three_mode_normalizer(double alpha, double c1, double c2) {
    return normalizer(alpha, c1, c2, 6.0);
}

double single_mode_normalizer(double alpha, double c1, double c2) {
    return normalizer(alpha, c1, c2, 2.0);
}

double success_probability_paper(ProtocolKind kind, const ProtocolConfig &cfg) {
    auto [c1, c2] = cfg.coefficients();
    if (!(c1 > 0.0) || !(c2 > 0.0)) {
        throw Error(ErrorKind::kInvalidArgument, "closed-form probability needs positive coefficients");
    }
    const double a = cfg.alpha;
    double amp;
    if (kind == ProtocolKind::kAncilla) {
        amp = three_mode_normalizer(a, c1, c2) * single_mode_normalizer(a, c1, c2) * c1 * c2;
    } else {
        double n = three_mode_normalizer(a, c1, c2);
        amp = n * n * c1 * c2;
    }
    return 2.0 * amp * amp;
}

}  // namespace ecs
