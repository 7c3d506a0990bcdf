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

#ifndef ECS_MEASUREMENT_H
#define ECS_MEASUREMENT_H

#include <span>

#include "ecs/protocol_config.h"
#include "ecs/state.h"

namespace ecs {

/// |amp| below this counts as "no photon" for an ideal detector.
inline constexpr double kVacuumTolerance = 1e-9;
/// Post-selection expects its input normalized to within this.
inline constexpr double kNormalizedTolerance = 1e-10;
/// Slack on exact_probability <= 1.
inline constexpr double kProbabilityTolerance = 1e-12;
/// Relative spread allowed among the magnitudes on a mode that is measured
/// without resolving its sign.
inline constexpr double kMagnitudeTolerance = 1e-9;

struct PostSelectOutcome {
    /// Surviving terms, vacuum modes removed, not renormalized.
    StateSuperposition kept_state;
    /// Closed-form probability supplied by the protocol layer. Equal to
    /// exact_probability for generic use.
    double paper_probability = 0.0;
    /// Squared norm of the surviving sub-superposition.
    double exact_probability = 0.0;
};

/// Ideal-detector post-selection on "no photon in every listed mode".
///
/// This is term filtering: a term survives when each listed mode carries the
/// vacuum amplitude. It is not the projector <0| onto the vacuum, which would
/// also keep the small vacuum component of every non-vacuum coherent state.
/// Throws EmptySelectionError when no term survives, and kToleranceViolation
/// when the surviving terms have squared norm above 1 (possible when dark and
/// bright terms interfere destructively).
PostSelectOutcome post_select_vacuum(const StateSuperposition &s, std::span<const ModeLabel> modes);

/// Photon-number measurement of `mode` that cannot tell |a> from |-a>: the
/// mode is discarded from every term and the rest is renormalized. Only
/// defined when every term carries the same |amplitude| on that mode.
StateSuperposition measure_remove_mode(const StateSuperposition &s, const ModeLabel &mode);

/// measure_remove_mode applied to each label in order.
StateSuperposition measure_remove_modes(const StateSuperposition &s, std::span<const ModeLabel> modes);

/// Closed-form normalizers of the partially entangled inputs, for real
/// positive alpha and coefficients:
///   three-mode  [c1^2 + c2^2 + 2 c1 c2 e^{-6 alpha^2}]^{-1/2}
///   single-mode [c1^2 + c2^2 + 2 c1 c2 e^{-2 alpha^2}]^{-1/2}
double three_mode_normalizer(double alpha, double c1, double c2);
double single_mode_normalizer(double alpha, double c1, double c2);

/// Closed-form success probability.
///   kAncilla:  2 (N3 N1 c1 c2)^2
///   kTwoCopy:  2 (N3^2 c1 c2)^2
/// where N3 and N1 are the three-mode and single-mode normalizers. These
/// drop the overlap between the two surviving branches; see
/// PostSelectOutcome::exact_probability for the Gram-matrix value.
double success_probability_paper(ProtocolKind kind, const ProtocolConfig &cfg);

}  // namespace ecs

#endif
