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

#ifndef ECS_PROTOCOLS_H
#define ECS_PROTOCOLS_H

#include <array>
#include <string>
#include <vector>

#include "ecs/protocol_config.h"
#include "ecs/state.h"

namespace ecs {

struct Stage {
    std::string name;
    StateSuperposition state;
};

struct ProtocolReport {
    ProtocolKind kind = ProtocolKind::kAncilla;
    double alpha = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    std::vector<Stage> stages;
    double paper_probability = 0.0;
    double exact_probability = 0.0;
    /// Fidelity of the last stage to build_target_ghz_ecs(alpha).
    double final_fidelity = 0.0;
    /// |amplitude| on the first amplified mode right after post-selection.
    /// Equals sqrt(2) alpha.
    double amplitude_check = 0.0;

    const Stage &stage(const std::string &name) const;
};

/// N (|a a a> + |-a -a -a>), N from the Gram matrix.
StateSuperposition build_target_ghz_ecs(double alpha, const std::array<ModeLabel, 3> &labels = {"a", "b", "c"});

/// Normalized c1 |a a a> + c2 |-a -a -a>.
StateSuperposition build_partial_ghz_ecs(double alpha, double c1, double c2, const std::array<ModeLabel, 3> &labels);

/// Normalized single-mode ancilla c2 |a> + c1 |-a> (weights swapped relative
/// to the three-mode state).
StateSuperposition build_ancilla(double alpha, double c1, double c2, const ModeLabel &label);

/// Single-copy protocol with a single-mode ancilla. Stages:
///   input            a b c d
///   after_bs1        a b e f
///   post_selected    a b e      (unnormalized)
///   after_bs2        a b e1 e2
///   final            a b e2
ProtocolReport run_protocol_1(const ProtocolConfig &cfg);

/// Two-copy protocol. Stages:
///   two_copies         a1 b1 c1 a2 b2 c2
///   after_phase_shift  a1 b1 c1 a2 b2 c2   (second copy weights swapped)
///   after_bs1_bs3      d1 d2 e1 e2 f1 f2
///   post_selected      d1 e1 f1            (unnormalized)
///   after_bs4_bs6      d1' d1'' e1' e1'' f1' f1''
///   final              d1' e1' f1'
ProtocolReport run_protocol_2(const ProtocolConfig &cfg);

ProtocolReport run_protocol(ProtocolKind kind, const ProtocolConfig &cfg);

struct SweepRow {
    double c1 = 0.0;
    double c2 = 0.0;
    double paper_probability = 0.0;
    double exact_probability = 0.0;
    double final_fidelity = 0.0;
};

/// c1 = k / (points + 1) for k = 1..points, c2 = sqrt(1 - c1^2). Rows are
/// ordered by c1 regardless of evaluation order.
std::vector<SweepRow> sweep(ProtocolKind kind, double alpha, int points);

struct Peak {
    double c1 = 0.0;
    double paper_probability = 0.0;
};

/// Row with the largest closed-form probability; ties go to the smaller c1.
Peak find_peak(const std::vector<SweepRow> &rows);

}  // namespace ecs

#endif
