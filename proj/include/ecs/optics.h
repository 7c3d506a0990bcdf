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

#ifndef ECS_OPTICS_H
#define ECS_OPTICS_H

#include "ecs/state.h"

namespace ecs {

/// A 50:50 beam splitter acting on two registered modes. The outputs replace
/// the inputs in place (out_1 where in_1 was, out_2 where in_2 was), so a
/// splitter also renames the modes it touches.
struct BeamSplitterSpec {
    ModeLabel in_1;
    ModeLabel in_2;
    ModeLabel out_1;
    ModeLabel out_2;
};

struct PhaseShiftSpec {
    ModeLabel mode;
    double phase = 0.0;  // radians
};

/// (a, b) -> ((a + b)/sqrt2, (a - b)/sqrt2) on every term. No reflection
/// phase.
StateSuperposition apply_beam_splitter(const StateSuperposition &s, const BeamSplitterSpec &spec);

/// a -> e^{i phase} a on one mode of every term.
StateSuperposition apply_phase_shift(const StateSuperposition &s, const PhaseShiftSpec &spec);

/// Appends a vacuum mode (amplitude 0 in every term).
StateSuperposition inject_vacuum(const StateSuperposition &s, const ModeLabel &label);

}  // namespace ecs

#endif
