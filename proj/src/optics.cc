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

#include "ecs/optics.h"

#include <cmath>
#include <numbers>

namespace ecs {

StateSuperposition apply_beam_splitter(const StateSuperposition &s, const BeamSplitterSpec &spec) {
    if (spec.in_1 == spec.in_2) {
        throw Error(ErrorKind::kInvalidArgument, "beam splitter inputs must be distinct modes");
    }
    if (spec.out_1 == spec.out_2) {
        throw Error(ErrorKind::kInvalidArgument, "beam splitter outputs must be distinct modes");
    }
    const std::size_t i1 = s.mode_index(spec.in_1);
    const std::size_t i2 = s.mode_index(spec.in_2);

    std::vector<ModeLabel> modes = s.modes();
    for (const auto &out : {spec.out_1, spec.out_2}) {
        auto k = s.find_mode(out);
        if (k && *k != i1 && *k != i2) {
            throw Error(ErrorKind::kLabelCollision, "beam splitter output '" + out + "' collides with a surviving mode");
        }
    }
    modes[i1] = spec.out_1;
    modes[i2] = spec.out_2;

    const double r = std::numbers::sqrt2;
    std::vector<Term> terms = s.terms();
    for (auto &t : terms) {
        const Complex a = t.amps[i1].value();
        const Complex b = t.amps[i2].value();
        t.amps[i1] = ModeAmplitude((a + b) / r);
        t.amps[i2] = ModeAmplitude((a - b) / r);
    }
    return StateSuperposition(std::move(modes), std::move(terms));
}

StateSuperposition apply_phase_shift(const StateSuperposition &s, const PhaseShiftSpec &spec) {
    if (!std::isfinite(spec.phase)) {
        throw Error(ErrorKind::kInvalidArgument, "phase must be finite");
    }
    const std::size_t k = s.mode_index(spec.mode);
    // Exact rotation for multiples of pi/2 so that phase pi maps a to -a
    // without a 1e-16 imaginary residue.
    Complex rot = std::polar(1.0, spec.phase);
    const double quarter = spec.phase / (std::numbers::pi / 2);
    if (quarter == std::round(quarter)) {
        static constexpr Complex kQuarterTurns[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        long q = std::lround(std::fmod(quarter, 4.0));
        rot = kQuarterTurns[(q % 4 + 4) % 4];
    }
    std::vector<Term> terms = s.terms();
    for (auto &t : terms) {
        t.amps[k] = ModeAmplitude(t.amps[k].value() * rot);
    }
    return StateSuperposition(s.modes(), std::move(terms));
}

StateSuperposition inject_vacuum(const StateSuperposition &s, const ModeLabel &label) {
    if (s.find_mode(label)) {
        throw Error(ErrorKind::kLabelCollision, "mode '" + label + "' already registered");
    }
    std::vector<ModeLabel> modes = s.modes();
    modes.push_back(label);
    std::vector<Term> terms = s.terms();
    for (auto &t : terms) {
        t.amps.emplace_back();
    }
    return StateSuperposition(std::move(modes), std::move(terms));
}

}  // namespace ecs
