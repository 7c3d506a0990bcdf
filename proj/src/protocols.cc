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

#include "ecs/protocols.h"

#include <cmath>
#include <numbers>

#include "ecs/measurement.h"
#include "ecs/optics.h"

namespace ecs {

namespace {

constexpr double kPhaseCheckTolerance = 1e-12;

StateSuperposition ghz_pair(double alpha, double c1, double c2, const std::array<ModeLabel, 3> &labels) {
    const ModeAmplitude plus(alpha);
    const ModeAmplitude minus(-alpha);
    std::vector<Term> terms{
        Term{c1, {plus, plus, plus}},
        Term{c2, {minus, minus, minus}},
    };
    return StateSuperposition({labels.begin(), labels.end()}, std::move(terms));
}

StateSuperposition normalized_input(const StateSuperposition &s) {
    StateSuperposition trimmed = simplify(s);
    if (trimmed.empty()) {
        throw Error(ErrorKind::kDegenerateState, "input state has only zero weights");
    }
    return normalize(trimmed);
}

void require_alpha(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw Error(ErrorKind::kInvalidArgument, "alpha must be finite and positive");
    }
}

StateSuperposition split_mode(const StateSuperposition &s, const ModeLabel &mode, const ModeLabel &out_1,
                              const ModeLabel &out_2) {
    const ModeLabel port = mode + "_vac";
    return apply_beam_splitter(inject_vacuum(s, port), BeamSplitterSpec{mode, port, out_1, out_2});
}

}  // namespace

const Stage &ProtocolReport::stage(const std::string &name) const {
    for (const auto &st : stages) {
        if (st.name == name) {
            return st;
        }
    }
    throw Error(ErrorKind::kInvalidArgument, "no stage named '" + name + "'");
}

StateSuperposition build_target_ghz_ecs(double alpha, const std::array<ModeLabel, 3> &labels) {
    require_alpha(alpha);
    return normalize(ghz_pair(alpha, 1.0, 1.0, labels));
}

StateSuperposition build_partial_ghz_ecs(double alpha, double c1, double c2,
                                         const std::array<ModeLabel, 3> &labels) {
    require_alpha(alpha);
    return normalized_input(ghz_pair(alpha, c1, c2, labels));
}

StateSuperposition build_ancilla(double alpha, double c1, double c2, const ModeLabel &label) {
    require_alpha(alpha);
    std::vector<Term> terms{
        Term{c2, {ModeAmplitude(alpha)}},
        Term{c1, {ModeAmplitude(-alpha)}},
    };
    return normalized_input(StateSuperposition({label}, std::move(terms)));
}

ProtocolReport run_protocol_1(const ProtocolConfig &cfg) {
    auto [beta, gamma] = cfg.coefficients();
    const double alpha = cfg.alpha;
    ProtocolReport r;
    r.kind = ProtocolKind::kAncilla;
    r.alpha = alpha;
    r.c1 = beta;
    r.c2 = gamma;

    StateSuperposition input =
        tensor(build_partial_ghz_ecs(alpha, beta, gamma, {"a", "b", "c"}), build_ancilla(alpha, beta, gamma, "d"));
    r.stages.push_back({"input", input});

    StateSuperposition mixed = apply_beam_splitter(input, {"c", "d", "e", "f"});
    r.stages.push_back({"after_bs1", mixed});

    const ModeLabel dark[] = {"f"};
    PostSelectOutcome sel = post_select_vacuum(mixed, dark);
    r.stages.push_back({"post_selected", sel.kept_state});
    r.exact_probability = sel.exact_probability;
    r.amplitude_check = sel.kept_state.amplitude(0, "e").magnitude();

    StateSuperposition split = split_mode(sel.kept_state, "e", "e1", "e2");
    r.stages.push_back({"after_bs2", split});

    StateSuperposition final_state = measure_remove_mode(split, "e1");
    r.stages.push_back({"final", final_state});

    r.paper_probability = success_probability_paper(ProtocolKind::kAncilla, cfg);
    r.final_fidelity = fidelity(final_state, build_target_ghz_ecs(alpha));
    return r;
}

ProtocolReport run_protocol_2(const ProtocolConfig &cfg) {
    auto [delta, eta] = cfg.coefficients();
    const double alpha = cfg.alpha;
    ProtocolReport r;
    r.kind = ProtocolKind::kTwoCopy;
    r.alpha = alpha;
    r.c1 = delta;
    r.c2 = eta;

    StateSuperposition first = build_partial_ghz_ecs(alpha, delta, eta, {"a1", "b1", "c1"});
    StateSuperposition second = build_partial_ghz_ecs(alpha, delta, eta, {"a2", "b2", "c2"});
    r.stages.push_back({"two_copies", tensor(first, second)});

    StateSuperposition shifted = second;
    for (const char *m : {"a2", "b2", "c2"}) {
        shifted = apply_phase_shift(shifted, {m, std::numbers::pi});
    }
    // A pi shift on all three modes must equal the copy with swapped weights.
    StateSuperposition swapped = build_partial_ghz_ecs(alpha, eta, delta, {"a2", "b2", "c2"});
    if (std::abs(fidelity(shifted, swapped) - 1.0) > kPhaseCheckTolerance) {
        throw Error(ErrorKind::kToleranceViolation, "phase-shifted copy does not match the swapped-weight state");
    }
    StateSuperposition combined = tensor(first, shifted);
    r.stages.push_back({"after_phase_shift", combined});

    StateSuperposition mixed = combined;
    mixed = apply_beam_splitter(mixed, {"a1", "a2", "d1", "d2"});
    mixed = apply_beam_splitter(mixed, {"b1", "b2", "e1", "e2"});
    mixed = apply_beam_splitter(mixed, {"c1", "c2", "f1", "f2"});
    const ModeLabel mixed_order[] = {"d1", "d2", "e1", "e2", "f1", "f2"};
    mixed = reorder_modes(mixed, mixed_order);
    r.stages.push_back({"after_bs1_bs3", mixed});

    const ModeLabel dark[] = {"d2", "e2", "f2"};
    PostSelectOutcome sel = post_select_vacuum(mixed, dark);
    r.stages.push_back({"post_selected", sel.kept_state});
    r.exact_probability = sel.exact_probability;
    r.amplitude_check = sel.kept_state.amplitude(0, "d1").magnitude();

    StateSuperposition split = sel.kept_state;
    for (const char *m : {"d1", "e1", "f1"}) {
        const std::string base(m);
        split = split_mode(split, base, base + "'", base + "''");
    }
    const ModeLabel split_order[] = {"d1'", "d1''", "e1'", "e1''", "f1'", "f1''"};
    split = reorder_modes(split, split_order);
    r.stages.push_back({"after_bs4_bs6", split});

    const ModeLabel measured[] = {"d1''", "e1''", "f1''"};
    StateSuperposition final_state = measure_remove_modes(split, measured);
    r.stages.push_back({"final", final_state});

    r.paper_probability = success_probability_paper(ProtocolKind::kTwoCopy, cfg);
    r.final_fidelity = fidelity(final_state, build_target_ghz_ecs(alpha));
    return r;
}

ProtocolReport run_protocol(ProtocolKind kind, const ProtocolConfig &cfg) {
    return kind == ProtocolKind::kAncilla ? run_protocol_1(cfg) : run_protocol_2(cfg);
}

std::vector<SweepRow> sweep(ProtocolKind kind, double alpha, int points) {
    if (points < 2) {
        throw Error(ErrorKind::kInvalidArgument, "sweep needs at least 2 points");
    }
    require_alpha(alpha);
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(points));
    for (int k = 1; k <= points; ++k) {
        ProtocolConfig cfg;
        cfg.alpha = alpha;
        cfg.c1 = static_cast<double>(k) / (points + 1);
        cfg.c2 = std::sqrt(1.0 - cfg.c1 * cfg.c1);
        ProtocolReport rep = run_protocol(kind, cfg);
        rows.push_back({rep.c1, rep.c2, rep.paper_probability, rep.exact_probability, rep.final_fidelity});
    }
    return rows;
}

Peak find_peak(const std::vector<SweepRow> &rows) {
    if (rows.empty()) {
        throw Error(ErrorKind::kInvalidArgument, "find_peak on an empty sweep");
    }
    const SweepRow *best = &rows.front();
    for (const auto &row : rows) {
        if (row.paper_probability > best->paper_probability ||
            (row.paper_probability == best->paper_probability && row.c1 < best->c1)) {
            best = &row;
        }
    }
    return {best->c1, best->paper_probability};
}

}  // namespace ecs
