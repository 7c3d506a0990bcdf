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

#include <gtest/gtest.h>

#include <numbers>

#include "ecs/measurement.h"
#include "test_util.h"

using namespace ecs;
using ecs::testing::RandomStates;

namespace {

constexpr double kTol = 1e-12;
const double kRoot2 = std::numbers::sqrt2;
const double kHalfRoot2 = std::sqrt(0.5);

struct ExpectedTerm {
    double weight;  // coefficient up to a common factor
    std::vector<double> amps;
};

// Matches terms by amplitude tuple (order-free) and compares coefficient
// ratios against the first expected term.
void expect_structure(const StateSuperposition &s, const std::vector<ModeLabel> &modes,
                      const std::vector<ExpectedTerm> &want) {
    ASSERT_EQ(s.modes(), modes);
    ASSERT_EQ(s.term_count(), want.size());
    std::vector<Complex> coeff(want.size());
    std::vector<bool> used(s.term_count(), false);
    for (std::size_t w = 0; w < want.size(); ++w) {
        bool found = false;
        for (std::size_t i = 0; i < s.term_count() && !found; ++i) {
            if (used[i]) {
                continue;
            }
            bool match = true;
            for (std::size_t k = 0; k < modes.size(); ++k) {
                if (std::abs(s.terms()[i].amps[k].value() - want[w].amps[k]) > kTol) {
                    match = false;
                }
            }
            if (match) {
                used[i] = true;
                coeff[w] = s.terms()[i].coeff;
                found = true;
            }
        }
        ASSERT_TRUE(found) << "expected term " << w << " missing";
    }
    for (std::size_t w = 1; w < want.size(); ++w) {
        Complex ratio = coeff[w] / coeff[0];
        EXPECT_NEAR(std::abs(ratio - want[w].weight / want[0].weight), 0.0, kTol) << "term " << w;
    }
}

double n3(double a, double x, double y) {
    return 1.0 / std::sqrt(x * x + y * y + 2 * x * y * std::exp(-6 * a * a));
}
double n1(double a, double x, double y) {
    return 1.0 / std::sqrt(x * x + y * y + 2 * x * y * std::exp(-2 * a * a));
}

}  // namespace

TEST(protocols, target_state) {
    StateSuperposition t = build_target_ghz_ecs(1.0);
    ASSERT_EQ(t.term_count(), 2u);
    const double c = 1.0 / std::sqrt(2.0 + 2.0 * std::exp(-6.0));
    EXPECT_NEAR(c, 0.70623203582228, 1e-13);
    EXPECT_NEAR(t.terms()[0].coeff.real(), c, 1e-15);
    EXPECT_NEAR(t.terms()[1].coeff.real(), c, 1e-15);
    StateSuperposition big = build_target_ghz_ecs(8.0);
    EXPECT_NEAR(big.terms()[0].coeff.real(), kHalfRoot2, 1e-12);
    EXPECT_NEAR(fidelity(t, t), 1.0, 1e-14);
    EXPECT_THROW(build_target_ghz_ecs(0.0), Error);
    EXPECT_THROW(build_target_ghz_ecs(-1.0), Error);
}

TEST(protocols, protocol_1_stage_conformance) {
    RandomStates rs(41);
    for (int t = 0; t < 25; ++t) {
        const double a = rs.uniform(0.3, 3.0), b = rs.uniform(0.1, 0.99), g = std::sqrt(1 - b * b);
        const double r = kRoot2 * a;
        ProtocolReport rep = run_protocol_1(ProtocolConfig{a, b, g});
        ASSERT_EQ(rep.stages.size(), 5u);

        const StateSuperposition &input = rep.stage("input").state;
        expect_structure(input, {"a", "b", "c", "d"},
                         {{b * g, {a, a, a, a}}, {b * b, {a, a, a, -a}}, {g * g, {-a, -a, -a, a}},
                          {g * b, {-a, -a, -a, -a}}});
        const double k = n3(a, b, g) * n1(a, b, g);
        EXPECT_NEAR(input.terms()[0].coeff.real(), k * b * g, kTol);

        expect_structure(rep.stage("after_bs1").state, {"a", "b", "e", "f"},
                         {{b * g, {a, a, r, 0}}, {b * b, {a, a, 0, r}}, {g * g, {-a, -a, 0, -r}},
                          {g * b, {-a, -a, -r, 0}}});

        const StateSuperposition &kept = rep.stage("post_selected").state;
        expect_structure(kept, {"a", "b", "e"}, {{1, {a, a, r}}, {1, {-a, -a, -r}}});
        EXPECT_NEAR(kept.terms()[0].coeff.real(), k * b * g, kTol);
        EXPECT_NEAR(rep.amplitude_check, r, kTol);

        expect_structure(rep.stage("after_bs2").state, {"a", "b", "e1", "e2"},
                         {{1, {a, a, a, a}}, {1, {-a, -a, -a, -a}}});

        const StateSuperposition &fin = rep.stage("final").state;
        expect_structure(fin, {"a", "b", "e2"}, {{1, {a, a, a}}, {1, {-a, -a, -a}}});
        EXPECT_NEAR(norm_squared(fin), 1.0, kTol);
        EXPECT_NEAR(rep.final_fidelity, 1.0, kTol);
        EXPECT_EQ(rep.stages.back().state.mode_count(), 3u);
    }
}

TEST(protocols, protocol_2_stage_conformance) {
    RandomStates rs(42);
    for (int t = 0; t < 25; ++t) {
        const double a = rs.uniform(0.3, 3.0), d = rs.uniform(0.1, 0.99), e = std::sqrt(1 - d * d);
        const double r = kRoot2 * a;
        ProtocolReport rep = run_protocol_2(ProtocolConfig{a, d, e});
        ASSERT_EQ(rep.stages.size(), 6u);

        expect_structure(rep.stage("two_copies").state, {"a1", "b1", "c1", "a2", "b2", "c2"},
                         {{d * d, {a, a, a, a, a, a}}, {d * e, {a, a, a, -a, -a, -a}},
                          {e * d, {-a, -a, -a, a, a, a}}, {e * e, {-a, -a, -a, -a, -a, -a}}});

        const StateSuperposition &combined = rep.stage("after_phase_shift").state;
        expect_structure(combined, {"a1", "b1", "c1", "a2", "b2", "c2"},
                         {{d * e, {a, a, a, a, a, a}}, {d * d, {a, a, a, -a, -a, -a}},
                          {e * e, {-a, -a, -a, a, a, a}}, {d * e, {-a, -a, -a, -a, -a, -a}}});
        const double nn = n3(a, d, e) * n3(a, d, e);
        EXPECT_NEAR(std::abs(combined.terms()[0].coeff), nn * d * d, kTol);

        expect_structure(rep.stage("after_bs1_bs3").state, {"d1", "d2", "e1", "e2", "f1", "f2"},
                         {{d * e, {r, 0, r, 0, r, 0}}, {d * d, {0, r, 0, r, 0, r}},
                          {e * e, {0, -r, 0, -r, 0, -r}}, {d * e, {-r, 0, -r, 0, -r, 0}}});

        const StateSuperposition &kept = rep.stage("post_selected").state;
        expect_structure(kept, {"d1", "e1", "f1"}, {{1, {r, r, r}}, {1, {-r, -r, -r}}});
        EXPECT_NEAR(kept.terms()[0].coeff.real(), nn * d * e, kTol);
        EXPECT_NEAR(rep.amplitude_check, r, kTol);

        expect_structure(rep.stage("after_bs4_bs6").state, {"d1'", "d1''", "e1'", "e1''", "f1'", "f1''"},
                         {{1, {a, a, a, a, a, a}}, {1, {-a, -a, -a, -a, -a, -a}}});

        expect_structure(rep.stage("final").state, {"d1'", "e1'", "f1'"}, {{1, {a, a, a}}, {1, {-a, -a, -a}}});
        EXPECT_NEAR(rep.final_fidelity, 1.0, kTol);
    }
}

TEST(protocols, protocol_1_examples) {
    ProtocolReport r1 = run_protocol_1(ProtocolConfig{1.0, kHalfRoot2, kHalfRoot2});
    EXPECT_NEAR(r1.final_fidelity, 1.0, kTol);
    EXPECT_NEAR(r1.paper_probability, 1.0 / (2 * (1 + std::exp(-6.0)) * (1 + std::exp(-2.0))), 1e-14);
    EXPECT_NEAR(r1.paper_probability, 0.43938, 1e-4);
    ProtocolReport r05 = run_protocol_1(ProtocolConfig{0.5, kHalfRoot2, kHalfRoot2});
    EXPECT_NEAR(r05.paper_probability, 1.0 / (2 * (1 + std::exp(-1.5)) * (1 + std::exp(-0.5))), 1e-14);
    EXPECT_NEAR(r05.paper_probability, 0.25455, 1e-4);
}

TEST(protocols, protocol_2_examples) {
    ProtocolReport r1 = run_protocol_2(ProtocolConfig{1.0, kHalfRoot2, kHalfRoot2});
    EXPECT_NEAR(r1.paper_probability, 1.0 / (2 * std::pow(1 + std::exp(-6.0), 2)), 1e-14);
    EXPECT_NEAR(r1.paper_probability, 0.49753, 1e-5);
    EXPECT_NEAR(r1.final_fidelity, 1.0, kTol);
    ProtocolReport r05 = run_protocol_2(ProtocolConfig{0.5, kHalfRoot2, kHalfRoot2});
    EXPECT_NEAR(r05.paper_probability, 1.0 / (2 * std::pow(1 + std::exp(-1.5), 2)), 1e-14);
    EXPECT_NEAR(r05.paper_probability, 0.33425, 1e-4);
}

TEST(protocols, exact_probability_factors) {
    RandomStates rs(43);
    for (int t = 0; t < 50; ++t) {
        const double a = rs.uniform(0.3, 3.0), c1 = rs.uniform(0.1, 0.99);
        ProtocolReport r1 = run_protocol_1(ProtocolConfig{a, c1});
        EXPECT_NEAR(r1.exact_probability / r1.paper_probability, 1 + std::exp(-8 * a * a), 1e-12);
        // Two-copy branches overlap as e^{-4 alpha^2} per amplified mode.
        ProtocolReport r2 = run_protocol_2(ProtocolConfig{a, c1});
        EXPECT_NEAR(r2.exact_probability / r2.paper_probability, 1 + std::exp(-12 * a * a), 1e-12);
    }
    ProtocolReport big = run_protocol_1(ProtocolConfig{2.0, kHalfRoot2});
    EXPECT_NEAR(big.exact_probability, big.paper_probability, 2e-13);
}

TEST(protocols, paper_probability_symmetric) {
    RandomStates rs(44);
    for (int t = 0; t < 30; ++t) {
        const double a = rs.uniform(0.3, 3.0), c1 = rs.uniform(0.1, 0.99), c2 = std::sqrt(1 - c1 * c1);
        for (auto kind : {ProtocolKind::kAncilla, ProtocolKind::kTwoCopy}) {
            EXPECT_NEAR(run_protocol(kind, ProtocolConfig{a, c1, c2}).paper_probability,
                        run_protocol(kind, ProtocolConfig{a, c2, c1}).paper_probability, 1e-14);
        }
    }
}

TEST(protocols, explicit_weights_and_normalize_inputs) {
    // Unnormalized (c1, c2) describe the same physical input.
    ProtocolConfig raw{1.0, 0.3, 0.9};
    ProtocolConfig unit = raw;
    unit.normalize_inputs = true;
    for (auto kind : {ProtocolKind::kAncilla, ProtocolKind::kTwoCopy}) {
        ProtocolReport a = run_protocol(kind, raw);
        ProtocolReport b = run_protocol(kind, unit);
        EXPECT_NEAR(a.paper_probability, b.paper_probability, 1e-14);
        EXPECT_NEAR(a.exact_probability, b.exact_probability, 1e-14);
        EXPECT_NEAR(b.c1 * b.c1 + b.c2 * b.c2, 1.0, 1e-15);
        EXPECT_NEAR(fidelity(a.stages.front().state, b.stages.front().state), 1.0, 1e-12);
    }
}

TEST(protocols, degenerate_weights) {
    for (auto kind : {ProtocolKind::kAncilla, ProtocolKind::kTwoCopy}) {
        EXPECT_THROW(run_protocol(kind, ProtocolConfig{1.0, 0.0}), EmptySelectionError);
        EXPECT_THROW(run_protocol(kind, ProtocolConfig{1.0, 1.0}), EmptySelectionError);
        try {
            run_protocol(kind, ProtocolConfig{1.0, 0.0, 0.0});
            FAIL();
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::kDegenerateState);
        }
        EXPECT_THROW(run_protocol(kind, ProtocolConfig{0.0, 0.5}), Error);
        EXPECT_THROW(run_protocol(kind, ProtocolConfig{1.0, 1.5}), Error);
        EXPECT_THROW(run_protocol(kind, ProtocolConfig{1.0, 0.5, -0.1}), Error);
    }
}

TEST(protocols, sweep_grid_and_ordering) {
    std::vector<SweepRow> rows = sweep(ProtocolKind::kTwoCopy, 1.0, 3);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_DOUBLE_EQ(rows[0].c1, 0.25);
    EXPECT_DOUBLE_EQ(rows[1].c1, 0.5);
    EXPECT_DOUBLE_EQ(rows[2].c1, 0.75);
    EXPECT_NEAR(rows[1].c2, std::sqrt(0.75), 1e-15);
    EXPECT_THROW(sweep(ProtocolKind::kAncilla, 1.0, 1), Error);
    EXPECT_THROW(sweep(ProtocolKind::kAncilla, 0.0, 10), Error);
}

TEST(protocols, sweep_peaks) {
    const double step = 0.01 + 1e-9;
    Peak p1 = find_peak(sweep(ProtocolKind::kAncilla, 2.0, 99));
    EXPECT_NEAR(p1.c1, 0.70, step);
    Peak p2 = find_peak(sweep(ProtocolKind::kTwoCopy, 1.0, 99));
    EXPECT_NEAR(p2.c1, kHalfRoot2, step);

    Peak a05 = find_peak(sweep(ProtocolKind::kAncilla, 0.5, 99));
    EXPECT_NEAR(a05.c1, kHalfRoot2, step);
    EXPECT_NEAR(a05.paper_probability, 0.2546, 1e-3);
    Peak a1 = find_peak(sweep(ProtocolKind::kAncilla, 1.0, 99));
    EXPECT_NEAR(a1.paper_probability, 0.4394, 1e-3);
    EXPECT_NEAR(p2.paper_probability, 0.4975, 1e-3);

    for (const auto &row : sweep(ProtocolKind::kTwoCopy, 1.5, 41)) {
        EXPECT_NEAR(row.final_fidelity, 1.0, kTol);
    }
}

TEST(protocols, find_peak_ties_and_empty) {
    std::vector<SweepRow> rows{{0.2, 0, 0.5, 0, 1}, {0.1, 0, 0.5, 0, 1}, {0.3, 0, 0.4, 0, 1}};
    Peak p = find_peak(rows);
    EXPECT_EQ(p.c1, 0.1);
    EXPECT_EQ(p.paper_probability, 0.5);
    EXPECT_THROW(find_peak({}), Error);
}

TEST(protocols, peak_grows_with_alpha) {
    for (auto kind : {ProtocolKind::kAncilla, ProtocolKind::kTwoCopy}) {
        double last = 0.0;
        for (double a : {0.25, 0.5, 1.0, 1.5, 2.0}) {
            Peak p = find_peak(sweep(kind, a, 99));
            EXPECT_NEAR(p.c1, kHalfRoot2, 0.01);
            EXPECT_GE(p.paper_probability, last);
            last = p.paper_probability;
        }
    }
}
