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

#include "ecs/verify.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ecs/fock.h"
#include "ecs/optics.h"
#include "ecs/state.h"

namespace ecs {

namespace {

constexpr double kOverlapTolerance = 1e-10;
constexpr double kNormTolerance = 1e-9;
constexpr double kUnitarityTolerance = 1e-12;

class AmplitudeSource {
   public:
    AmplitudeSource(std::uint64_t seed, double radius) : rng_(seed), radius_(radius) {
    }
    ModeAmplitude amplitude() {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double r = radius_ * std::sqrt(unit(rng_));
        double phi = 2.0 * std::numbers::pi * unit(rng_);
        return ModeAmplitude(std::polar(r, phi));
    }
    Complex coefficient() {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        return {u(rng_), u(rng_)};
    }
    int count(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

   private:
    std::mt19937_64 rng_;
    double radius_;
};

void record(VerifyCheck &c, double deviation, double tolerance) {
    c.checked += 1;
    c.max_deviation = std::max(c.max_deviation, deviation);
    c.worst_ratio = std::max(c.worst_ratio, deviation / tolerance);
}

Eigen::MatrixXcd weighted_gram(const StateSuperposition &s) {
    Eigen::VectorXcd c = coefficients(s);
    return c.conjugate().asDiagonal() * gram(s).entries * c.asDiagonal();
}

}  // namespace

std::vector<VerifyCheck> run_verification(const VerifyOptions &opts) {
    AmplitudeSource src(opts.seed, opts.amp_max);

    VerifyCheck overlap{"overlap", 0, 0, 0.0, 0.0, kOverlapTolerance};
    for (int t = 0; t < opts.trials; ++t) {
        ModeAmplitude a = src.amplitude();
        ModeAmplitude b = src.amplitude();
        try {
            fock::FockVector va = fock::coherent_to_fock(a, opts.n_max);
            fock::FockVector vb = fock::coherent_to_fock(b, opts.n_max);
            double dev = std::abs(fock::fock_overlap(va, vb) - coherent_overlap(a, b));
            record(overlap, dev, std::max(kOverlapTolerance, va.tail_bound + vb.tail_bound));
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::kOracleRefused) {
                throw;
            }
            overlap.refused += 1;
        }
    }

    VerifyCheck norm{"norm", 0, 0, 0.0, 0.0, kNormTolerance};
    const int norm_trials = std::max(1, opts.trials / 4);
    for (int t = 0; t < norm_trials; ++t) {
        const int n = src.count(1, 4);
        std::vector<Complex> coeffs;
        std::vector<ModeAmplitude> amps;
        std::vector<Term> terms;
        for (int i = 0; i < n; ++i) {
            coeffs.push_back(src.coefficient());
            amps.push_back(src.amplitude());
            terms.push_back(Term{coeffs.back(), {amps.back()}});
        }
        try {
            double bound = 0.0;
            double oracle = fock::superposition_norm_squared(coeffs, amps, opts.n_max, &bound);
            double dev = std::abs(oracle - norm_squared(StateSuperposition({"m"}, std::move(terms))));
            record(norm, dev, std::max(kNormTolerance, bound));
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::kOracleRefused) {
                throw;
            }
            norm.refused += 1;
        }
    }

    VerifyCheck bs_gram{"bs_gram", 0, 0, 0.0, 0.0, kUnitarityTolerance};
    VerifyCheck bs_twice{"bs_twice", 0, 0, 0.0, 0.0, kUnitarityTolerance};
    const BeamSplitterSpec spec{"x", "y", "x", "y"};
    for (int t = 0; t < opts.trials; ++t) {
        const int n = src.count(1, 4);
        std::vector<Term> terms;
        for (int i = 0; i < n; ++i) {
            terms.push_back(Term{src.coefficient(), {src.amplitude(), src.amplitude()}});
        }
        StateSuperposition s({"x", "y"}, std::move(terms));
        StateSuperposition once = apply_beam_splitter(s, spec);
        double dev = (weighted_gram(once) - weighted_gram(s)).cwiseAbs().maxCoeff();
        record(bs_gram, dev, kUnitarityTolerance);
        if (norm_squared(s) > kNormFloor) {
            StateSuperposition twice = apply_beam_splitter(once, spec);
            record(bs_twice, std::abs(fidelity(twice, s) - 1.0), kUnitarityTolerance);
        }
    }
    return {overlap, norm, bs_gram, bs_twice};
}

}  // namespace ecs
