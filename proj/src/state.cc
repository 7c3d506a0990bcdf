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

#include "ecs/state.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <Eigen/Eigenvalues>

namespace ecs {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kInvalidAmplitude:
            return "invalid-amplitude";
        case ErrorKind::kInvalidArgument:
            return "invalid-argument";
        case ErrorKind::kIndexOutOfRange:
            return "index-out-of-range";
        case ErrorKind::kEmptyState:
            return "empty-state";
        case ErrorKind::kDegenerateState:
            return "degenerate-state";
        case ErrorKind::kLabelCollision:
            return "label-collision";
        case ErrorKind::kUnknownMode:
            return "unknown-mode";
        case ErrorKind::kModeCountMismatch:
            return "mode-count-mismatch";
        case ErrorKind::kNotNormalized:
            return "not-normalized";
        case ErrorKind::kEmptySelection:
            return "empty-selection";
        case ErrorKind::kMagnitudeMismatch:
            return "magnitude-mismatch";
        case ErrorKind::kOracleRefused:
            return "oracle-refused";
        case ErrorKind::kLengthMismatch:
            return "length-mismatch";
        case ErrorKind::kToleranceViolation:
            return "tolerance-violation";
    }
    return "unknown";
}

ModeAmplitude::ModeAmplitude(Complex value) : value_(value) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw Error(ErrorKind::kInvalidAmplitude, "mode amplitude must be finite");
    }
}

StateSuperposition::StateSuperposition(std::vector<ModeLabel> modes, std::vector<Term> terms)
    : modes_(std::move(modes)), terms_(std::move(terms)) {
    std::unordered_set<std::string> seen;
    for (const auto &m : modes_) {
        if (!seen.insert(m).second) {
            throw Error(ErrorKind::kLabelCollision, "duplicate mode label '" + m + "'");
        }
    }
    for (const auto &t : terms_) {
        if (t.amps.size() != modes_.size()) {
            throw Error(ErrorKind::kModeCountMismatch, "term has " + std::to_string(t.amps.size()) +
                                                           " amplitudes for " + std::to_string(modes_.size()) +
                                                           " modes");
        }
        if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag())) {
            throw Error(ErrorKind::kInvalidArgument, "term coefficient must be finite");
        }
    }
}

StateSuperposition StateSuperposition::product(std::vector<ModeLabel> modes, std::vector<ModeAmplitude> amps,
                                               Complex coeff) {
    std::vector<Term> terms;
    terms.push_back(Term{coeff, std::move(amps)});
    return StateSuperposition(std::move(modes), std::move(terms));
}

std::optional<std::size_t> StateSuperposition::find_mode(const ModeLabel &label) const {
    auto it = std::find(modes_.begin(), modes_.end(), label);
    if (it == modes_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - modes_.begin());
}

std::size_t StateSuperposition::mode_index(const ModeLabel &label) const {
    auto k = find_mode(label);
    if (!k) {
        throw Error(ErrorKind::kUnknownMode, "unknown mode '" + label + "'");
    }
    return *k;
}

ModeAmplitude StateSuperposition::amplitude(std::size_t term, const ModeLabel &label) const {
    if (term >= terms_.size()) {
        throw Error(ErrorKind::kIndexOutOfRange, "term index out of range");
    }
    return terms_[term].amps[mode_index(label)];
}

Complex coherent_overlap(ModeAmplitude a, ModeAmplitude b) {
    Complex x = a.value();
    Complex y = b.value();
    return std::exp(-0.5 * std::norm(x) - 0.5 * std::norm(y) + std::conj(x) * y);
}

namespace {

Complex product_overlap(const std::vector<ModeAmplitude> &u, const std::vector<ModeAmplitude> &v) {
    // Summing exponents keeps tiny overlaps (e^{-100} and below) from
    // underflowing term by term.
    Complex exponent = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        Complex x = u[k].value();
        Complex y = v[k].value();
        if (x == y) {
            continue;
        }
        exponent += -0.5 * std::norm(x) - 0.5 * std::norm(y) + std::conj(x) * y;
    }
    return std::exp(exponent);
}

void require_nonempty(const StateSuperposition &s, const char *what) {
    if (s.empty()) {
        throw Error(ErrorKind::kEmptyState, std::string(what) + ": state has no terms");
    }
}

}  // namespace

Complex term_overlap(const StateSuperposition &s, std::size_t i, std::size_t j) {
    if (i >= s.term_count() || j >= s.term_count()) {
        throw Error(ErrorKind::kIndexOutOfRange, "term index out of range");
    }
    if (i == j) {
        return 1.0;
    }
    return product_overlap(s.terms()[i].amps, s.terms()[j].amps);
}

double GramMatrix::hermitian_deviation() const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

double GramMatrix::diagonal_deviation() const {
    return (entries.diagonal().array() - Complex(1.0)).abs().maxCoeff();
}

double GramMatrix::min_eigenvalue() const {
    Eigen::MatrixXcd h = 0.5 * (entries + entries.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

GramMatrix gram(const StateSuperposition &s) {
    require_nonempty(s, "gram");
    const auto n = static_cast<Eigen::Index>(s.term_count());
    GramMatrix g{Eigen::MatrixXcd(n, n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        g.entries(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            Complex v = term_overlap(s, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            g.entries(i, j) = v;
            g.entries(j, i) = std::conj(v);
        }
    }
    return g;
}

Eigen::VectorXcd coefficients(const StateSuperposition &s) {
    Eigen::VectorXcd c(static_cast<Eigen::Index>(s.term_count()));
    for (std::size_t i = 0; i < s.term_count(); ++i) {
        c(static_cast<Eigen::Index>(i)) = s.terms()[i].coeff;
    }
    return c;
}

Complex inner_product(const StateSuperposition &s1, const StateSuperposition &s2) {
    if (s1.mode_count() != s2.mode_count()) {
        throw Error(ErrorKind::kModeCountMismatch, "inner product needs equal mode counts");
    }
    Complex acc = 0.0;
    for (const auto &t1 : s1.terms()) {
        for (const auto &t2 : s2.terms()) {
            acc += std::conj(t1.coeff) * t2.coeff * product_overlap(t1.amps, t2.amps);
        }
    }
    return acc;
}

double norm_squared(const StateSuperposition &s) {
    require_nonempty(s, "norm_squared");
    Eigen::VectorXcd c = coefficients(s);
    double v = (c.adjoint() * gram(s).entries * c)(0, 0).real();
    return std::max(v, 0.0);
}

StateSuperposition normalize(const StateSuperposition &s) {
    double n2 = norm_squared(s);
    if (!(n2 > kNormFloor)) {
        throw Error(ErrorKind::kDegenerateState, "cannot normalize a zero-norm state");
    }
    return scale(s, 1.0 / std::sqrt(n2));
}

StateSuperposition scale(const StateSuperposition &s, Complex factor) {
    std::vector<Term> terms = s.terms();
    for (auto &t : terms) {
        t.coeff *= factor;
    }
    return StateSuperposition(s.modes(), std::move(terms));
}

StateSuperposition tensor(const StateSuperposition &s1, const StateSuperposition &s2) {
    std::vector<ModeLabel> modes = s1.modes();
    for (const auto &m : s2.modes()) {
        if (s1.find_mode(m)) {
            throw Error(ErrorKind::kLabelCollision, "tensor: mode '" + m + "' appears in both factors");
        }
        modes.push_back(m);
    }
    std::vector<Term> terms;
    terms.reserve(s1.term_count() * s2.term_count());
    for (const auto &t1 : s1.terms()) {
        for (const auto &t2 : s2.terms()) {
            Term t{t1.coeff * t2.coeff, t1.amps};
            t.amps.insert(t.amps.end(), t2.amps.begin(), t2.amps.end());
            terms.push_back(std::move(t));
        }
    }
    return StateSuperposition(std::move(modes), std::move(terms));
}

StateSuperposition simplify(const StateSuperposition &s, double merge_tol, double drop_tol) {
    std::vector<Term> merged;
    for (const auto &t : s.terms()) {
        auto same = [&](const Term &m) {
            for (std::size_t k = 0; k < t.amps.size(); ++k) {
                if (std::abs(m.amps[k].value() - t.amps[k].value()) > merge_tol) {
                    return false;
                }
            }
            return true;
        };
        auto it = std::find_if(merged.begin(), merged.end(), same);
        if (it == merged.end()) {
            merged.push_back(t);
        } else {
            it->coeff += t.coeff;
        }
    }
    std::erase_if(merged, [&](const Term &t) { return !(std::abs(t.coeff) > drop_tol); });
    return StateSuperposition(s.modes(), std::move(merged));
}

double fidelity(const StateSuperposition &s1, const StateSuperposition &s2) {
    if (s1.mode_count() != s2.mode_count()) {
        throw Error(ErrorKind::kModeCountMismatch, "fidelity needs equal mode counts");
    }
    double n1 = norm_squared(s1);
    double n2 = norm_squared(s2);
    if (!(n1 > kNormFloor) || !(n2 > kNormFloor)) {
        throw Error(ErrorKind::kDegenerateState, "fidelity of a zero-norm state");
    }
    return std::norm(inner_product(s1, s2)) / (n1 * n2);
}

StateSuperposition reorder_modes(const StateSuperposition &s, std::span<const ModeLabel> order) {
    if (order.size() != s.mode_count()) {
        throw Error(ErrorKind::kModeCountMismatch, "reorder_modes: order must list every mode once");
    }
    std::vector<std::size_t> src;
    src.reserve(order.size());
    for (const auto &label : order) {
        src.push_back(s.mode_index(label));
    }
    std::vector<ModeLabel> modes(order.begin(), order.end());
    std::vector<Term> terms;
    terms.reserve(s.term_count());
    for (const auto &t : s.terms()) {
        Term out{t.coeff, {}};
        out.amps.reserve(src.size());
        for (std::size_t k : src) {
            out.amps.push_back(t.amps[k]);
        }
        terms.push_back(std::move(out));
    }
    // The constructor rejects repeated labels, which covers a non-permutation.
    return StateSuperposition(std::move(modes), std::move(terms));
}

StateSuperposition drop_modes(const StateSuperposition &s, std::span<const ModeLabel> labels) {
    std::vector<bool> keep(s.mode_count(), true);
    for (const auto &label : labels) {
        keep[s.mode_index(label)] = false;
    }
    std::vector<ModeLabel> modes;
    for (std::size_t k = 0; k < s.mode_count(); ++k) {
        if (keep[k]) {
            modes.push_back(s.modes()[k]);
        }
    }
    std::vector<Term> terms;
    terms.reserve(s.term_count());
    for (const auto &t : s.terms()) {
        Term out{t.coeff, {}};
        for (std::size_t k = 0; k < t.amps.size(); ++k) {
            if (keep[k]) {
                out.amps.push_back(t.amps[k]);
            }
        }
        terms.push_back(std::move(out));
    }
    return StateSuperposition(std::move(modes), std::move(terms));
}

double printed_target_normalization(double alpha) {
    return 1.0 / std::sqrt(2.0 * (1.0 + 2.0 * std::exp(-6.0 * alpha * alpha)));
}

}  // namespace ecs
