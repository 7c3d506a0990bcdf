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

#ifndef ECS_STATE_H
#define ECS_STATE_H

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ecs/errors.h"

namespace ecs {

using Complex = std::complex<double>;
using ModeLabel = std::string;

/// Componentwise amplitude distance under which two terms are merged.
inline constexpr double kMergeTolerance = 1e-12;
/// Terms with |coeff| below this are dropped by simplify().
inline constexpr double kDropTolerance = 1e-12;
/// normalize() refuses states whose squared norm is at or below this.
inline constexpr double kNormFloor = 1e-24;

/// Complex amplitude of a single-mode coherent state |a>. Always finite.
class ModeAmplitude {
   public:
    constexpr ModeAmplitude() = default;
    explicit ModeAmplitude(Complex value);
    explicit ModeAmplitude(double re, double im = 0.0) : ModeAmplitude(Complex(re, im)) {
    }

    Complex value() const noexcept {
        return value_;
    }
    double magnitude() const noexcept {
        return std::abs(value_);
    }
    bool operator==(const ModeAmplitude &other) const = default;

   private:
    Complex value_{0.0, 0.0};
};

/// coeff * |amps[0]> |amps[1]> ... in the mode order of the owning state.
struct Term {
    Complex coeff;
    std::vector<ModeAmplitude> amps;
};

/// A finite superposition of coherent product states over named modes.
///
/// The terms are not orthogonal. Every norm and inner product goes through
/// the Gram matrix of term overlaps; nothing here assumes an orthonormal
/// basis. Values are immutable once built: the operations below all return
/// new states.
class StateSuperposition {
   public:
    StateSuperposition() = default;
    StateSuperposition(std::vector<ModeLabel> modes, std::vector<Term> terms);

    /// A single product term with the given coefficient.
    static StateSuperposition product(std::vector<ModeLabel> modes, std::vector<ModeAmplitude> amps,
                                      Complex coeff = 1.0);

    const std::vector<ModeLabel> &modes() const noexcept {
        return modes_;
    }
    const std::vector<Term> &terms() const noexcept {
        return terms_;
    }
    std::size_t mode_count() const noexcept {
        return modes_.size();
    }
    std::size_t term_count() const noexcept {
        return terms_.size();
    }
    bool empty() const noexcept {
        return terms_.empty();
    }

    std::optional<std::size_t> find_mode(const ModeLabel &label) const;
    /// Like find_mode, but throws kUnknownMode.
    std::size_t mode_index(const ModeLabel &label) const;

    /// Amplitude of term `term` on mode `label`.
    ModeAmplitude amplitude(std::size_t term, const ModeLabel &label) const;

   private:
    std::vector<ModeLabel> modes_;
    std::vector<Term> terms_;
};

/// <a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a) b).
Complex coherent_overlap(ModeAmplitude a, ModeAmplitude b);

/// <term_i|term_j> with coefficients excluded.
Complex term_overlap(const StateSuperposition &s, std::size_t i, std::size_t j);

/// Gram matrix of a state's terms: entries(i, j) = term_overlap(s, i, j).
struct GramMatrix {
    Eigen::MatrixXcd entries;

    std::size_t size() const noexcept {
        return static_cast<std::size_t>(entries.rows());
    }
    /// Largest |G(i,j) - conj(G(j,i))|.
    double hermitian_deviation() const;
    /// Largest |G(i,i) - 1|.
    double diagonal_deviation() const;
    /// Smallest eigenvalue of the Hermitian part.
    double min_eigenvalue() const;
};

GramMatrix gram(const StateSuperposition &s);

/// Coefficient vector of `s` as an Eigen column.
Eigen::VectorXcd coefficients(const StateSuperposition &s);

/// <s1|s2>. Modes are matched by position, not by label.
Complex inner_product(const StateSuperposition &s1, const StateSuperposition &s2);

/// c^H G c, clamped at zero.
double norm_squared(const StateSuperposition &s);

StateSuperposition normalize(const StateSuperposition &s);

/// s1 (x) s2; mode lists concatenate, coefficients multiply.
StateSuperposition tensor(const StateSuperposition &s1, const StateSuperposition &s2);

/// Merges terms with equal amplitude tuples and drops negligible terms.
StateSuperposition simplify(const StateSuperposition &s, double merge_tol = kMergeTolerance,
                            double drop_tol = kDropTolerance);

/// |<s1|s2>|^2 / (|s1|^2 |s2|^2). Positional mode identification.
double fidelity(const StateSuperposition &s1, const StateSuperposition &s2);

/// Multiplies every coefficient by `factor`.
StateSuperposition scale(const StateSuperposition &s, Complex factor);

/// Returns `s` with modes permuted into `order`, which must be a permutation
/// of s.modes().
StateSuperposition reorder_modes(const StateSuperposition &s, std::span<const ModeLabel> order);

/// Deletes modes from every term. Coefficients are untouched.
StateSuperposition drop_modes(const StateSuperposition &s, std::span<const ModeLabel> labels);

/// The literal closed form [2(1 + 2 e^{-6|a|^2})]^{-1/2} for the target's
/// normalization. The Gram matrix gives [2(1 + e^{-6|a|^2})]^{-1/2} instead.
/// Nothing in the library normalizes with this value; it exists for
/// side-by-side reporting only.
double printed_target_normalization(double alpha);

}  // namespace ecs

#endif
