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

#ifndef ECS_PROTOCOL_CONFIG_H
#define ECS_PROTOCOL_CONFIG_H

#include <optional>
#include <string>
#include <utility>

namespace ecs {

/// kAncilla: one partially entangled copy plus a single-mode superposition.
/// kTwoCopy: two partially entangled copies.
enum class ProtocolKind { kAncilla = 1, kTwoCopy = 2 };

std::string protocol_name(ProtocolKind kind);

/// Input parameters of either protocol. c1 and c2 are the real branch
/// weights of |alpha alpha alpha> and |-alpha -alpha -alpha>.
struct ProtocolConfig {
    double alpha = 1.0;
    double c1 = 0.70710678118654752;
    /// Defaults to sqrt(1 - c1^2).
    std::optional<double> c2;
    /// Rescale (c1, c2) to unit length before building the inputs. The
    /// physical states and every probability are invariant under this; only
    /// the coefficients shown in stage dumps change.
    bool normalize_inputs = false;

    /// Validates and returns the effective (c1, c2). Zero weights are
    /// accepted here; the pipelines report them as an empty selection.
    std::pair<double, double> coefficients() const;
};

}  // namespace ecs

#endif
