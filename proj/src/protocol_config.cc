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

#include "ecs/protocol_config.h"

#include <algorithm>
#include <cmath>

#include "ecs/errors.h"

namespace ecs {

std::string protocol_name(ProtocolKind kind) {
    return kind == ProtocolKind::kAncilla ? "1" : "2";
}

std::pair<double, double> ProtocolConfig::coefficients() const {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw Error(ErrorKind::kInvalidArgument, "alpha must be finite and positive");
    }
    if (!std::isfinite(c1) || c1 < 0.0 || c1 > 1.0) {
        throw Error(ErrorKind::kInvalidArgument, "c1 must lie in [0, 1]");
    }
    double w1 = c1;
    double w2;
    if (c2) {
        if (!std::isfinite(*c2) || *c2 < 0.0) {
            throw Error(ErrorKind::kInvalidArgument, "c2 must be finite and non-negative");
        }
        w2 = *c2;
    } else {
        w2 = std::sqrt(std::max(0.0, 1.0 - c1 * c1));
    }
    if (normalize_inputs) {
        double len = std::hypot(w1, w2);
        if (len > 0.0) {
            w1 /= len;
            w2 /= len;
        }
    }
    return {w1, w2};
}

}  // namespace ecs
