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

#ifndef ECS_ERRORS_H
#define ECS_ERRORS_H

#include <stdexcept>
#include <string>

namespace ecs {

enum class ErrorKind {
    kInvalidAmplitude,
    kInvalidArgument,
    kIndexOutOfRange,
    kEmptyState,
    kDegenerateState,
    kLabelCollision,
    kUnknownMode,
    kModeCountMismatch,
    kNotNormalized,
    kEmptySelection,
    kMagnitudeMismatch,
    kOracleRefused,
    kLengthMismatch,
    kToleranceViolation,
};

const char *error_kind_name(ErrorKind kind);

/// Base of every exception thrown by the library. `kind()` lets callers (the
/// CLI in particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(message), kind_(kind) {
    }
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

/// Post-selection kept no term. The success probability of that branch is 0.
class EmptySelectionError : public Error {
   public:
    explicit EmptySelectionError(const std::string &message) : Error(ErrorKind::kEmptySelection, message) {
    }
    double probability() const noexcept {
        return 0.0;
    }
};

}  // namespace ecs

#endif
