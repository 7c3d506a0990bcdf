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

#ifndef ECS_CLI_H
#define ECS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

#include "ecs/protocols.h"

namespace ecs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitTolerance = 4;

/// Fidelity deviation from 1 beyond which `ecp*` exits with kExitTolerance.
inline constexpr double kFidelityTolerance = 1e-12;

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Locale-independent shortest form with at most 9 significant digits.
std::string format_number(double v);

/// Renders a protocol report as the `ecp1` / `ecp2` text output.
void write_report(std::ostream &out, const ProtocolReport &report);

enum class SweepFormat { kCsv, kJsonLines };

/// Writes one curve per alpha. CSV rows are followed by a
/// `# peak alpha=<a> c1=<c> p=<p>` comment per alpha; json-lines emits only
/// the row objects.
void write_sweep(std::ostream &out, ProtocolKind kind, const std::vector<double> &alphas, int points,
                 SweepFormat format);

}  // namespace ecs::cli

#endif
