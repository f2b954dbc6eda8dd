// Copyright 2026 The QAM Authors.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qam::tools {

enum class VerifyLevel { kQuick, kFull };

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::kQuick;
    std::uint64_t seed = 0;
    /// Names of faults to inject; currently only "s2" (perturbs the S^2
    /// split matrix before the unitarity check).
    std::vector<std::string> faults;
};

struct InvariantResult {
    std::string name;
    bool holds = false;
    std::uint64_t cases = 0;
    double max_error = 0.0;
};

/// Runs every invariant; the report depends only on the options.
[[nodiscard]] std::vector<InvariantResult> run_invariants(const VerifyOptions &options);

} // namespace qam::tools
