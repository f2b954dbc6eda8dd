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
#include <random>

namespace qam::qsim {

/**
 * Explicit, seedable random stream. mt19937_64 output is fixed by the
 * standard and uniform() is computed from the raw 64-bit draws rather than
 * through std::uniform_real_distribution, so a seed reproduces the same
 * samples on every conforming standard library.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Independent child stream, deterministic in the parent's state.
    Rng split() { return Rng(engine_() ^ 0x9E3779B97F4A7C15ULL); }

  private:
    std::mt19937_64 engine_;
};

} // namespace qam::qsim
