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

#include <stdexcept>

/**
 * @file
 * Exception hierarchy shared by every qam module. All library errors derive
 * from qam::Error so callers can catch the whole family at once; the CLI maps
 * the concrete types onto exit codes.
 */

namespace qam {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: non-unitary gates, overlapping qubits, duplicate or
/// ragged patterns, width mismatches, out-of-range parameters.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Requested register exceeds the dense simulator's qubit cap.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Forced collapse onto an outcome with zero probability.
class ProjectionError : public Error {
  public:
    using Error::Error;
};

/// Every stored pattern sits at maximal distance; the output law has Z = 0.
class DegenerateDistributionError : public Error {
  public:
    using Error::Error;
};

/// More than one stored pattern attains the minimal distance.
class AmbiguousMinimumError : public Error {
  public:
    using Error::Error;
};

/// Tuning targets that no finite number of control qubits can meet.
class InfeasibleError : public Error {
  public:
    using Error::Error;
};

/// A scan grid that does not bracket the order/disorder crossover.
class BracketError : public Error {
  public:
    using Error::Error;
};

} // namespace qam
