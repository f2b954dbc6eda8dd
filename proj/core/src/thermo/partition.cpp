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
#include "qam/thermo/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "integrate.hpp"
#include "qam/errors.hpp"

namespace qam::thermo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
// Terms more than e^-60 below the largest one cannot change a double sum.
constexpr double kLogCutoff = -60.0;

/// Neumaier compensated summation.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            c_ += (sum_ - t) + x;
        } else {
            c_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const { return sum_ + c_; }

  private:
    double sum_ = 0.0;
    double c_ = 0.0;
};

void check_args(std::uint64_t n, std::uint64_t d, double b) {
    if (n == 0) {
        throw ValidationError("n must be positive");
    }
    if (d > n) {
        throw ValidationError("d must not exceed n");
    }
    if (!(b >= 0.0) || !std::isfinite(b)) {
        throw ValidationError("b must be a finite non-negative number");
    }
}

double log_cos_half_pi(double x) { return std::log(std::cos(kPi * x / 2.0)); }

BoltzmannMoments moments_sum(std::uint64_t n, std::uint64_t d, double b) {
    const double nn = static_cast<double>(n);
    const auto log_cos = [&](std::uint64_t j) {
        return log_cos_half_pi(static_cast<double>(j) / nn);
    };
    const double count = static_cast<double>(n - d + 1);
    if (b == 0.0) {
        // Flat average; j = n carries infinite energy.
        return {0.0, kInf};
    }
    CompensatedSum w_sum;
    CompensatedSum we_sum;
    const double g0 = 2.0 * b * log_cos(d);
    for (std::uint64_t j = d; j < n; ++j) {
        const double lc = log_cos(j);
        const double rel = 2.0 * b * lc - g0;
        if (rel < kLogCutoff) {
            break; // the weights decrease monotonically in j
        }
        const double w = std::exp(rel);
        w_sum.add(w);
        we_sum.add(-2.0 * lc * w);
    }
    return {g0 + std::log(w_sum.value()) - std::log(count),
            we_sum.value() / w_sum.value()};
}

BoltzmannMoments moments_integral(std::uint64_t n, std::uint64_t d, double b) {
    const double x0 = static_cast<double>(d) / static_cast<double>(n);
    const double width = 1.0 - x0;
    const double g0 = 2.0 * b * log_cos_half_pi(x0);
    const auto f = [&](double x) {
        return std::exp(2.0 * b * log_cos_half_pi(x) - g0);
    };
    const auto fe = [&](double x) {
        const double w = f(x);
        return w > 0.0 ? -2.0 * log_cos_half_pi(x) * w : 0.0;
    };
    const auto fe_tail = [&](double x) {
        return f(x) * std::max(1.0, -2.0 * log_cos_half_pi(x));
    };
    // Decay length of the integrand at x0: slope and curvature of
    // 2b ln cos(pi x / 2).
    const double slope = b * kPi * std::tan(kPi * x0 / 2.0);
    const double curvature = std::sqrt(b * kPi * kPi / 2.0);
    const double h0 =
        (slope + curvature) > 0.0 ? std::min(width, 1.0 / (slope + curvature))
                                  : width;
    const double z = detail::integrate_decaying(f, f, x0, 1.0, h0);
    const double ze = detail::integrate_decaying(fe, fe_tail, x0, 1.0, h0);
    return {g0 + std::log(z) - std::log(width), ze / z};
}

} // namespace

AverageMode default_mode(std::uint64_t n) noexcept {
    return n >= 10000 ? AverageMode::kIntegral : AverageMode::kSum;
}

BoltzmannMoments boltzmann_moments(std::uint64_t n, std::uint64_t d, double b,
                                   AverageMode mode) {
    check_args(n, d, b);
    if (d == n) {
        // A single state at cos = 0.
        return {b == 0.0 ? 0.0 : -kInf, kInf};
    }
    return mode == AverageMode::kSum ? moments_sum(n, d, b)
                                     : moments_integral(n, d, b);
}

double log_partition_average(std::uint64_t n, std::uint64_t d, double b,
                             AverageMode mode) {
    check_args(n, d, b);
    if (b == 0.0) {
        return 0.0;
    }
    return boltzmann_moments(n, d, b, mode).log_z;
}

double partition_average(std::uint64_t n, std::uint64_t d, double b,
                         AverageMode mode) {
    return std::exp(log_partition_average(n, d, b, mode));
}

double free_energy(std::uint64_t n, std::uint64_t d, double b,
                   AverageMode mode) {
    if (!(b > 0.0)) {
        throw ValidationError("free energy needs b > 0");
    }
    const double log_z = log_partition_average(n, d, b, mode);
    return std::isinf(log_z) ? kInf : -log_z / b;
}

} // namespace qam::thermo
