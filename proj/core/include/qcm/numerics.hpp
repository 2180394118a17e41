// Copyright 2026 The qcm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCM_NUMERICS_HPP_
#define QCM_NUMERICS_HPP_

#ifdef __FAST_MATH__
#error "qcm relies on compensated summation, which -ffast-math would defeat."
#endif

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcm {

// Exact arithmetic carrier types. cpp_rational keeps values canonical:
// reduced form, positive denominator, denominator nonzero.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& q);

/// A nonnegative real held as its natural logarithm. Zero is encoded as
/// log() == -infinity, so products and log-sum-exp addition need no
/// special-cased sign handling.
class LogScalar {
 public:
  constexpr LogScalar() : log_(-std::numeric_limits<double>::infinity()) {}

  static constexpr LogScalar zero() { return LogScalar(); }
  static constexpr LogScalar one() { return from_log(0.0); }
  static constexpr LogScalar from_log(double lg) {
    LogScalar s;
    s.log_ = lg;
    return s;
  }
  /// v must be >= 0; v == 0 maps to zero().
  static LogScalar from_value(double v);

  bool is_zero() const { return std::isinf(log_) && log_ < 0; }
  /// ln of the represented value (-inf for zero).
  double log() const { return log_; }
  /// The represented value itself; underflows to 0 or overflows to +inf
  /// when outside double range.
  double value() const { return std::exp(log_); }

  friend LogScalar operator*(LogScalar a, LogScalar b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return from_log(a.log_ + b.log_);
  }
  /// Throws std::domain_error on division by zero.
  friend LogScalar operator/(LogScalar a, LogScalar b);
  /// log-sum-exp; exact when either side is zero.
  friend LogScalar operator+(LogScalar a, LogScalar b);

  friend bool operator==(LogScalar a, LogScalar b) { return a.log_ == b.log_; }
  friend bool operator<(LogScalar a, LogScalar b) { return a.log_ < b.log_; }

 private:
  double log_;
};

/// Neumaier-compensated accumulator: the running error of the naive sum is
/// carried separately, so value() is within ~2 ulp of the exact sum of the
/// terms, scaled by sum |term|.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Compensated sum of the given terms (empty -> 0). Terms must be finite.
double compensated_sum(std::span<const double> terms);
double compensated_sum(std::span<const LogScalar> terms);

/// Number of ln(k!) values served from the precomputed prefix-sum cache.
/// Arguments beyond the cache fall back to lgamma.
inline constexpr std::int64_t kLogFactorialCacheSize = 1'000'001;

/// ln(a!). Entries for a <= 20 come from exact 64-bit factorials; larger
/// arguments use compensated prefix sums of ln(k), giving relative error
/// <= 1e-13 for a <= 10^6. Requires a >= 0.
LogScalar log_factorial(std::int64_t a);
double log_factorial_value(std::int64_t a);

/// Exact C(a, b) for a >= 0; returns 0 when b is outside [0, a] so that
/// boundary terms of combinatorial sums vanish without case splits.
BigInt binomial(std::int64_t a, std::int64_t b);

/// C(a, b) in the log domain; zero() outside [0, a]. Agrees with the exact
/// binomial to <= 1e-12 relative for a <= 300.
LogScalar log_binomial(std::int64_t a, std::int64_t b);
/// ln C(a, b), or -inf outside [0, a].
double log_binomial_value(std::int64_t a, std::int64_t b);

}  // namespace qcm

#endif  // QCM_NUMERICS_HPP_
