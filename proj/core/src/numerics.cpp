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

#include "qcm/numerics.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qcm {
namespace {

// 0! .. 20!, the full range that fits in 64 bits.
constexpr std::uint64_t kSmallFactorial[21] = {
    1ull,
    1ull,
    2ull,
    6ull,
    24ull,
    120ull,
    720ull,
    5040ull,
    40320ull,
    362880ull,
    3628800ull,
    39916800ull,
    479001600ull,
    6227020800ull,
    87178291200ull,
    1307674368000ull,
    20922789888000ull,
    355687428096000ull,
    6402373705728000ull,
    121645100408832000ull,
    2432902008176640000ull,
};

// Prefix sums of ln(k), accumulated with compensation so the cache entry for
// a carries relative error ~eps rather than eps * a.
const std::vector<double>& log_factorial_cache() {
  static const std::vector<double> cache = [] {
    std::vector<double> c(kLogFactorialCacheSize);
    NeumaierSum acc;
    c[0] = 0.0;
    for (std::int64_t k = 1; k < kLogFactorialCacheSize; ++k) {
      acc.add(std::log(static_cast<double>(k)));
      c[k] = acc.value();
    }
    for (std::int64_t a = 0; a <= 20; ++a) {
      c[a] = std::log(static_cast<double>(kSmallFactorial[a]));
    }
    return c;
  }();
  return cache;
}

double lgamma_threadsafe(double x) {
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

}  // namespace

double to_double(const Rational& q) { return q.convert_to<double>(); }

LogScalar LogScalar::from_value(double v) {
  if (v < 0.0) {
    throw std::domain_error("LogScalar::from_value: negative value");
  }
  return from_log(std::log(v));
}

LogScalar operator/(LogScalar a, LogScalar b) {
  if (b.is_zero()) {
    throw std::domain_error("LogScalar: division by zero");
  }
  if (a.is_zero()) return LogScalar::zero();
  return LogScalar::from_log(a.log_ - b.log_);
}

LogScalar operator+(LogScalar a, LogScalar b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const double hi = std::max(a.log_, b.log_);
  const double lo = std::min(a.log_, b.log_);
  return LogScalar::from_log(hi + std::log1p(std::exp(lo - hi)));
}

double compensated_sum(std::span<const double> terms) {
  NeumaierSum s;
  for (double t : terms) s.add(t);
  return s.value();
}

double compensated_sum(std::span<const LogScalar> terms) {
  NeumaierSum s;
  for (const LogScalar& t : terms) s.add(t.value());
  return s.value();
}

double log_factorial_value(std::int64_t a) {
  if (a < 0) {
    throw std::domain_error("log_factorial: negative argument");
  }
  const auto& cache = log_factorial_cache();
  if (a < static_cast<std::int64_t>(cache.size())) {
    return cache[static_cast<std::size_t>(a)];
  }
  return lgamma_threadsafe(static_cast<double>(a) + 1.0);
}

LogScalar log_factorial(std::int64_t a) {
  return LogScalar::from_log(log_factorial_value(a));
}

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) {
    throw std::domain_error("binomial: negative row index");
  }
  if (b < 0 || b > a) return BigInt(0);
  b = std::min(b, a - b);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // divides exactly: r is C(a - b + i, i) at this point
  }
  return r;
}

double log_binomial_value(std::int64_t a, std::int64_t b) {
  if (a < 0) {
    throw std::domain_error("log_binomial: negative row index");
  }
  if (b < 0 || b > a) return -std::numeric_limits<double>::infinity();
  return log_factorial_value(a) - log_factorial_value(b) -
         log_factorial_value(a - b);
}

LogScalar log_binomial(std::int64_t a, std::int64_t b) {
  return LogScalar::from_log(log_binomial_value(a, b));
}

}  // namespace qcm
