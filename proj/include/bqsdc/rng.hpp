// Copyright 2026 The bqsdc Authors
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

#pragma once

#include <cstdint>
#include <limits>

namespace bqsdc {

/// Counter-based random stream keyed by (seed, stream).
///
/// Draw i of a stream is a pure function of (seed, stream, i), so a Monte
/// Carlo trial that owns stream `t` produces the same draws no matter which
/// thread runs it or in which order trials are scheduled.
class Rng {
 public:
  using result_type = std::uint64_t;

  constexpr Rng(std::uint64_t seed, std::uint64_t stream) noexcept
      : seed_(seed), stream_(stream), key0_(mix(seed)), key1_(mix(stream ^ kStreamSalt)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept { return next(); }

  constexpr std::uint64_t next() noexcept {
    const std::uint64_t c = counter_++;
    return mix(mix(c ^ key0_) ^ key1_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). Lemire's multiply-shift with rejection; n must be > 0.
  constexpr std::uint64_t below(std::uint64_t n) noexcept {
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  constexpr bool coin() noexcept { return (next() >> 63) != 0; }

  /// Independent child stream; the parent's counter is untouched.
  [[nodiscard]] constexpr Rng split(std::uint64_t sub) const noexcept {
    return Rng(mix(seed_ ^ mix(stream_ + kSplitSalt)), sub);
  }

  constexpr std::uint64_t seed() const noexcept { return seed_; }
  constexpr std::uint64_t stream() const noexcept { return stream_; }
  constexpr std::uint64_t counter() const noexcept { return counter_; }

 private:
  static constexpr std::uint64_t kStreamSalt = 0xd1b54a32d192ed03ULL;
  static constexpr std::uint64_t kSplitSalt = 0x8bb84b93962eacc9ULL;

  // splitmix64 finalizer
  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t key0_;
  std::uint64_t key1_;
  std::uint64_t counter_ = 0;
};

}  // namespace bqsdc
