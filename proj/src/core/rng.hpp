/*
   Copyright 2026 The hnlat authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HNLAT_CORE_RNG_HPP
#define HNLAT_CORE_RNG_HPP

#include <cstdint>

namespace hnlat {

// SplitMix64. The exact algorithm is part of the tool contract so that runs
// are reproducible across implementations given the same seed:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output z ^ (z >> 31)
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound > 0. Rejection-free modulo is fine here:
    // bounds are tiny compared to 2^64, the bias is far below test resolution,
    // and determinism is what actually matters.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Uniform integer in [lo, hi], inclusive.
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    bool coin() { return (next() & 1u) != 0; }

    // Derives an independent stream; used to give each trial its own generator
    // so that report ordering is by trial index regardless of evaluation order.
    SplitMix64 fork(std::uint64_t salt) { return SplitMix64(next() ^ (salt * 0x9E3779B97F4A7C15ULL)); }

  private:
    std::uint64_t state_;
};

// Default seed for randomized certification and checks ("HN" in ASCII).
inline constexpr std::uint64_t kDefaultSeed = 0x484E;

} // namespace hnlat

#endif
