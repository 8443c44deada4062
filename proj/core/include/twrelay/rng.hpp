// SPDX-License-Identifier: Apache-2.0
//
// twrelay: outage analysis for two-way fixed-gain AF relay networks
// Copyright (C) 2026 the twrelay authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef TWRELAY_RNG_HPP
#define TWRELAY_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace twrelay {

// Philox4x64-10 counter-based generator (Salmon et al. constants, matches
// the numpy reference outputs). Every output word is a pure function of
// (counter, key), which is what makes Monte Carlo runs independent of
// worker count: stream i of a given seed always produces the same draws.
struct Philox4x64 {
    using Counter = std::array<std::uint64_t, 4>;
    using Key = std::array<std::uint64_t, 2>;

    static constexpr std::uint64_t m0 = 0xD2E7470EE14C6C93ull;
    static constexpr std::uint64_t m1 = 0xCA5A826395121157ull;
    static constexpr std::uint64_t w0 = 0x9E3779B97F4A7C15ull;
    static constexpr std::uint64_t w1 = 0xBB67AE8584CAA73Bull;

    static Counter block(Counter ctr, Key key) {
        for (int round = 0; round < 10; ++round) {
            const unsigned __int128 p0 = static_cast<unsigned __int128>(m0) * ctr[0];
            const unsigned __int128 p1 = static_cast<unsigned __int128>(m1) * ctr[2];
            const auto hi0 = static_cast<std::uint64_t>(p0 >> 64);
            const auto lo0 = static_cast<std::uint64_t>(p0);
            const auto hi1 = static_cast<std::uint64_t>(p1 >> 64);
            const auto lo1 = static_cast<std::uint64_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key = {key[0] + w0, key[1] + w1};
        }
        return ctr;
    }
};

// Buffered stream of draws for one (seed, stream index) pair. Intended
// use: one stream per Monte Carlo trial, indexed by the trial number.
class CounterStream {
  public:
    CounterStream(std::uint64_t seed, std::uint64_t stream)
        : key_{seed, domain_tag}, base_{0, stream, 0, 0} {}

    std::uint64_t next_u64() {
        if (pos_ == 4) refill();
        return buf_[pos_++];
    }

    // Uniform on (0, 1]; never zero, so -log stays finite.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    double exponential(double mean) { return -mean * std::log(uniform()); }

    // Box-Muller pair of standard normals.
    std::array<double, 2> normal_pair() {
        const double u1 = uniform();
        const double u2 = (static_cast<double>(next_u64() >> 11)) * 0x1.0p-53; // [0,1)
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

  private:
    static constexpr std::uint64_t domain_tag = 0x7477726c79303153ull;

    void refill() {
        buf_ = Philox4x64::block(base_, key_);
        ++base_[0];
        pos_ = 0;
    }

    Philox4x64::Key key_;
    Philox4x64::Counter base_;
    std::array<std::uint64_t, 4> buf_{};
    int pos_ = 4;
};

} // namespace twrelay

#endif
