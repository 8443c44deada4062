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

#ifndef TWRELAY_SUMMATION_HPP
#define TWRELAY_SUMMATION_HPP

#include <cmath>

namespace twrelay {

// Neumaier-compensated accumulator. The alternating-sign series in the
// outage closed forms lose digits under plain summation.
template <typename T>
class BasicNeumaierSum {
  public:
    void add(T x) {
        const T t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    T value() const { return sum_ + comp_; }

  private:
    T sum_ = 0;
    T comp_ = 0;
};

using NeumaierSum = BasicNeumaierSum<double>;
using NeumaierSumL = BasicNeumaierSum<long double>;

} // namespace twrelay

#endif
