// Copyright 2026 The homotonic Authors
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

#ifndef HOMOTONIC_SAMPLING_HPP
#define HOMOTONIC_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "homotonic/core.hpp"

namespace homotonic {

/// Parameters shared by every sampling checker.
struct SamplingConfig {
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    double tol = default_tolerance;
};

/// Random stream for one (seed, sample index, slot) triple.
///
/// Streams are derived from the counter, never from a shared generator, so
/// sample i draws the same values whether samples run serially, in parallel
/// or one at a time.
class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::uint64_t index, std::uint32_t slot);

    double uniform(double lo, double hi);

private:
    std::mt19937_64 engine_;
};

/// Element with components uniform on [-1, 1] (or [0, 1] when nonnegative).
/// Complex fields draw real and imaginary parts independently; nonnegative
/// draws are always real-valued.
Element sample_element(const Carrier& carrier, Field field, SampleStream& stream,
                       bool nonnegative = false);

} // namespace homotonic

#endif // HOMOTONIC_SAMPLING_HPP
