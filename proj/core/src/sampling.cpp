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

#include "homotonic/sampling.hpp"

namespace homotonic {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t index, std::uint32_t slot)
{
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(index),
        static_cast<std::uint32_t>(index >> 32),
        slot,
    };
    return std::mt19937_64(seq);
}

} // namespace

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t index, std::uint32_t slot)
    : engine_(make_engine(seed, index, slot))
{
}

double SampleStream::uniform(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

Element sample_element(const Carrier& carrier, Field field, SampleStream& stream,
                       bool nonnegative)
{
    const double lo = nonnegative ? 0.0 : -1.0;
    std::vector<Scalar> v(carrier.size());
    for (auto& x : v) {
        const double re = stream.uniform(lo, 1.0);
        const double im = (field == Field::complex && !nonnegative) ? stream.uniform(-1.0, 1.0) : 0.0;
        x = Scalar(re, im);
    }
    return Element(carrier, field, std::move(v));
}

} // namespace homotonic
