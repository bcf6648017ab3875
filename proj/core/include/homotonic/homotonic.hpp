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

#ifndef HOMOTONIC_HOMOTONIC_HPP
#define HOMOTONIC_HOMOTONIC_HPP

#include "homotonic/core.hpp"
#include "homotonic/homotonicity.hpp"
#include "homotonic/json_io.hpp"
#include "homotonic/norms.hpp"
#include "homotonic/products.hpp"
#include "homotonic/sampling.hpp"
#include "homotonic/spectral.hpp"

namespace homotonic {

inline constexpr const char* version = HOMOTONIC_VERSION_STRING;

} // namespace homotonic

#endif // HOMOTONIC_HOMOTONIC_HPP
