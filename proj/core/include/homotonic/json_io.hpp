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

// JSON forms of every value that crosses the library boundary.
//
//   Element   real field: [x, ...]; complex field: [[re, im], ...]; matrix
//             grids row-major.
//   Product   {"kind":"matrix","n":3} | {"kind":"pointwise","size":4}
//             | {"kind":"jordan","base":{...}}
//             | {"kind":"convolution","kappa":1.0,"p":1.0,"grid":128}
//             | {"kind":"tensor","size":m,"c":[[[...]]]}  (c[u][s][v])
//             | {"kind":"dilation"} | {"kind":"plane"}
//   Algebra   a Product object plus optional "field": "real"|"complex" and
//             "subalgebra": "A2" (matrix n = 2 only).
//   Weight    [w, ...] | {"uniform": mu} | {"dilation_nu": nu}
//   Matrix    {"n": 2, "entries": [[re, im], ...]} row-major; plain numbers
//             are accepted as real entries.

#ifndef HOMOTONIC_JSON_IO_HPP
#define HOMOTONIC_JSON_IO_HPP

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "homotonic/core.hpp"
#include "homotonic/homotonicity.hpp"
#include "homotonic/norms.hpp"
#include "homotonic/products.hpp"
#include "homotonic/spectral.hpp"

namespace homotonic {

using json = nlohmann::json;

/// Well-formed JSON that does not describe a valid value.
class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

json to_json(const Element& f);
Element element_from_json(const json& j, const Carrier& carrier, Field field);

json to_json(const Product& p);
Product product_from_json(const json& j);

json to_json(const AlgebraSpec& algebra);
AlgebraSpec algebra_from_json(const json& j);

json to_json(const Weight& w);
/// The weight's carrier comes from the algebra it will be used with.
Weight weight_from_json(const json& j, const Carrier& carrier);

json to_json(const SquareMatrix& a);
SquareMatrix matrix_from_json(const json& j);

json to_json(const OrderCheck& check);
json to_json(const CheckReport& report);
json to_json(const EquivalenceReport& report);
json to_json(const Certificate& cert);
json to_json(const LambdaEstimate& estimate);
json to_json(const StabilityReport& report);
json to_json(const BergerReport& report);
json to_json(const RadiusSubmultWitness& witness);
json to_json(const BergerSweepReport& sweep);

} // namespace homotonic

#endif // HOMOTONIC_JSON_IO_HPP
