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

#include "homotonic/json_io.hpp"

namespace homotonic {

namespace {

const json& require(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw SchemaError(std::string("missing key \"") + key + "\"");
    }
    return j.at(key);
}

double number(const json& j, const char* what)
{
    if (!j.is_number()) {
        throw SchemaError(std::string(what) + ": expected a number");
    }
    return j.get<double>();
}

std::size_t count(const json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 1) {
        throw SchemaError(std::string(what) + ": expected a positive integer");
    }
    return j.get<std::size_t>();
}

Scalar scalar(const json& j, const char* what)
{
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return Scalar(j[0].get<double>(), j[1].get<double>());
    }
    throw SchemaError(std::string(what) + ": expected a number or an [re, im] pair");
}

json scalar_json(const Scalar& s)
{
    return json::array({s.real(), s.imag()});
}

Field field_from(const json& j)
{
    if (!j.contains("field")) {
        return Field::real;
    }
    const auto& f = j.at("field");
    if (f == "real") return Field::real;
    if (f == "complex") return Field::complex;
    throw SchemaError("field: expected \"real\" or \"complex\"");
}

json element_values(std::span<const Scalar> values, Field field)
{
    json out = json::array();
    for (const auto& v : values) {
        if (field == Field::real) {
            out.push_back(v.real());
        } else {
            out.push_back(scalar_json(v));
        }
    }
    return out;
}

} // namespace

json to_json(const Element& f)
{
    return element_values(f.values(), f.field());
}

Element element_from_json(const json& j, const Carrier& carrier, Field field)
{
    if (!j.is_array()) {
        throw SchemaError("element: expected an array");
    }
    if (j.size() != carrier.size()) {
        throw SchemaError("element: expected " + std::to_string(carrier.size()) + " values, got " +
                          std::to_string(j.size()));
    }
    std::vector<Scalar> v;
    v.reserve(j.size());
    for (const auto& x : j) {
        v.push_back(scalar(x, "element value"));
    }
    try {
        return Element(carrier, field, std::move(v));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

json to_json(const Product& p)
{
    switch (p.kind()) {
    case Product::Kind::pointwise: return {{"kind", "pointwise"}, {"size", p.carrier().size()}};
    case Product::Kind::matrix: return {{"kind", "matrix"}, {"n", p.matrix_dim()}};
    case Product::Kind::jordan: return {{"kind", "jordan"}, {"base", to_json(p.base())}};
    case Product::Kind::convolution:
        return {{"kind", "convolution"}, {"kappa", p.kappa()}, {"p", p.period()}, {"grid", p.grid()}};
    case Product::Kind::tensor: {
        const auto& c = p.tensor_coefficients();
        const std::size_t m = c.size();
        json cu = json::array();
        for (std::size_t u = 0; u < m; ++u) {
            json cs = json::array();
            for (std::size_t s = 0; s < m; ++s) {
                json cv = json::array();
                for (std::size_t v = 0; v < m; ++v) {
                    if (c.field() == Field::real) {
                        cv.push_back(c.at(u, s, v).real());
                    } else {
                        cv.push_back(scalar_json(c.at(u, s, v)));
                    }
                }
                cs.push_back(std::move(cv));
            }
            cu.push_back(std::move(cs));
        }
        return {{"kind", "tensor"}, {"size", m}, {"c", std::move(cu)}};
    }
    case Product::Kind::dilation: return {{"kind", "dilation"}};
    case Product::Kind::plane: return {{"kind", "plane"}};
    }
    throw std::logic_error("to_json: unknown product kind");
}

Product product_from_json(const json& j)
{
    const auto& kind_j = require(j, "kind");
    if (!kind_j.is_string()) {
        throw SchemaError("kind: expected a string");
    }
    const std::string kind = kind_j.get<std::string>();
    try {
        if (kind == "pointwise") {
            return Product::pointwise(count(require(j, "size"), "size"));
        }
        if (kind == "matrix") {
            return Product::matrix(count(require(j, "n"), "n"));
        }
        if (kind == "jordan") {
            return Product::jordan(product_from_json(require(j, "base")));
        }
        if (kind == "convolution") {
            return Product::convolution(number(require(j, "kappa"), "kappa"), number(require(j, "p"), "p"),
                                        count(require(j, "grid"), "grid"));
        }
        if (kind == "tensor") {
            const std::size_t m = count(require(j, "size"), "size");
            const auto& c = require(j, "c");
            std::vector<Scalar> coeffs;
            coeffs.reserve(m * m * m);
            bool complex = false;
            if (!c.is_array() || c.size() != m) {
                throw SchemaError("tensor c: expected " + std::to_string(m) + " slices");
            }
            for (const auto& cs : c) {
                if (!cs.is_array() || cs.size() != m) {
                    throw SchemaError("tensor c: ragged second index");
                }
                for (const auto& cv : cs) {
                    if (!cv.is_array() || cv.size() != m) {
                        throw SchemaError("tensor c: ragged third index");
                    }
                    for (const auto& x : cv) {
                        coeffs.push_back(scalar(x, "tensor coefficient"));
                        complex = complex || coeffs.back().imag() != 0.0;
                    }
                }
            }
            return Product::tensor(
                StructureTensor(m, complex ? Field::complex : Field::real, std::move(coeffs)));
        }
        if (kind == "dilation") {
            return Product::dilation();
        }
        if (kind == "plane") {
            return Product::plane();
        }
    } catch (const SchemaError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    throw SchemaError("unknown product kind \"" + kind + "\"");
}

json to_json(const AlgebraSpec& algebra)
{
    json j = to_json(algebra.product());
    j["field"] = to_string(algebra.field());
    if (algebra.membership() == Membership::a2_real) {
        j["subalgebra"] = "A2";
    }
    return j;
}

AlgebraSpec algebra_from_json(const json& j)
{
    Product product = product_from_json(j);
    const Field field = field_from(j);
    Membership membership = Membership::full;
    if (j.contains("subalgebra")) {
        if (j.at("subalgebra") != "A2") {
            throw SchemaError("subalgebra: only \"A2\" is built in");
        }
        membership = Membership::a2_real;
    } else if (product.kind() == Product::Kind::dilation) {
        membership = Membership::dilation_line;
    }
    try {
        return AlgebraSpec(std::move(product), field, membership);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

json to_json(const Weight& w)
{
    if (w.is_dilation()) {
        return {{"dilation_nu", w.values()[0]}};
    }
    return json(std::vector<double>(w.values().begin(), w.values().end()));
}

Weight weight_from_json(const json& j, const Carrier& carrier)
{
    try {
        if (j.is_array()) {
            std::vector<double> v;
            for (const auto& x : j) {
                v.push_back(number(x, "weight value"));
            }
            if (v.size() != carrier.size()) {
                throw SchemaError("weight: expected " + std::to_string(carrier.size()) +
                                  " values, got " + std::to_string(v.size()));
            }
            return Weight(carrier, std::move(v));
        }
        if (j.is_object() && j.contains("uniform")) {
            return Weight::uniform(carrier, number(j.at("uniform"), "uniform"));
        }
        if (j.is_object() && j.contains("dilation_nu")) {
            return Weight::dilation(number(j.at("dilation_nu"), "dilation_nu"));
        }
    } catch (const SchemaError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    throw SchemaError("weight: expected an array, {\"uniform\": mu} or {\"dilation_nu\": nu}");
}

json to_json(const SquareMatrix& a)
{
    json entries = json::array();
    for (const auto& x : a.entries()) {
        entries.push_back(scalar_json(x));
    }
    return {{"n", a.dim()}, {"entries", std::move(entries)}};
}

SquareMatrix matrix_from_json(const json& j)
{
    const std::size_t n = count(require(j, "n"), "n");
    const auto& e = require(j, "entries");
    if (!e.is_array()) {
        throw SchemaError("entries: expected an array");
    }
    std::vector<Scalar> v;
    for (const auto& x : e) {
        v.push_back(scalar(x, "matrix entry"));
    }
    try {
        return SquareMatrix(n, std::move(v));
    } catch (const std::invalid_argument& ex) {
        throw SchemaError(ex.what());
    }
}

json to_json(const OrderCheck& check)
{
    return {{"holds", check.holds},
            {"worst_index", check.worst_index},
            {"worst_difference", check.worst_difference},
            {"slack", check.slack}};
}

json to_json(const CheckReport& report)
{
    json j{{"condition", to_string(report.condition)},
           {"verdict", to_string(report.verdict)},
           {"method", report.method},
           {"samples", report.samples},
           {"candidates", report.candidates},
           {"seed", report.seed},
           {"tol", report.tol}};
    if (report.witness) {
        const auto& w = *report.witness;
        json elements = json::array();
        for (const auto& e : w.elements) {
            elements.push_back(to_json(e));
        }
        j["witness"] = {{"elements", std::move(elements)},
                        {"index", w.index},
                        {"magnitude", w.magnitude},
                        {"sample_index", w.sample_index},
                        {"from_candidate", w.from_candidate}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json to_json(const EquivalenceReport& report)
{
    json checks = json::array({to_json(report.abs_closed), to_json(report.ii)});
    if (report.ii_real) {
        checks.push_back(to_json(*report.ii_real));
    }
    checks.push_back(to_json(report.ii_prime));
    return {{"checks", std::move(checks)},
            {"homotonic_via_ii", report.via_ii},
            {"homotonic_via_ii_R", report.via_ii_real},
            {"homotonic_via_ii_prime", report.via_ii_prime},
            {"consistent", report.consistent},
            {"homotonic", report.homotonic()}};
}

json to_json(const Certificate& cert)
{
    json j{{"verdict", to_string(cert.verdict)},
           {"margin", cert.margin},
           {"worst_index", cert.worst_index},
           {"slack", cert.slack},
           {"criterion_only", cert.criterion_only},
           {"norms",
            {{"inverse", cert.norm_inverse}, {"inverse_squared", cert.norm_inverse_squared}}}};
    if (!cert.note.empty()) {
        j["note"] = cert.note;
    }
    if (cert.witness) {
        j["witness"] = {{"f", to_json(cert.witness->f)},
                        {"g", to_json(cert.witness->g)},
                        {"norm_f", cert.witness->norm_f},
                        {"norm_g", cert.witness->norm_g},
                        {"norm_product", cert.witness->norm_product}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json to_json(const LambdaEstimate& estimate)
{
    return {{"lambda", estimate.value},
            {"f", to_json(estimate.f)},
            {"g", to_json(estimate.g)},
            {"from_candidate", estimate.from_candidate},
            {"sample_index", estimate.sample_index},
            {"samples", estimate.samples}};
}

json to_json(const StabilityReport& report)
{
    json j{{"stable", report.stable},
           {"worst_ratio", report.worst_ratio},
           {"worst_k", report.worst_k},
           {"samples", report.samples},
           {"max_power", report.max_power}};
    if (report.violation) {
        const auto& v = *report.violation;
        j["violation"] = {{"f", to_json(v.f)},
                          {"k", v.k},
                          {"ratio", v.ratio},
                          {"sample_index", v.sample_index},
                          {"from_candidate", v.from_candidate}};
    } else {
        j["violation"] = nullptr;
    }
    return j;
}

json to_json(const BergerReport& report)
{
    return {{"holds", report.holds},
            {"radius", report.radius},
            {"ratios", report.ratios},
            {"worst_ratio", report.worst_ratio},
            {"worst_k", report.worst_k}};
}

json to_json(const RadiusSubmultWitness& witness)
{
    return {{"A", to_json(witness.a)},
            {"B", to_json(witness.b)},
            {"r_A", witness.radius_a},
            {"r_B", witness.radius_b},
            {"r_AB", witness.radius_ab},
            {"submultiplicative", witness.radius_ab <= witness.radius_a * witness.radius_b}};
}

json to_json(const BergerSweepReport& sweep)
{
    return {{"matrices", sweep.matrices},
            {"violations", sweep.violations},
            {"worst_ratio", sweep.worst_ratio},
            {"worst_matrix", sweep.worst_matrix},
            {"max_power", sweep.max_power},
            {"seed", sweep.seed}};
}

} // namespace homotonic
