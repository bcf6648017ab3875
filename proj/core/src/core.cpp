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

#include "homotonic/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace homotonic {

std::string to_string(Field field)
{
    return field == Field::real ? "real" : "complex";
}

std::string to_string(Carrier::Kind kind)
{
    switch (kind) {
    case Carrier::Kind::plain: return "plain";
    case Carrier::Kind::matrix_grid: return "matrix-grid";
    case Carrier::Kind::periodic_grid: return "periodic-grid";
    }
    return "unknown";
}

Carrier Carrier::plain(std::size_t size)
{
    if (size == 0) {
        throw std::invalid_argument("carrier: size must be at least 1");
    }
    return Carrier(Kind::plain, size, size, 0.0, 0.0);
}

Carrier Carrier::matrix_grid(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("carrier: matrix dimension must be at least 1");
    }
    return Carrier(Kind::matrix_grid, n * n, n, 0.0, 0.0);
}

Carrier Carrier::periodic_grid(double period, std::size_t nodes)
{
    if (nodes == 0) {
        throw std::invalid_argument("carrier: periodic grid needs at least one node");
    }
    if (!(period > 0.0) || !std::isfinite(period)) {
        throw std::invalid_argument("carrier: period must be positive and finite");
    }
    return Carrier(Kind::periodic_grid, nodes, nodes, period, period / static_cast<double>(nodes));
}

Element::Element(Carrier carrier, Field field, std::vector<Scalar> values)
    : carrier_(carrier), field_(field), values_(std::move(values))
{
    if (values_.size() != carrier_.size()) {
        throw CarrierMismatch("element: expected " + std::to_string(carrier_.size()) +
                              " values, got " + std::to_string(values_.size()));
    }
    for (const auto& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("element: non-finite value");
        }
        if (field_ == Field::real && v.imag() != 0.0) {
            throw std::invalid_argument("element: real-field element with imaginary part");
        }
    }
}

Element Element::real(Carrier carrier, std::span<const double> values)
{
    std::vector<Scalar> v(values.begin(), values.end());
    return Element(carrier, Field::real, std::move(v));
}

Element Element::real(Carrier carrier, std::initializer_list<double> values)
{
    return real(carrier, std::span<const double>(values.begin(), values.size()));
}

Element Element::zero(Carrier carrier, Field field)
{
    return Element(carrier, field, std::vector<Scalar>(carrier.size()));
}

Element Element::constant(Carrier carrier, Scalar value, Field field)
{
    return Element(carrier, field, std::vector<Scalar>(carrier.size(), value));
}

Element Element::indicator(Carrier carrier, std::size_t index, Field field)
{
    if (index >= carrier.size()) {
        throw std::out_of_range("indicator: index outside carrier");
    }
    std::vector<Scalar> v(carrier.size());
    v[index] = 1.0;
    return Element(carrier, field, std::move(v));
}

bool Element::is_real_valued() const noexcept
{
    return std::all_of(values_.begin(), values_.end(),
                       [](const Scalar& v) { return v.imag() == 0.0; });
}

std::vector<double> Element::real_values() const
{
    if (!is_real_valued()) {
        throw NotRealValued("element is not real-valued");
    }
    std::vector<double> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(),
                   [](const Scalar& v) { return v.real(); });
    return out;
}

double modulus(const Scalar& s) noexcept
{
    // std::abs on a complex with zero imaginary part is exactly |re|.
    return s.imag() == 0.0 ? std::fabs(s.real()) : std::abs(s);
}

void require_same_carrier(const Element& f, const Element& g, const char* where)
{
    if (!(f.carrier() == g.carrier())) {
        throw CarrierMismatch(std::string(where) + ": carrier mismatch (" +
                              to_string(f.carrier().kind()) + "/" + std::to_string(f.size()) +
                              " vs " + to_string(g.carrier().kind()) + "/" +
                              std::to_string(g.size()) + ")");
    }
}

namespace {

Field promote(Field a, Field b)
{
    return (a == Field::complex || b == Field::complex) ? Field::complex : Field::real;
}

} // namespace

Element add(const Element& f, const Element& g)
{
    require_same_carrier(f, g, "add");
    std::vector<Scalar> out(f.size());
    for (std::size_t t = 0; t < out.size(); ++t) {
        out[t] = f[t] + g[t];
    }
    return Element(f.carrier(), promote(f.field(), g.field()), std::move(out));
}

Element subtract(const Element& f, const Element& g)
{
    require_same_carrier(f, g, "subtract");
    std::vector<Scalar> out(f.size());
    for (std::size_t t = 0; t < out.size(); ++t) {
        out[t] = f[t] - g[t];
    }
    return Element(f.carrier(), promote(f.field(), g.field()), std::move(out));
}

Element scale(const Scalar& alpha, const Element& f)
{
    const Field field = alpha.imag() == 0.0 ? f.field() : Field::complex;
    std::vector<Scalar> out(f.size());
    for (std::size_t t = 0; t < out.size(); ++t) {
        // Real scaling stays on the real line exactly.
        out[t] = alpha.imag() == 0.0 ? alpha.real() * f[t] : alpha * f[t];
    }
    return Element(f.carrier(), field, std::move(out));
}

Element abs(const Element& f)
{
    std::vector<Scalar> out(f.size());
    for (std::size_t t = 0; t < out.size(); ++t) {
        out[t] = modulus(f[t]);
    }
    return Element(f.carrier(), f.field(), std::move(out));
}

double sup_norm(const Element& f) noexcept
{
    double m = 0.0;
    for (const auto& v : f.values()) {
        m = std::max(m, modulus(v));
    }
    return m;
}

OrderCheck leq(const Element& f, const Element& g, double tol)
{
    require_same_carrier(f, g, "leq");
    if (!f.is_real_valued() || !g.is_real_valued()) {
        throw NotRealValued("leq: order is only defined for real-valued functions");
    }
    OrderCheck result;
    result.slack = tol * std::max({1.0, sup_norm(f), sup_norm(g)});
    result.worst_difference = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < f.size(); ++t) {
        const double d = f[t].real() - g[t].real();
        if (d > result.worst_difference) {
            result.worst_difference = d;
            result.worst_index = t;
        }
    }
    result.holds = result.worst_difference <= result.slack;
    return result;
}

Element pos_part(const Element& u)
{
    const auto v = u.real_values();
    std::vector<Scalar> out(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) {
        out[t] = 0.5 * (std::fabs(v[t]) + v[t]);
    }
    return Element(u.carrier(), u.field(), std::move(out));
}

Element neg_part(const Element& u)
{
    const auto v = u.real_values();
    std::vector<Scalar> out(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) {
        out[t] = 0.5 * (std::fabs(v[t]) - v[t]);
    }
    return Element(u.carrier(), u.field(), std::move(out));
}

} // namespace homotonic
