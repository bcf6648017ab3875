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

#ifndef HOMOTONIC_CORE_HPP
#define HOMOTONIC_CORE_HPP

#include <complex>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace homotonic {

using Scalar = std::complex<double>;

/// Scalar field of an algebra. A whole algebra is uniformly one or the other.
enum class Field { real, complex };

/// Default relative tolerance for every order comparison in the library.
inline constexpr double default_tolerance = 1e-9;

class CarrierMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation needs real values (order, positive/negative part)
/// and receives a function with a nonzero imaginary part.
class NotRealValued : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

std::string to_string(Field field);

/// The finite index set on which algebra members are functions.
///
/// A matrix grid of dimension n holds the pairs (j,k), stored row-major as
/// j * n + k with 0-based indices. A periodic grid holds n equally spaced
/// nodes t_i = i * h on [0, p) with spacing h = p / n.
class Carrier {
public:
    enum class Kind { plain, matrix_grid, periodic_grid };

    static Carrier plain(std::size_t size);
    static Carrier matrix_grid(std::size_t n);
    static Carrier periodic_grid(double period, std::size_t nodes);

    Kind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return size_; }

    /// Matrix dimension n for matrix grids, node count for periodic grids,
    /// size otherwise.
    std::size_t dim() const noexcept { return dim_; }

    double period() const noexcept { return period_; }
    double spacing() const noexcept { return spacing_; }

    bool operator==(const Carrier&) const = default;

private:
    Carrier(Kind kind, std::size_t size, std::size_t dim, double period, double spacing)
        : kind_(kind), size_(size), dim_(dim), period_(period), spacing_(spacing) {}

    Kind kind_;
    std::size_t size_;
    std::size_t dim_;
    double period_;
    double spacing_;
};

std::string to_string(Carrier::Kind kind);

/// A scalar-valued function on a carrier. Immutable once built.
///
/// Values are stored as complex numbers; a real-field element always has
/// zero imaginary parts. Non-finite values are rejected at construction.
class Element {
public:
    Element(Carrier carrier, Field field, std::vector<Scalar> values);

    static Element real(Carrier carrier, std::span<const double> values);
    static Element real(Carrier carrier, std::initializer_list<double> values);
    static Element zero(Carrier carrier, Field field = Field::real);
    static Element constant(Carrier carrier, Scalar value, Field field = Field::real);
    static Element indicator(Carrier carrier, std::size_t index, Field field = Field::real);

    const Carrier& carrier() const noexcept { return carrier_; }
    Field field() const noexcept { return field_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const Scalar> values() const noexcept { return values_; }
    const Scalar& operator[](std::size_t t) const { return values_[t]; }

    /// True when every imaginary part is exactly zero, whatever the field.
    bool is_real_valued() const noexcept;

    /// Real parts; throws NotRealValued unless is_real_valued().
    std::vector<double> real_values() const;

    bool operator==(const Element&) const = default;

private:
    Carrier carrier_;
    Field field_;
    std::vector<Scalar> values_;
};

double modulus(const Scalar& s) noexcept;

Element add(const Element& f, const Element& g);
Element subtract(const Element& f, const Element& g);
Element scale(const Scalar& alpha, const Element& f);

inline Element operator+(const Element& f, const Element& g) { return add(f, g); }
inline Element operator-(const Element& f, const Element& g) { return subtract(f, g); }
inline Element operator*(const Scalar& alpha, const Element& f) { return scale(alpha, f); }

/// |f|(t) = |f(t)|. The result keeps the field of f but is real-valued.
Element abs(const Element& f);

/// max_t |f(t)|
double sup_norm(const Element& f) noexcept;

/// Result of a pointwise comparison f <= g.
struct OrderCheck {
    bool holds = true;
    std::size_t worst_index = 0;   // argmax_t (f(t) - g(t))
    double worst_difference = 0.0; // f(t) - g(t) at worst_index; > slack when violated
    double slack = 0.0;            // tol * max(1, |f|_inf, |g|_inf)

    explicit operator bool() const noexcept { return holds; }
};

/// f <= g pointwise, up to tol * max(1, |f|_inf, |g|_inf).
/// Both arguments must be real-valued and share a carrier.
OrderCheck leq(const Element& f, const Element& g, double tol = default_tolerance);

/// u+ = (|u| + u) / 2 and u- = (|u| - u) / 2 for real-valued u.
Element pos_part(const Element& u);
Element neg_part(const Element& u);

/// Left-accumulated power f^k = (...((f x f) x f)...) x f for k >= 1.
template <class Multiply>
    requires std::invocable<Multiply, const Element&, const Element&>
Element power(const Element& f, unsigned k, Multiply&& multiply)
{
    if (k == 0) {
        throw std::invalid_argument("power: exponent must be at least 1");
    }
    Element acc = f;
    for (unsigned i = 1; i < k; ++i) {
        acc = multiply(acc, f);
    }
    return acc;
}

void require_same_carrier(const Element& f, const Element& g, const char* where);

} // namespace homotonic

#endif // HOMOTONIC_CORE_HPP
