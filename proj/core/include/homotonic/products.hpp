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

#ifndef HOMOTONIC_PRODUCTS_HPP
#define HOMOTONIC_PRODUCTS_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "homotonic/core.hpp"
#include "homotonic/sampling.hpp"

namespace homotonic {

/// Coefficients c[u][s][v] of a bilinear product in the indicator basis:
/// (f x g)(u) = sum_{s,v} c[u][s][v] f(s) g(v).
class StructureTensor {
public:
    StructureTensor(std::size_t size, Field field, std::vector<Scalar> coefficients);

    static StructureTensor zeros(std::size_t size, Field field = Field::real);

    std::size_t size() const noexcept { return size_; }
    Field field() const noexcept { return field_; }
    std::span<const Scalar> coefficients() const noexcept { return c_; }

    const Scalar& at(std::size_t u, std::size_t s, std::size_t v) const
    {
        return c_[(u * size_ + s) * size_ + v];
    }

    /// Copy with one coefficient replaced.
    StructureTensor with(std::size_t u, std::size_t s, std::size_t v, Scalar value) const;

    bool operator==(const StructureTensor&) const = default;

private:
    std::size_t size_;
    Field field_;
    std::vector<Scalar> c_;
};

/// A bilinear multiplication on the functions over one carrier.
///
/// Kinds and their carriers:
///   pointwise(m)            plain(m)            (f x g)(t) = f(t) g(t)
///   matrix(n)               matrix_grid(n)      ordinary matrix product
///   jordan(base)            base carrier        (base(f,g) + base(g,f)) / 2
///   convolution(k, p, n)    periodic_grid(p,n)  k h sum_j f(t_{i-j}) g(t_j)
///   tensor(c)               plain(m)            sum c[u][s][v] f(s) g(v)
///   dilation                plain(1)            coefficient of f(t) = a t; a * b
///   plane                   plain(2)            (a c - b d, a d + b c)
class Product {
public:
    enum class Kind { pointwise, matrix, jordan, convolution, tensor, dilation, plane };

    static Product pointwise(std::size_t size);
    static Product matrix(std::size_t n);
    static Product jordan(Product base);
    static Product convolution(double kappa, double period, std::size_t grid);
    static Product tensor(StructureTensor coefficients);
    static Product dilation();
    static Product plane();

    Kind kind() const noexcept;
    const Carrier& carrier() const noexcept { return carrier_; }

    /// Matrix dimension (matrix kind only).
    std::size_t matrix_dim() const;
    /// Base product (jordan kind only).
    const Product& base() const;
    double kappa() const;
    double period() const;
    std::size_t grid() const;
    /// Coefficients (tensor kind only).
    const StructureTensor& tensor_coefficients() const;

    Element operator()(const Element& f, const Element& g) const;

private:
    struct Pointwise {};
    struct Matrix {
        std::size_t n;
    };
    struct Jordan {
        std::shared_ptr<const Product> base;
    };
    struct Convolution {
        double kappa;
        double period;
        std::size_t grid;
    };
    struct Tensor {
        StructureTensor c;
    };
    struct Dilation {};
    struct Plane {};

    using Repr = std::variant<Pointwise, Matrix, Jordan, Convolution, Tensor, Dilation, Plane>;

    Product(Repr repr, Carrier carrier) : repr_(std::move(repr)), carrier_(carrier) {}

    Repr repr_;
    Carrier carrier_;
};

std::string to_string(Product::Kind kind);

Element multiply(const Product& product, const Element& f, const Element& g);

/// f^k with the left-accumulated bracketing (...((f x f) x f)...) x f.
Element power(const Product& product, const Element& f, unsigned k);

/// The Jordan symmetrization of base; commutative by construction.
Product jordanize(const Product& base);

/// Coefficients of product computed from indicator pairs; the convolution
/// kind is filled in closed form (every coefficient is kappa * h or zero).
StructureTensor structure_tensor(const Product& product, Field field = Field::real);

/// Which functions on the carrier belong to an algebra.
enum class Membership {
    full,          ///< every function on the carrier
    a2_real,       ///< real 2x2 matrices of the form (a b; -b a)
    dilation_line, ///< functions a t on (0, inf), stored by their coefficient a
};

std::string to_string(Membership membership);

/// An algebra: scalar field, product and membership rule.
class AlgebraSpec {
public:
    /// Throws std::invalid_argument when membership and product disagree
    /// (a2_real needs matrix(2) over the reals; the dilation product needs
    /// dilation_line and vice versa).
    AlgebraSpec(Product product, Field field = Field::real, Membership membership = Membership::full);

    static AlgebraSpec a2_real();
    static AlgebraSpec dilation_line();

    const Product& product() const noexcept { return product_; }
    Field field() const noexcept { return field_; }
    Membership membership() const noexcept { return membership_; }
    const Carrier& carrier() const noexcept { return product_.carrier(); }

    /// Whether the algebra is the full function space over its carrier.
    bool is_full() const noexcept { return membership_ == Membership::full; }

    bool contains(const Element& f, double tol = default_tolerance) const;

    Element multiply(const Element& f, const Element& g) const { return product_(f, g); }

    /// Random member; nonnegative draws have every value in [0, 1].
    Element sample_member(SampleStream& stream, bool nonnegative = false) const;

    /// Short human-readable description, e.g. "matrix(3) over real".
    std::string describe() const;

private:
    Product product_;
    Field field_;
    Membership membership_;
};

/// The full-algebra structure tensor. Throws std::invalid_argument for
/// membership-restricted algebras, whose indicators need not be members.
StructureTensor structure_tensor(const AlgebraSpec& algebra);

/// Membership in { (a b; -b a) : a, b real } up to tol.
bool membership_A2(const Element& f, double tol = default_tolerance);

} // namespace homotonic

#endif // HOMOTONIC_PRODUCTS_HPP
