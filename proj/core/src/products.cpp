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

#include "homotonic/products.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace homotonic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Field promote(Field a, Field b)
{
    return (a == Field::complex || b == Field::complex) ? Field::complex : Field::real;
}

bool has_complex_coefficients(const StructureTensor& c)
{
    return std::any_of(c.coefficients().begin(), c.coefficients().end(),
                       [](const Scalar& x) { return x.imag() != 0.0; });
}

} // namespace

StructureTensor::StructureTensor(std::size_t size, Field field, std::vector<Scalar> coefficients)
    : size_(size), field_(field), c_(std::move(coefficients))
{
    if (size_ == 0) {
        throw std::invalid_argument("structure tensor: size must be at least 1");
    }
    if (c_.size() != size_ * size_ * size_) {
        throw std::invalid_argument("structure tensor: expected size^3 coefficients");
    }
    for (const auto& x : c_) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            throw std::invalid_argument("structure tensor: non-finite coefficient");
        }
        if (field_ == Field::real && x.imag() != 0.0) {
            throw std::invalid_argument("structure tensor: real tensor with imaginary coefficient");
        }
    }
}

StructureTensor StructureTensor::zeros(std::size_t size, Field field)
{
    return StructureTensor(size, field, std::vector<Scalar>(size * size * size));
}

StructureTensor StructureTensor::with(std::size_t u, std::size_t s, std::size_t v, Scalar value) const
{
    if (u >= size_ || s >= size_ || v >= size_) {
        throw std::out_of_range("structure tensor: index out of range");
    }
    auto c = c_;
    c[(u * size_ + s) * size_ + v] = value;
    const Field field = value.imag() != 0.0 ? Field::complex : field_;
    return StructureTensor(size_, field, std::move(c));
}

std::string to_string(Product::Kind kind)
{
    switch (kind) {
    case Product::Kind::pointwise: return "pointwise";
    case Product::Kind::matrix: return "matrix";
    case Product::Kind::jordan: return "jordan";
    case Product::Kind::convolution: return "convolution";
    case Product::Kind::tensor: return "tensor";
    case Product::Kind::dilation: return "dilation";
    case Product::Kind::plane: return "plane";
    }
    return "unknown";
}

Product Product::pointwise(std::size_t size)
{
    return Product(Pointwise{}, Carrier::plain(size));
}

Product Product::matrix(std::size_t n)
{
    return Product(Matrix{n}, Carrier::matrix_grid(n));
}

Product Product::jordan(Product base)
{
    const Carrier carrier = base.carrier();
    return Product(Jordan{std::make_shared<const Product>(std::move(base))}, carrier);
}

Product Product::convolution(double kappa, double period, std::size_t grid)
{
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
        throw std::invalid_argument("convolution: kappa must be positive and finite");
    }
    return Product(Convolution{kappa, period, grid}, Carrier::periodic_grid(period, grid));
}

Product Product::tensor(StructureTensor coefficients)
{
    const Carrier carrier = Carrier::plain(coefficients.size());
    return Product(Tensor{std::move(coefficients)}, carrier);
}

Product Product::dilation()
{
    return Product(Dilation{}, Carrier::plain(1));
}

Product Product::plane()
{
    return Product(Plane{}, Carrier::plain(2));
}

Product::Kind Product::kind() const noexcept
{
    return static_cast<Kind>(repr_.index());
}

std::size_t Product::matrix_dim() const
{
    if (const auto* m = std::get_if<Matrix>(&repr_)) {
        return m->n;
    }
    throw std::logic_error("product: not a matrix product");
}

const Product& Product::base() const
{
    if (const auto* j = std::get_if<Jordan>(&repr_)) {
        return *j->base;
    }
    throw std::logic_error("product: not a Jordan product");
}

double Product::kappa() const
{
    if (const auto* c = std::get_if<Convolution>(&repr_)) {
        return c->kappa;
    }
    throw std::logic_error("product: not a convolution");
}

double Product::period() const
{
    if (const auto* c = std::get_if<Convolution>(&repr_)) {
        return c->period;
    }
    throw std::logic_error("product: not a convolution");
}

std::size_t Product::grid() const
{
    if (const auto* c = std::get_if<Convolution>(&repr_)) {
        return c->grid;
    }
    throw std::logic_error("product: not a convolution");
}

const StructureTensor& Product::tensor_coefficients() const
{
    if (const auto* t = std::get_if<Tensor>(&repr_)) {
        return t->c;
    }
    throw std::logic_error("product: not a tensor product");
}

Element Product::operator()(const Element& f, const Element& g) const
{
    if (!(f.carrier() == carrier_) || !(g.carrier() == carrier_)) {
        throw CarrierMismatch("multiply: operands are not on the " + to_string(kind()) +
                              " product's carrier");
    }
    const Field field = promote(f.field(), g.field());
    const std::size_t m = carrier_.size();

    return std::visit(
        overloaded{
            [&](const Pointwise&) {
                std::vector<Scalar> out(m);
                for (std::size_t t = 0; t < m; ++t) {
                    out[t] = f[t] * g[t];
                }
                return Element(carrier_, field, std::move(out));
            },
            [&](const Matrix& mat) {
                const std::size_t n = mat.n;
                std::vector<Scalar> out(m);
                for (std::size_t j = 0; j < n; ++j) {
                    for (std::size_t l = 0; l < n; ++l) {
                        const Scalar a = f[j * n + l];
                        if (a == Scalar(0.0)) {
                            continue;
                        }
                        for (std::size_t k = 0; k < n; ++k) {
                            out[j * n + k] += a * g[l * n + k];
                        }
                    }
                }
                return Element(carrier_, field, std::move(out));
            },
            [&](const Jordan& jor) {
                const Element fg = (*jor.base)(f, g);
                const Element gf = (*jor.base)(g, f);
                return scale(0.5, add(fg, gf));
            },
            [&](const Convolution& conv) {
                const std::size_t n = conv.grid;
                const double weight = conv.kappa * carrier_.spacing();
                std::vector<Scalar> out(n);
                for (std::size_t i = 0; i < n; ++i) {
                    Scalar sum = 0.0;
                    for (std::size_t j = 0; j < n; ++j) {
                        sum += f[(i + n - j) % n] * g[j];
                    }
                    out[i] = weight * sum;
                }
                return Element(carrier_, field, std::move(out));
            },
            [&](const Tensor& ten) {
                std::vector<Scalar> out(m);
                for (std::size_t u = 0; u < m; ++u) {
                    Scalar sum = 0.0;
                    for (std::size_t s = 0; s < m; ++s) {
                        if (f[s] == Scalar(0.0)) {
                            continue;
                        }
                        Scalar inner = 0.0;
                        for (std::size_t v = 0; v < m; ++v) {
                            inner += ten.c.at(u, s, v) * g[v];
                        }
                        sum += f[s] * inner;
                    }
                    out[u] = sum;
                }
                return Element(carrier_, promote(field, ten.c.field()), std::move(out));
            },
            [&](const Dilation&) {
                // (a t)(b t) / t = (a b) t
                return Element(carrier_, field, {f[0] * g[0]});
            },
            [&](const Plane&) {
                const Scalar a = f[0], b = f[1], c = g[0], d = g[1];
                return Element(carrier_, field, {a * c - b * d, a * d + b * c});
            },
        },
        repr_);
}

Element multiply(const Product& product, const Element& f, const Element& g)
{
    return product(f, g);
}

Element power(const Product& product, const Element& f, unsigned k)
{
    return power(f, k, product);
}

Product jordanize(const Product& base)
{
    return Product::jordan(base);
}

StructureTensor structure_tensor(const Product& product, Field field)
{
    const std::size_t m = product.carrier().size();
    if (product.kind() == Product::Kind::convolution) {
        const double weight = product.kappa() * product.carrier().spacing();
        std::vector<Scalar> c(m * m * m);
        for (std::size_t s = 0; s < m; ++s) {
            for (std::size_t v = 0; v < m; ++v) {
                c[(((s + v) % m) * m + s) * m + v] = weight;
            }
        }
        return StructureTensor(m, field, std::move(c));
    }

    std::vector<Scalar> c(m * m * m);
    bool complex_coefficients = false;
    for (std::size_t s = 0; s < m; ++s) {
        const Element fs = Element::indicator(product.carrier(), s, field);
        for (std::size_t v = 0; v < m; ++v) {
            const Element gv = Element::indicator(product.carrier(), v, field);
            const Element prod = product(fs, gv);
            for (std::size_t u = 0; u < m; ++u) {
                c[(u * m + s) * m + v] = prod[u];
                complex_coefficients = complex_coefficients || prod[u].imag() != 0.0;
            }
        }
    }
    return StructureTensor(m, complex_coefficients ? Field::complex : field, std::move(c));
}

std::string to_string(Membership membership)
{
    switch (membership) {
    case Membership::full: return "full";
    case Membership::a2_real: return "A2";
    case Membership::dilation_line: return "dilation-line";
    }
    return "unknown";
}

namespace {

bool product_has_complex_coefficients(const Product& p)
{
    switch (p.kind()) {
    case Product::Kind::tensor: return has_complex_coefficients(p.tensor_coefficients());
    case Product::Kind::jordan: return product_has_complex_coefficients(p.base());
    default: return false;
    }
}

bool contains_dilation(const Product& p)
{
    if (p.kind() == Product::Kind::dilation) {
        return true;
    }
    return p.kind() == Product::Kind::jordan && contains_dilation(p.base());
}

} // namespace

AlgebraSpec::AlgebraSpec(Product product, Field field, Membership membership)
    : product_(std::move(product)), field_(field), membership_(membership)
{
    if (field_ == Field::real && product_has_complex_coefficients(product_)) {
        throw std::invalid_argument("algebra: a real algebra needs real structure constants");
    }
    const bool dilation = contains_dilation(product_);
    if (dilation != (membership_ == Membership::dilation_line)) {
        throw std::invalid_argument(
            "algebra: the dilation product and the dilation-line membership go together");
    }
    if (membership_ == Membership::a2_real &&
        (product_.kind() != Product::Kind::matrix || product_.matrix_dim() != 2 ||
         field_ != Field::real)) {
        throw std::invalid_argument("algebra: A2 membership needs matrix(2) over the reals");
    }
}

AlgebraSpec AlgebraSpec::a2_real()
{
    return AlgebraSpec(Product::matrix(2), Field::real, Membership::a2_real);
}

AlgebraSpec AlgebraSpec::dilation_line()
{
    return AlgebraSpec(Product::dilation(), Field::real, Membership::dilation_line);
}

bool AlgebraSpec::contains(const Element& f, double tol) const
{
    if (!(f.carrier() == carrier())) {
        return false;
    }
    if (field_ == Field::real && !f.is_real_valued()) {
        return false;
    }
    switch (membership_) {
    case Membership::full:
    case Membership::dilation_line: return true;
    case Membership::a2_real: return membership_A2(f, tol);
    }
    return false;
}

Element AlgebraSpec::sample_member(SampleStream& stream, bool nonnegative) const
{
    if (membership_ == Membership::a2_real) {
        const double a = stream.uniform(nonnegative ? 0.0 : -1.0, 1.0);
        // (a b; -b a) >= 0 forces b = 0.
        const double b = nonnegative ? 0.0 : stream.uniform(-1.0, 1.0);
        return Element::real(carrier(), {a, b, -b, a});
    }
    return sample_element(carrier(), field_, stream, nonnegative);
}

namespace {

void describe_product(std::ostream& os, const Product& p)
{
    os << to_string(p.kind());
    switch (p.kind()) {
    case Product::Kind::pointwise: os << '(' << p.carrier().size() << ')'; break;
    case Product::Kind::matrix: os << '(' << p.matrix_dim() << ')'; break;
    case Product::Kind::jordan:
        os << '(';
        describe_product(os, p.base());
        os << ')';
        break;
    case Product::Kind::convolution:
        os << "(kappa=" << p.kappa() << ", p=" << p.period() << ", grid=" << p.grid() << ')';
        break;
    case Product::Kind::tensor: os << '(' << p.carrier().size() << ')'; break;
    case Product::Kind::dilation:
    case Product::Kind::plane: break;
    }
}

} // namespace

std::string AlgebraSpec::describe() const
{
    std::ostringstream os;
    if (membership_ == Membership::a2_real) {
        os << "A2(R) inside ";
    }
    describe_product(os, product_);
    os << " over " << to_string(field_);
    return os.str();
}

StructureTensor structure_tensor(const AlgebraSpec& algebra)
{
    if (!algebra.is_full()) {
        throw std::invalid_argument("structure tensor: " + algebra.describe() +
                                    " is not the full function space over its carrier");
    }
    return structure_tensor(algebra.product(), algebra.field());
}

bool membership_A2(const Element& f, double tol)
{
    if (f.carrier().kind() != Carrier::Kind::matrix_grid || f.carrier().dim() != 2) {
        throw CarrierMismatch("membership_A2: expected a 2x2 matrix grid");
    }
    if (!f.is_real_valued()) {
        return false;
    }
    const double slack = tol * std::max(1.0, sup_norm(f));
    const double f11 = f[0].real(), f12 = f[1].real(), f21 = f[2].real(), f22 = f[3].real();
    return std::fabs(f11 - f22) <= slack && std::fabs(f12 + f21) <= slack;
}

} // namespace homotonic
