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

#include "homotonic/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace homotonic {

SquareMatrix::SquareMatrix(std::size_t n, std::vector<Scalar> entries)
    : n_(n), entries_(std::move(entries))
{
    if (n_ == 0) {
        throw std::invalid_argument("matrix: dimension must be at least 1");
    }
    if (entries_.size() != n_ * n_) {
        throw std::invalid_argument("matrix: expected n^2 = " + std::to_string(n_ * n_) +
                                    " entries, got " + std::to_string(entries_.size()));
    }
    for (const auto& x : entries_) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            throw std::invalid_argument("matrix: non-finite entry");
        }
    }
}

SquareMatrix SquareMatrix::identity(std::size_t n)
{
    std::vector<Scalar> e(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        e[j * n + j] = 1.0;
    }
    return SquareMatrix(n, std::move(e));
}

SquareMatrix SquareMatrix::zero(std::size_t n)
{
    return SquareMatrix(n, std::vector<Scalar>(n * n));
}

SquareMatrix SquareMatrix::from_element(const Element& f)
{
    if (f.carrier().kind() != Carrier::Kind::matrix_grid) {
        throw CarrierMismatch("matrix: element is not on a matrix grid");
    }
    return SquareMatrix(f.carrier().dim(), std::vector<Scalar>(f.values().begin(), f.values().end()));
}

Element SquareMatrix::to_element() const
{
    return Element(Carrier::matrix_grid(n_), Field::complex, entries_);
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b)
{
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matrix product: dimension mismatch");
    }
    const std::size_t n = a.dim();
    std::vector<Scalar> c(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
            for (std::size_t k = 0; k < n; ++k) {
                c[j * n + k] += a(j, l) * b(l, k);
            }
        }
    }
    return SquareMatrix(n, std::move(c));
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b)
{
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matrix sum: dimension mismatch");
    }
    std::vector<Scalar> c(a.entries().begin(), a.entries().end());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] += b.entries()[i];
    }
    return SquareMatrix(a.dim(), std::move(c));
}

SquareMatrix operator*(const Scalar& alpha, const SquareMatrix& a)
{
    std::vector<Scalar> c(a.entries().begin(), a.entries().end());
    for (auto& x : c) {
        x *= alpha;
    }
    return SquareMatrix(a.dim(), std::move(c));
}

SquareMatrix matrix_power(const SquareMatrix& a, unsigned k)
{
    SquareMatrix p = SquareMatrix::identity(a.dim());
    for (unsigned i = 0; i < k; ++i) {
        p = p * a;
    }
    return p;
}

double rotated_hermitian_max_eigenvalue(const SquareMatrix& a, double theta)
{
    const auto n = static_cast<Eigen::Index>(a.dim());
    const Scalar rot = std::polar(1.0, theta);
    Eigen::MatrixXcd h(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const auto uj = static_cast<std::size_t>(j), uk = static_cast<std::size_t>(k);
            h(j, k) = 0.5 * (rot * a(uj, uk) + std::conj(rot * a(uk, uj)));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

double numerical_radius(const SquareMatrix& a, const RadiusOptions& options)
{
    if (options.grid < 16) {
        throw std::invalid_argument("numerical_radius: angular grid needs at least 16 points");
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double step = two_pi / static_cast<double>(options.grid);

    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < options.grid; ++i) {
        const double value = rotated_hermitian_max_eigenvalue(a, step * static_cast<double>(i));
        if (value > best) {
            best = value;
            best_i = i;
        }
    }

    // Golden-section search on the bracket around the best grid angle.
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = step * (static_cast<double>(best_i) - 1.0);
    double hi = step * (static_cast<double>(best_i) + 1.0);
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = rotated_hermitian_max_eigenvalue(a, x1);
    double f2 = rotated_hermitian_max_eigenvalue(a, x2);
    for (std::size_t it = 0; it < options.refinements; ++it) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = rotated_hermitian_max_eigenvalue(a, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = rotated_hermitian_max_eigenvalue(a, x2);
        }
        best = std::max({best, f1, f2});
    }
    return std::max(best, 0.0);
}

double rayleigh_modulus(const SquareMatrix& a, std::span<const Scalar> x)
{
    const std::size_t n = a.dim();
    if (x.size() != n) {
        throw std::invalid_argument("rayleigh_modulus: vector length mismatch");
    }
    Scalar num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        Scalar ax = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            ax += a(j, k) * x[k];
        }
        num += ax * std::conj(x[j]);
        den += std::norm(x[j]);
    }
    if (den == 0.0) {
        throw std::invalid_argument("rayleigh_modulus: zero vector");
    }
    return std::abs(num) / den;
}

RadiusSubmultWitness radius_submult_witness(const RadiusOptions& options)
{
    SquareMatrix a(2, {0.0, 1.0, 0.0, 0.0});
    SquareMatrix b(2, {0.0, 0.0, 1.0, 0.0});
    const double ra = numerical_radius(a, options);
    const double rb = numerical_radius(b, options);
    const double rab = numerical_radius(a * b, options);
    return RadiusSubmultWitness{
        .a = std::move(a), .b = std::move(b), .radius_a = ra, .radius_b = rb, .radius_ab = rab};
}

BergerReport berger_check(const SquareMatrix& a, unsigned max_power, double tol, const RadiusOptions& options)
{
    if (max_power < 2) {
        throw std::invalid_argument("berger_check: max power must be at least 2");
    }
    BergerReport report;
    report.radius = numerical_radius(a, options);
    SquareMatrix p = a;
    for (unsigned k = 2; k <= max_power; ++k) {
        p = p * a;
        const double rk = numerical_radius(p, options);
        const double bound = std::pow(report.radius, static_cast<double>(k));
        const double ratio = bound > 0.0 ? rk / bound : 0.0;
        report.ratios.push_back(ratio);
        if (ratio > report.worst_ratio) {
            report.worst_ratio = ratio;
            report.worst_k = k;
        }
        if (rk > bound * (1.0 + tol)) {
            report.holds = false;
        }
    }
    return report;
}

SquareMatrix random_matrix(std::size_t n, SampleStream& stream)
{
    std::vector<Scalar> e(n * n);
    for (auto& x : e) {
        const double re = stream.uniform(-1.0, 1.0);
        const double im = stream.uniform(-1.0, 1.0);
        x = Scalar(re, im);
    }
    return SquareMatrix(n, std::move(e));
}

BergerSweepReport berger_sweep(std::size_t count, std::size_t max_dim, unsigned max_power,
                               std::uint64_t seed, double tol, const RadiusOptions& options)
{
    if (max_dim < 2) {
        throw std::invalid_argument("berger_sweep: max dimension must be at least 2");
    }
    BergerSweepReport sweep;
    sweep.matrices = count;
    sweep.max_power = max_power;
    sweep.seed = seed;
    for (std::size_t i = 0; i < count; ++i) {
        SampleStream stream(seed, i, 20);
        const std::size_t n = 2 + i % (max_dim - 1);
        const BergerReport r = berger_check(random_matrix(n, stream), max_power, tol, options);
        if (!r.holds) {
            ++sweep.violations;
        }
        if (r.worst_ratio > sweep.worst_ratio) {
            sweep.worst_ratio = r.worst_ratio;
            sweep.worst_matrix = i;
        }
    }
    return sweep;
}

} // namespace homotonic
