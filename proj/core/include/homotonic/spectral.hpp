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

#ifndef HOMOTONIC_SPECTRAL_HPP
#define HOMOTONIC_SPECTRAL_HPP

#include <cstdint>
#include <vector>

#include "homotonic/core.hpp"
#include "homotonic/sampling.hpp"

namespace homotonic {

/// Dense complex n x n matrix, row-major.
class SquareMatrix {
public:
    SquareMatrix(std::size_t n, std::vector<Scalar> entries);

    static SquareMatrix identity(std::size_t n);
    static SquareMatrix zero(std::size_t n);
    /// Reads an element on a matrix grid.
    static SquareMatrix from_element(const Element& f);

    std::size_t dim() const noexcept { return n_; }
    std::span<const Scalar> entries() const noexcept { return entries_; }
    const Scalar& operator()(std::size_t j, std::size_t k) const { return entries_[j * n_ + k]; }

    Element to_element() const;

    bool operator==(const SquareMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<Scalar> entries_;
};

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator*(const Scalar& alpha, const SquareMatrix& a);

/// A^k for k >= 0 (A^0 = I).
SquareMatrix matrix_power(const SquareMatrix& a, unsigned k);

/// Largest eigenvalue of the Hermitian part (e^{i theta} A + e^{-i theta} A*) / 2.
double rotated_hermitian_max_eigenvalue(const SquareMatrix& a, double theta);

struct RadiusOptions {
    std::size_t grid = 256;       ///< angles on [0, 2 pi); at least 16
    std::size_t refinements = 40; ///< golden-section steps around the best angle
};

/// r(A) = max { |(Ax, x)| : |x| = 1 } for the Euclidean inner product,
/// computed as max over theta of the top eigenvalue of the rotated
/// Hermitian part.
double numerical_radius(const SquareMatrix& a, const RadiusOptions& options = {});

/// |(Ax, x)| for a given (not necessarily unit) vector x, divided by (x, x).
double rayleigh_modulus(const SquareMatrix& a, std::span<const Scalar> x);

struct RadiusSubmultWitness {
    SquareMatrix a;
    SquareMatrix b;
    double radius_a = 0.0;
    double radius_b = 0.0;
    double radius_ab = 0.0;
};

/// A = E12, B = E21 in C^{2x2}: r(A) = r(B) = 1/2 while r(AB) = 1.
RadiusSubmultWitness radius_submult_witness(const RadiusOptions& options = {});

struct BergerReport {
    bool holds = true;
    double radius = 0.0;
    std::vector<double> ratios; ///< r(A^k) / r(A)^k for k = 2..K (0 when r(A) = 0)
    double worst_ratio = 0.0;
    unsigned worst_k = 0;
};

/// Checks r(A^k) <= r(A)^k (1 + tol) for k = 2..max_power.
BergerReport berger_check(const SquareMatrix& a, unsigned max_power, double tol = 1e-8,
                          const RadiusOptions& options = {});

/// Entries with real and imaginary parts uniform on [-1, 1].
SquareMatrix random_matrix(std::size_t n, SampleStream& stream);

struct BergerSweepReport {
    std::size_t matrices = 0;
    std::size_t violations = 0;
    double worst_ratio = 0.0;
    std::size_t worst_matrix = 0;
    unsigned max_power = 0;
    std::uint64_t seed = 0;
};

/// berger_check over `count` seeded random matrices whose dimensions cycle
/// through 2..max_dim.
BergerSweepReport berger_sweep(std::size_t count, std::size_t max_dim, unsigned max_power,
                               std::uint64_t seed, double tol = 1e-8, const RadiusOptions& options = {});

} // namespace homotonic

#endif // HOMOTONIC_SPECTRAL_HPP
