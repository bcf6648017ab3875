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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "homotonic/homotonic.hpp"

using namespace homotonic;

namespace {

SamplingConfig cfg(std::size_t samples = 1000, std::uint64_t seed = 1)
{
    return SamplingConfig{.samples = samples, .seed = seed, .tol = 1e-9};
}

Weight random_weight(const Carrier& c, std::uint64_t seed)
{
    std::vector<double> w(c.size());
    SampleStream s(seed, 0, 40);
    for (auto& x : w) {
        x = s.uniform(0.2, 3.0);
    }
    return Weight(c, std::move(w));
}

} // namespace

TEST(Weight, Construction)
{
    EXPECT_THROW(Weight(Carrier::plain(2), {1.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(Weight(Carrier::plain(2), {1.0}), std::invalid_argument);
    EXPECT_THROW(Weight::uniform(Carrier::plain(2), -1.0), std::invalid_argument);
    EXPECT_THROW(Weight::dilation(0.0), std::invalid_argument);
    EXPECT_TRUE(Weight::dilation(2.0).is_dilation());
    EXPECT_EQ(Weight::uniform(Carrier::plain(3), 2.0).scaled(1.5), Weight::uniform(Carrier::plain(3), 3.0));
}

TEST(WeightedSupNorm, Examples)
{
    EXPECT_DOUBLE_EQ(weighted_sup_norm(Weight(Carrier::plain(2), {1, 1}), Element::real(Carrier::plain(2), {1, -3})),
                     3.0);
    const Carrier m = Carrier::matrix_grid(2);
    EXPECT_DOUBLE_EQ(weighted_sup_norm(Weight::uniform(m, 2.0), Element::real(m, {1, 0, 0, 1})), 2.0);
    EXPECT_THROW(weighted_sup_norm(Weight::uniform(m, 1.0), Element::zero(Carrier::plain(4))), CarrierMismatch);
}

TEST(WeightedSupNorm, NormAxioms)
{
    const Carrier c = Carrier::plain(6);
    const Weight w = random_weight(c, 3);
    const double eps = std::numeric_limits<double>::epsilon();
    for (std::uint64_t i = 0; i < 300; ++i) {
        SampleStream s(5, i, 0);
        const Element f = sample_element(c, Field::complex, s);
        const Element g = sample_element(c, Field::complex, s);
        const Scalar alpha(s.uniform(-4, 4), s.uniform(-4, 4));
        const double nf = weighted_sup_norm(w, f), ng = weighted_sup_norm(w, g);
        EXPECT_GT(nf, 0.0);
        EXPECT_NEAR(weighted_sup_norm(w, scale(alpha, f)), std::abs(alpha) * nf, 4 * eps * std::abs(alpha) * nf);
        EXPECT_LE(weighted_sup_norm(w, f + g), (nf + ng) * (1 + 4 * eps));
    }
    EXPECT_EQ(weighted_sup_norm(w, Element::zero(c)), 0.0);
}

TEST(HadamardInverse, Examples)
{
    EXPECT_EQ(hadamard_inverse(Weight(Carrier::plain(2), {2, 4})), Element::real(Carrier::plain(2), {0.5, 0.25}));
    const Carrier m = Carrier::matrix_grid(3);
    EXPECT_EQ(hadamard_inverse(Weight::uniform(m, 4.0)), Element::constant(m, 0.25));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Weight w = random_weight(Carrier::plain(5), seed);
        EXPECT_EQ(weighted_sup_norm(w, hadamard_inverse(w)), 1.0);
    }
}

TEST(Certify, MatrixExamples)
{
    const AlgebraSpec m3(Product::matrix(3));
    const Certificate ok = certify(m3, Weight::uniform(m3.carrier(), 3.0));
    EXPECT_TRUE(ok.certified());
    EXPECT_LE(std::fabs(ok.margin), 1e-12);
    EXPECT_FALSE(ok.witness);

    const Certificate bad = certify(m3, Weight::uniform(m3.carrier(), 2.0));
    EXPECT_FALSE(bad.certified());
    EXPECT_NEAR(bad.margin, 0.25, 1e-15);
    ASSERT_TRUE(bad.witness);
    EXPECT_NEAR(bad.witness->norm_product, 1.5, 1e-15);
    EXPECT_EQ(bad.witness->norm_f, 1.0);
    EXPECT_NEAR(bad.norm_inverse_squared, 1.5, 1e-15);
}

TEST(Certify, ConvolutionExamples)
{
    for (std::size_t n : {1u, 8u, 128u}) {
        const AlgebraSpec ok(Product::convolution(1.0, 1.0, n));
        const Certificate c = certify(ok, Weight::uniform(ok.carrier(), 1.0));
        EXPECT_TRUE(c.certified());
        EXPECT_LE(std::fabs(c.margin), 1e-12);
    }
    const AlgebraSpec high(Product::convolution(1.01, 1.0, 64));
    const Certificate c = certify(high, Weight::uniform(high.carrier(), 1.0));
    EXPECT_FALSE(c.certified());
    EXPECT_NEAR(c.margin, 0.01, 1e-12);

    const AlgebraSpec two(Product::convolution(1.0, 1.0, 32));
    const Certificate w2 = certify(two, Weight::uniform(two.carrier(), 2.0));
    EXPECT_TRUE(w2.certified());
    EXPECT_NEAR(w2.margin, 0.25 - 0.5, 1e-12);
}

TEST(Certify, Dilation)
{
    const AlgebraSpec d = AlgebraSpec::dilation_line();
    EXPECT_TRUE(certify(d, Weight::dilation(1.0)).certified());
    EXPECT_EQ(certify(d, Weight::dilation(1.0)).margin, 0.0);
    const Certificate bad = certify(d, Weight::dilation(0.99));
    EXPECT_FALSE(bad.certified());
    EXPECT_NEAR(bad.margin, 1 / (0.99 * 0.99) - 1 / 0.99, 1e-15);
    EXPECT_THROW(certify(d, Weight::uniform(Carrier::plain(1), 1.0)), std::invalid_argument);
    EXPECT_THROW(certify(AlgebraSpec(Product::pointwise(1)), Weight::dilation(1.0)), std::invalid_argument);
}

TEST(Certify, Preconditions)
{
    const AlgebraSpec plane(Product::plane());
    const Weight w = Weight::uniform(plane.carrier(), 1.0);
    EXPECT_THROW(certify(plane, w), PreconditionRefused);
    const Certificate forced = certify(plane, w, CertifyOptions{.tol = 1e-9, .force = true});
    EXPECT_TRUE(forced.criterion_only);
    EXPECT_FALSE(forced.note.empty());
    EXPECT_THROW(certify(AlgebraSpec(Product::matrix(2)), Weight::uniform(Carrier::plain(4), 1.0)), CarrierMismatch);
}

TEST(SampleLambda, Examples)
{
    const AlgebraSpec m3(Product::matrix(3));
    EXPECT_LE(sample_lambda(m3, Weight::uniform(m3.carrier(), 3.0), cfg()).value, 1.0 + 1e-9);
    const LambdaEstimate bad = sample_lambda(m3, Weight::uniform(m3.carrier(), 2.0), cfg(10));
    EXPECT_GE(bad.value, 1.5 - 1e-15);
    EXPECT_TRUE(bad.from_candidate);

    const AlgebraSpec pw(Product::pointwise(4));
    const LambdaEstimate l = sample_lambda(pw, Weight::uniform(pw.carrier(), 1.0), cfg());
    EXPECT_LE(l.value, 1.0 + 1e-9);
    EXPECT_GE(l.value, 1.0 - 1e-12);
}

TEST(StrongStability, Examples)
{
    const AlgebraSpec m3(Product::matrix(3));
    const StabilityReport ok = check_strong_stability(m3, Weight::uniform(m3.carrier(), 3.0), cfg(), 5);
    EXPECT_TRUE(ok.stable);

    const StabilityReport bad = check_strong_stability(m3, Weight::uniform(m3.carrier(), 2.0), cfg(), 5);
    EXPECT_FALSE(bad.stable);
    ASSERT_TRUE(bad.violation);
    EXPECT_EQ(bad.violation->k, 2u);
    EXPECT_TRUE(bad.violation->from_candidate);
    EXPECT_NEAR(bad.violation->ratio, 1.5, 1e-15);
    EXPECT_EQ(bad.violation->f, hadamard_inverse(Weight::uniform(m3.carrier(), 2.0)));

    const StabilityReport dil = check_strong_stability(AlgebraSpec::dilation_line(), Weight::dilation(1.0), cfg(), 6);
    EXPECT_TRUE(dil.stable);
    EXPECT_LE(dil.worst_ratio, 1.0 + 1e-15);

    EXPECT_THROW(check_strong_stability(m3, Weight::uniform(m3.carrier(), 3.0), cfg(), 1), std::invalid_argument);
}

TEST(Threshold, ClosedForms)
{
    for (std::size_t n = 2; n <= 8; ++n) {
        const AlgebraSpec alg(Product::matrix(n));
        EXPECT_NEAR(threshold_scale(alg, Weight::uniform(alg.carrier(), 1.0)), static_cast<double>(n), 1e-12);
    }
    const AlgebraSpec conv(Product::convolution(2.0, 0.5, 128));
    EXPECT_NEAR(threshold_scale(conv, Weight::uniform(conv.carrier(), 1.0)), 1.0, 1e-12);
    const AlgebraSpec conv2(Product::convolution(3.0, 0.25, 50));
    EXPECT_NEAR(threshold_scale(conv2, Weight::uniform(conv2.carrier(), 1.0)), 0.75, 1e-12);
    EXPECT_EQ(threshold_scale(AlgebraSpec::dilation_line(), Weight::dilation(1.0)), 1.0);
    EXPECT_THROW(threshold_scale(AlgebraSpec(Product::plane()), Weight::uniform(Carrier::plain(2), 1.0)),
                 PreconditionRefused);
}

TEST(Threshold, BracketsTheCertificate)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::vector<Scalar> c(27);
        for (std::size_t i = 0; i < c.size(); ++i) {
            SampleStream s(seed, i, 41);
            c[i] = s.uniform(0.0, 1.0);
        }
        const AlgebraSpec alg(Product::tensor(StructureTensor(3, Field::real, c)));
        const Weight w0 = random_weight(alg.carrier(), seed);
        const double mu = threshold_scale(alg, w0);
        EXPECT_TRUE(certify(alg, w0.scaled(mu * (1 + 1e-3))).certified());
        EXPECT_FALSE(certify(alg, w0.scaled(mu * (1 - 1e-3))).certified());
        EXPECT_LE(certify(alg, w0.scaled(mu)).margin, 1e-9);
    }
}

TEST(Threshold, ZeroSquareGivesZero)
{
    const AlgebraSpec nil(Product::tensor(StructureTensor(2, Field::real, std::vector<Scalar>(8))));
    EXPECT_EQ(threshold_scale(nil, Weight::uniform(nil.carrier(), 1.0)), 0.0);
}

TEST(ConvolutionCriterion, AgreesWithCertify)
{
    for (double kappa : {0.5, 0.9, 1.0, 1.1, 2.0}) {
        const std::size_t n = 64;
        const AlgebraSpec alg(Product::convolution(kappa, 1.0, n));
        std::vector<double> w(n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = 1.0 + 0.5 * std::cos(2 * 3.14159265358979 * static_cast<double>(i) / n);
        }
        for (const Weight& weight : {Weight::uniform(alg.carrier(), 1.0), Weight(alg.carrier(), w)}) {
            const ConvolutionCriterion direct = convolution_weight_criterion(weight, kappa, 1.0);
            const Certificate cert = certify(alg, weight);
            EXPECT_EQ(direct.certified, cert.certified());
            EXPECT_NEAR(direct.margin, cert.margin, 1e-12);
        }
    }
    const AlgebraSpec one(Product::convolution(1.0, 1.0, 16));
    EXPECT_EQ(convolution_weight_criterion(Weight::uniform(one.carrier(), 1.0), 1.0, 1.0).margin, 0.0);
}

TEST(CertificateBehaviour, SamplersAgreeOnRandomTensorAlgebras)
{
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        const std::size_t m = 2 + seed % 5;
        std::vector<Scalar> c(m * m * m);
        for (std::size_t i = 0; i < c.size(); ++i) {
            SampleStream s(seed, i, 42);
            c[i] = s.uniform(0.0, 1.0);
        }
        const AlgebraSpec alg(Product::tensor(StructureTensor(m, Field::real, c)));
        const Weight w = random_weight(alg.carrier(), seed);
        const Certificate cert = certify(alg, w);
        const LambdaEstimate lambda = sample_lambda(alg, w, cfg(300, seed));
        const StabilityReport stab = check_strong_stability(alg, w, cfg(100, seed), 4);
        if (cert.certified()) {
            EXPECT_LE(lambda.value, 1.0 + 1e-9);
            EXPECT_TRUE(stab.stable);
        } else {
            EXPECT_GT(lambda.value, 1.0 + 1e-9);
            ASSERT_TRUE(stab.violation);
            EXPECT_EQ(stab.violation->k, 2u);
            EXPECT_TRUE(stab.violation->from_candidate);
        }
    }
}
