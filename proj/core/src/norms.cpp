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

#include "homotonic/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "homotonic/homotonicity.hpp"

namespace homotonic {

namespace {

constexpr std::uint32_t slot_lambda_f = 10;
constexpr std::uint32_t slot_lambda_g = 11;
constexpr std::uint32_t slot_stability = 12;

void require_positive(double x, const char* what)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::invalid_argument(std::string(what) + " must be positive and finite");
    }
}

void require_weight_fits(const AlgebraSpec& algebra, const Weight& w)
{
    if (!(w.carrier() == algebra.carrier())) {
        throw CarrierMismatch("weight has " + std::to_string(w.carrier().size()) +
                              " values but the algebra's carrier has " +
                              std::to_string(algebra.carrier().size()) + " points");
    }
    const bool dilation_algebra = algebra.membership() == Membership::dilation_line;
    if (w.is_dilation() != dilation_algebra) {
        throw CarrierMismatch(dilation_algebra
                                  ? "the dilation algebra needs a weight of the form nu / t"
                                  : "a nu / t weight only applies to the dilation algebra");
    }
}

// Member drawn until it has nonzero w-norm, then scaled to w-norm 1.
Element unit_member(const AlgebraSpec& algebra, const Weight& w, SampleStream& stream)
{
    for (;;) {
        const Element f = algebra.sample_member(stream);
        const double n = weighted_sup_norm(w, f);
        if (n > 0.0) {
            return scale(1.0 / n, f);
        }
    }
}

} // namespace

Weight::Weight(Carrier carrier, std::vector<double> values)
    : carrier_(carrier), values_(std::move(values))
{
    if (values_.size() != carrier_.size()) {
        throw CarrierMismatch("weight: expected " + std::to_string(carrier_.size()) +
                              " values, got " + std::to_string(values_.size()));
    }
    for (double v : values_) {
        require_positive(v, "weight value");
    }
}

Weight Weight::uniform(Carrier carrier, double mu)
{
    require_positive(mu, "uniform weight");
    return Weight(carrier, std::vector<double>(carrier.size(), mu));
}

Weight Weight::dilation(double nu)
{
    require_positive(nu, "dilation weight nu");
    Weight w(Carrier::plain(1), {nu});
    w.dilation_ = true;
    return w;
}

Weight Weight::from_element(const Element& f)
{
    return Weight(f.carrier(), f.real_values());
}

Weight Weight::scaled(double mu) const
{
    require_positive(mu, "weight scale");
    Weight w = *this;
    for (double& v : w.values_) {
        v *= mu;
    }
    return w;
}

double weighted_sup_norm(const Weight& w, const Element& f)
{
    if (!(w.carrier() == f.carrier())) {
        throw CarrierMismatch("weighted_sup_norm: weight and element live on different carriers");
    }
    double m = 0.0;
    for (std::size_t t = 0; t < f.size(); ++t) {
        m = std::max(m, w.values()[t] * modulus(f[t]));
    }
    return m;
}

Element hadamard_inverse(const Weight& w, Field field)
{
    std::vector<Scalar> v(w.values().size());
    std::transform(w.values().begin(), w.values().end(), v.begin(),
                   [](double x) { return Scalar(1.0 / x); });
    return Element(w.carrier(), field, std::move(v));
}

std::string to_string(Certificate::Verdict verdict)
{
    return verdict == Certificate::Verdict::certified ? "certified" : "refuted";
}

Certificate certify(const AlgebraSpec& algebra, const Weight& w, const CertifyOptions& options)
{
    require_weight_fits(algebra, w);

    Certificate cert;
    const HomotonicityDecision decision = decide_homotonicity(algebra, options.tol);
    if (!decision.homotonic) {
        if (!options.force) {
            throw PreconditionRefused("certify: " + algebra.describe() +
                                      " is not homotonic (" + decision.reason +
                                      "); the criterion does not characterize its norms");
        }
        cert.criterion_only = true;
        cert.note = "criterion only, equivalence not guaranteed: " + decision.reason;
    } else if (w.is_dilation()) {
        cert.note = "dilation form: margin compares coefficients of t";
    }

    const Element inv = hadamard_inverse(w, algebra.field());
    const Element sq = algebra.multiply(inv, inv);
    if (!sq.is_real_valued()) {
        throw std::domain_error("certify: w_{-1} x w_{-1} is not real-valued; the order criterion is undefined");
    }

    const OrderCheck check = leq(sq, inv, options.tol);
    cert.margin = check.worst_difference;
    cert.worst_index = check.worst_index;
    cert.slack = check.slack;
    cert.verdict = check.holds ? Certificate::Verdict::certified : Certificate::Verdict::refuted;
    cert.norm_inverse = weighted_sup_norm(w, inv);
    cert.norm_inverse_squared = weighted_sup_norm(w, sq);

    if (!cert.certified()) {
        cert.witness = CertificateWitness{
            .f = inv,
            .g = inv,
            .norm_f = cert.norm_inverse,
            .norm_g = cert.norm_inverse,
            .norm_product = cert.norm_inverse_squared,
        };
    }
    return cert;
}

LambdaEstimate sample_lambda(const AlgebraSpec& algebra, const Weight& w, const SamplingConfig& config)
{
    require_weight_fits(algebra, w);
    const Element inv = hadamard_inverse(w, algebra.field());
    LambdaEstimate best{
        .value = weighted_sup_norm(w, algebra.multiply(inv, inv)),
        .f = inv,
        .g = inv,
        .from_candidate = true,
        .sample_index = 0,
        .samples = config.samples,
    };
    for (std::size_t i = 0; i < config.samples; ++i) {
        SampleStream fs(config.seed, i, slot_lambda_f);
        SampleStream gs(config.seed, i, slot_lambda_g);
        Element f = unit_member(algebra, w, fs);
        Element g = unit_member(algebra, w, gs);
        const double value = weighted_sup_norm(w, algebra.multiply(f, g));
        if (value > best.value) {
            best.value = value;
            best.f = std::move(f);
            best.g = std::move(g);
            best.from_candidate = false;
            best.sample_index = i;
        }
    }
    return best;
}

StabilityReport check_strong_stability(const AlgebraSpec& algebra, const Weight& w,
                                       const SamplingConfig& config, unsigned max_power)
{
    if (max_power < 2) {
        throw std::invalid_argument("check_strong_stability: max power must be at least 2");
    }
    require_weight_fits(algebra, w);

    StabilityReport report;
    report.samples = config.samples;
    report.max_power = max_power;

    // f has unit w-norm, so the ratio |f^k| / |f|^k is just |f^k|.
    auto probe = [&](const Element& f, std::size_t index, bool candidate) {
        Element p = f;
        for (unsigned k = 2; k <= max_power; ++k) {
            p = algebra.multiply(p, f);
            const double ratio = weighted_sup_norm(w, p);
            if (ratio > report.worst_ratio) {
                report.worst_ratio = ratio;
                report.worst_k = k;
            }
            if (ratio > 1.0 + config.tol && !report.violation) {
                report.stable = false;
                report.violation = StabilityViolation{
                    .f = f, .k = k, .ratio = ratio, .sample_index = index, .from_candidate = candidate};
            }
        }
    };

    probe(hadamard_inverse(w, algebra.field()), 0, true);
    for (std::size_t i = 0; i < config.samples; ++i) {
        SampleStream stream(config.seed, i, slot_stability);
        probe(unit_member(algebra, w, stream), i, false);
    }
    return report;
}

double threshold_scale(const AlgebraSpec& algebra, const Weight& w0, double tol)
{
    require_weight_fits(algebra, w0);
    const HomotonicityDecision decision = decide_homotonicity(algebra, tol);
    if (!decision.homotonic) {
        throw PreconditionRefused("threshold_scale: " + algebra.describe() + " is not homotonic (" +
                                  decision.reason + ")");
    }
    const Element inv = hadamard_inverse(w0, algebra.field());
    const auto sq = algebra.multiply(inv, inv).real_values();
    double mu = 0.0;
    for (std::size_t t = 0; t < sq.size(); ++t) {
        mu = std::max(mu, sq[t] / inv[t].real());
    }
    return mu;
}

ConvolutionCriterion convolution_weight_criterion(const Weight& w, double kappa, double period, double tol)
{
    require_positive(kappa, "kappa");
    require_positive(period, "period");
    const Carrier& c = w.carrier();
    if (c.kind() != Carrier::Kind::periodic_grid ||
        std::fabs(c.period() - period) > 1e-12 * period) {
        throw CarrierMismatch("convolution_weight_criterion: weight is not on a periodic grid of period " +
                              std::to_string(period));
    }
    const std::size_t n = c.size();
    const auto wv = w.values();
    const double h = period / static_cast<double>(n);

    ConvolutionCriterion result;
    result.margin = -std::numeric_limits<double>::infinity();
    double scale_ref = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            sum += 1.0 / (wv[(i + n - j) % n] * wv[j]);
        }
        const double lhs = kappa * h * sum;
        const double rhs = 1.0 / wv[i];
        scale_ref = std::max({scale_ref, lhs, rhs});
        if (lhs - rhs > result.margin) {
            result.margin = lhs - rhs;
            result.worst_index = i;
        }
    }
    result.slack = tol * scale_ref;
    result.certified = result.margin <= result.slack;
    return result;
}

} // namespace homotonic
