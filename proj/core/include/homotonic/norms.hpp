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

#ifndef HOMOTONIC_NORMS_HPP
#define HOMOTONIC_NORMS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homotonic/core.hpp"
#include "homotonic/products.hpp"
#include "homotonic/sampling.hpp"

namespace homotonic {

/// A strictly positive weight w on a carrier.
///
/// The dilation form stores nu for w(t) = nu / t on (0, inf). Paired with
/// the coefficient representation of f(t) = a t this makes w(t)|f(t)| = nu |a|
/// for every t, so the one-point carrier holding nu is exact.
class Weight {
public:
    Weight(Carrier carrier, std::vector<double> values);

    static Weight uniform(Carrier carrier, double mu);
    static Weight dilation(double nu);
    /// Weight from a real, strictly positive element.
    static Weight from_element(const Element& f);

    const Carrier& carrier() const noexcept { return carrier_; }
    std::span<const double> values() const noexcept { return values_; }
    bool is_dilation() const noexcept { return dilation_; }

    Weight scaled(double mu) const;

    bool operator==(const Weight&) const = default;

private:
    Carrier carrier_;
    std::vector<double> values_;
    bool dilation_ = false;
};

/// sup_t w(t) |f(t)|
double weighted_sup_norm(const Weight& w, const Element& f);

/// w_{-1}(t) = 1 / w(t), as an element of the given field.
Element hadamard_inverse(const Weight& w, Field field = Field::real);

/// The homotonicity hypothesis failed and the caller did not force.
class PreconditionRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CertifyOptions {
    double tol = default_tolerance;
    /// Run the criterion on a non-homotonic algebra anyway; the result is
    /// then marked criterion_only.
    bool force = false;
};

/// The pair (w_{-1}, w_{-1}) with its norms; attached to refuted certificates.
struct CertificateWitness {
    Element f;
    Element g;
    double norm_f = 0.0;
    double norm_g = 0.0;
    double norm_product = 0.0; ///< |f x g|_{w,inf} > 1 when refuted
};

struct Certificate {
    enum class Verdict { certified, refuted };

    Verdict verdict = Verdict::refuted;
    /// max_t ((w_{-1} x w_{-1})(t) - w_{-1}(t)); negative means slack.
    /// For the dilation form this is the coefficient difference 1/nu^2 - 1/nu.
    double margin = 0.0;
    std::size_t worst_index = 0;
    double slack = 0.0; ///< certified iff margin <= slack
    double norm_inverse = 1.0;         ///< |w_{-1}|_{w,inf}
    double norm_inverse_squared = 0.0; ///< |w_{-1} x w_{-1}|_{w,inf}
    bool criterion_only = false; ///< forced on a non-homotonic algebra
    std::string note;
    std::optional<CertificateWitness> witness;

    bool certified() const noexcept { return verdict == Verdict::certified; }
};

std::string to_string(Certificate::Verdict verdict);

/// Decides sub-multiplicativity and strong stability of |.|_{w,inf} on a
/// homotonic algebra through the single inequality w_{-1} x w_{-1} <= w_{-1}.
/// Throws PreconditionRefused for non-homotonic algebras unless forced, and
/// CarrierMismatch when w is not on the algebra's carrier.
Certificate certify(const AlgebraSpec& algebra, const Weight& w, const CertifyOptions& options = {});

struct LambdaEstimate {
    double value = 0.0; ///< max |f x g|_{w,inf} over unit-norm pairs tried
    Element f;
    Element g;
    bool from_candidate = true; ///< the maximizer is (w_{-1}, w_{-1})
    std::size_t sample_index = 0;
    std::size_t samples = 0;
};

/// Sampled lower estimate of sup { |f x g| : |f| = |g| = 1 } in the w-norm.
/// Always includes the deterministic pair (w_{-1}, w_{-1}).
LambdaEstimate sample_lambda(const AlgebraSpec& algebra, const Weight& w, const SamplingConfig& config);

struct StabilityViolation {
    Element f;
    unsigned k = 0;
    double ratio = 0.0; ///< |f^k| / |f|^k
    std::size_t sample_index = 0;
    bool from_candidate = false;
};

struct StabilityReport {
    bool stable = true;
    double worst_ratio = 0.0;
    unsigned worst_k = 0;
    std::optional<StabilityViolation> violation; ///< first violator, candidate first
    std::size_t samples = 0;
    unsigned max_power = 0;
};

/// Tests |f^k|_{w,inf} <= |f|_{w,inf}^k (1 + tol) for k = 2..max_power on the
/// candidate f = w_{-1} followed by random members.
StabilityReport check_strong_stability(const AlgebraSpec& algebra, const Weight& w,
                                       const SamplingConfig& config, unsigned max_power);

/// Smallest mu with w = mu w0 certified:
///   mu* = max_t (w0_{-1} x w0_{-1})(t) / w0_{-1}(t).
/// Returns 0 when w0_{-1} x w0_{-1} vanishes (every scale certifies).
/// Throws PreconditionRefused on non-homotonic algebras.
double threshold_scale(const AlgebraSpec& algebra, const Weight& w0, double tol = default_tolerance);

struct ConvolutionCriterion {
    bool certified = false;
    double margin = 0.0; ///< max_i (lhs_i - 1 / w(t_i))
    std::size_t worst_index = 0;
    double slack = 0.0;
};

/// kappa h sum_j 1 / (w(t_{i-j}) w(t_j)) <= 1 / w(t_i) for every node i,
/// evaluated directly from the weight values.
ConvolutionCriterion convolution_weight_criterion(const Weight& w, double kappa, double period,
                                                  double tol = default_tolerance);

} // namespace homotonic

#endif // HOMOTONIC_NORMS_HPP
