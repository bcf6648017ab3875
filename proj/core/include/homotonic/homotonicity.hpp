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

#ifndef HOMOTONIC_HOMOTONICITY_HPP
#define HOMOTONIC_HOMOTONICITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homotonic/core.hpp"
#include "homotonic/products.hpp"
#include "homotonic/sampling.hpp"

namespace homotonic {

/// The homotonicity conditions that can be checked:
///   abs_closed  (i)    f in A implies |f| in A
///   ii          (ii)   |f x g| <= |f| x |g|
///   ii_real     (ii)R  f, g >= 0 implies f x g >= 0      (real algebras)
///   ii_prime    (ii)'  |f1| <= g1, |f2| <= g2 implies |f1 x f2| <= g1 x g2
enum class Condition { abs_closed, ii, ii_real, ii_prime };

enum class Verdict { holds_exact, holds_sampled, fails };

std::string to_string(Condition condition);
std::string to_string(Verdict verdict);

/// Elements violating a condition, in the order the condition names them:
/// (f) for (i), (f, g) for (ii) and (ii)R, (f1, f2, g1, g2) for (ii)'.
struct Witness {
    std::vector<Element> elements;
    std::size_t index = 0;        ///< carrier index of the worst violation
    double magnitude = 0.0;       ///< size of the violation at that index
    std::size_t sample_index = 0; ///< position among candidates or random samples
    bool from_candidate = false;  ///< deterministic indicator candidate vs random draw
};

struct CheckReport {
    Condition condition = Condition::ii;
    Verdict verdict = Verdict::holds_sampled;
    std::optional<Witness> witness;
    std::size_t samples = 0;    ///< random draws evaluated
    std::size_t candidates = 0; ///< deterministic candidates evaluated
    std::uint64_t seed = 0;
    double tol = default_tolerance;
    std::string method; ///< "closed-form", "structure-tensor", "sampled"

    bool holds() const noexcept { return verdict != Verdict::fails; }
};

/// Full algebras with at most this many carrier points also get every
/// indicator pair as a deterministic candidate in the (ii) and (ii)' samplers.
inline constexpr std::size_t indicator_candidate_limit = 64;

/// Single-instance evaluators. Each returns the comparison whose failure is
/// the violation; they are what witnesses are re-checked against.
OrderCheck evaluate_abs_closed(const AlgebraSpec& algebra, const Element& f, double tol = default_tolerance);
OrderCheck evaluate_ii(const AlgebraSpec& algebra, const Element& f, const Element& g,
                       double tol = default_tolerance);
OrderCheck evaluate_ii_real(const AlgebraSpec& algebra, const Element& f, const Element& g,
                            double tol = default_tolerance);
/// Throws std::invalid_argument when the premise |f1| <= g1, |f2| <= g2 fails.
OrderCheck evaluate_ii_prime(const AlgebraSpec& algebra, const Element& f1, const Element& f2,
                             const Element& g1, const Element& g2, double tol = default_tolerance);

/// Recomputes the violation carried by a failing report from scratch.
OrderCheck reevaluate_witness(const AlgebraSpec& algebra, const CheckReport& report);

CheckReport check_abs_closed(const AlgebraSpec& algebra, const SamplingConfig& config);
CheckReport check_ii(const AlgebraSpec& algebra, const SamplingConfig& config);

/// Exact for full algebras (indicator pairs, i.e. the structure constants)
/// and for the dilation line; sampled on nonnegative members otherwise.
/// Throws std::domain_error for complex algebras.
CheckReport check_ii_real(const AlgebraSpec& algebra, const SamplingConfig& config);

enum class Padding { random, zero };

/// Draws f1, f2 exactly as check_ii draws f, g for the same seed and sets
/// g_i = |f_i| + r_i with r_i >= 0 random, or r_i = 0 under Padding::zero.
CheckReport check_ii_prime(const AlgebraSpec& algebra, const SamplingConfig& config,
                           Padding padding = Padding::random);

struct EquivalenceReport {
    CheckReport abs_closed;
    CheckReport ii;
    std::optional<CheckReport> ii_real; ///< absent for complex algebras
    CheckReport ii_prime;

    bool via_ii = false;       ///< (i) and (ii)
    bool via_ii_real = false;  ///< (i) and (ii)R; equals via_ii when absent
    bool via_ii_prime = false; ///< (i) and (ii)'
    bool consistent = false;   ///< all three routes agree

    bool homotonic() const noexcept { return consistent && via_ii; }
};

/// Runs every checker and cross-checks the three characterizations.
EquivalenceReport theorem_equivalence_suite(const AlgebraSpec& algebra, const SamplingConfig& config);

struct HomotonicityDecision {
    bool homotonic = false;
    std::string reason;
};

/// Exact decision, no sampling. Full algebras are decided by their structure
/// constants (homotonic iff every one is real and >= -tol); convolution,
/// matrix, pointwise and the dilation line in closed form; A2(R) fails (i).
HomotonicityDecision decide_homotonicity(const AlgebraSpec& algebra, double tol = default_tolerance);

} // namespace homotonic

#endif // HOMOTONIC_HOMOTONICITY_HPP
