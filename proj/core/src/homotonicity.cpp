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

#include "homotonic/homotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace homotonic {

std::string to_string(Condition condition)
{
    switch (condition) {
    case Condition::abs_closed: return "(i)";
    case Condition::ii: return "(ii)";
    case Condition::ii_real: return "(ii)_R";
    case Condition::ii_prime: return "(ii)'";
    }
    return "unknown";
}

std::string to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::holds_exact: return "holds-exact";
    case Verdict::holds_sampled: return "holds-sampled";
    case Verdict::fails: return "fails";
    }
    return "unknown";
}

namespace {

// Stream slots; (ii) and (ii)' share the f/g slots on purpose.
constexpr std::uint32_t slot_f = 0;
constexpr std::uint32_t slot_g = 1;
constexpr std::uint32_t slot_r1 = 2;
constexpr std::uint32_t slot_r2 = 3;
constexpr std::uint32_t slot_nonneg_f = 4;
constexpr std::uint32_t slot_nonneg_g = 5;
constexpr std::uint32_t slot_abs = 6;

// lhs <= rhs where lhs is real-valued and rhs should be. A nonzero imaginary
// part in rhs counts as a violation of its own size.
OrderCheck dominated_by(const Element& lhs, const Element& rhs, double tol)
{
    require_same_carrier(lhs, rhs, "dominated_by");
    if (rhs.is_real_valued()) {
        return leq(lhs, rhs, tol);
    }
    OrderCheck result;
    result.slack = tol * std::max({1.0, sup_norm(lhs), sup_norm(rhs)});
    result.worst_difference = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < lhs.size(); ++t) {
        double d = lhs[t].real() - rhs[t].real();
        if (rhs[t].imag() != 0.0) {
            d = std::max(d, std::fabs(rhs[t].imag()));
        }
        if (d > result.worst_difference) {
            result.worst_difference = d;
            result.worst_index = t;
        }
    }
    result.holds = result.worst_difference <= result.slack;
    return result;
}

Witness make_witness(std::vector<Element> elements, const OrderCheck& check,
                     std::size_t sample_index, bool from_candidate)
{
    Witness w;
    w.elements = std::move(elements);
    w.index = check.worst_index;
    w.magnitude = check.worst_difference;
    w.sample_index = sample_index;
    w.from_candidate = from_candidate;
    return w;
}

CheckReport base_report(Condition condition, const SamplingConfig& config)
{
    CheckReport r;
    r.condition = condition;
    r.seed = config.seed;
    r.tol = config.tol;
    return r;
}

bool has_indicator_candidates(const AlgebraSpec& algebra)
{
    return algebra.is_full() && algebra.carrier().size() <= indicator_candidate_limit;
}

// Calls visit(s, v, candidate_index) for every indicator pair, stopping when
// visit returns true.
template <class Visit>
bool for_each_indicator_pair(const AlgebraSpec& algebra, Visit&& visit)
{
    const Carrier& carrier = algebra.carrier();
    const std::size_t m = carrier.size();
    std::size_t index = 0;
    for (std::size_t s = 0; s < m; ++s) {
        const Element fs = Element::indicator(carrier, s, algebra.field());
        for (std::size_t v = 0; v < m; ++v, ++index) {
            const Element gv = Element::indicator(carrier, v, algebra.field());
            if (visit(fs, gv, index)) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

OrderCheck evaluate_abs_closed(const AlgebraSpec& algebra, const Element& f, double tol)
{
    const Element a = abs(f);
    OrderCheck result;
    result.slack = tol * std::max(1.0, sup_norm(a));
    if (algebra.membership() != Membership::a2_real) {
        result.holds = algebra.contains(a, tol);
        return result;
    }
    // Defect of |f| from the pattern (a b; -b a).
    const double diag = std::fabs(a[0].real() - a[3].real());
    const double anti = std::fabs(a[1].real() + a[2].real());
    result.worst_index = anti >= diag ? 1 : 0;
    result.worst_difference = std::max(diag, anti);
    result.holds = result.worst_difference <= result.slack;
    return result;
}

OrderCheck evaluate_ii(const AlgebraSpec& algebra, const Element& f, const Element& g, double tol)
{
    const Element lhs = abs(algebra.multiply(f, g));
    const Element rhs = algebra.multiply(abs(f), abs(g));
    return dominated_by(lhs, rhs, tol);
}

OrderCheck evaluate_ii_real(const AlgebraSpec& algebra, const Element& f, const Element& g, double tol)
{
    const Element p = algebra.multiply(f, g);
    return leq(Element::zero(p.carrier(), p.field()), p, tol);
}

OrderCheck evaluate_ii_prime(const AlgebraSpec& algebra, const Element& f1, const Element& f2,
                             const Element& g1, const Element& g2, double tol)
{
    if (!leq(abs(f1), g1, tol) || !leq(abs(f2), g2, tol)) {
        throw std::invalid_argument("evaluate_ii_prime: premise |f1| <= g1, |f2| <= g2 does not hold");
    }
    const Element lhs = abs(algebra.multiply(f1, f2));
    const Element rhs = algebra.multiply(g1, g2);
    return dominated_by(lhs, rhs, tol);
}

OrderCheck reevaluate_witness(const AlgebraSpec& algebra, const CheckReport& report)
{
    if (!report.witness) {
        throw std::invalid_argument("reevaluate_witness: report carries no witness");
    }
    const auto& e = report.witness->elements;
    switch (report.condition) {
    case Condition::abs_closed: return evaluate_abs_closed(algebra, e.at(0), report.tol);
    case Condition::ii: return evaluate_ii(algebra, e.at(0), e.at(1), report.tol);
    case Condition::ii_real: return evaluate_ii_real(algebra, e.at(0), e.at(1), report.tol);
    case Condition::ii_prime:
        return evaluate_ii_prime(algebra, e.at(0), e.at(1), e.at(2), e.at(3), report.tol);
    }
    throw std::logic_error("reevaluate_witness: unknown condition");
}

CheckReport check_abs_closed(const AlgebraSpec& algebra, const SamplingConfig& config)
{
    auto report = base_report(Condition::abs_closed, config);
    switch (algebra.membership()) {
    case Membership::full:
        report.verdict = Verdict::holds_exact;
        report.method = "closed-form: full function space";
        return report;
    case Membership::dilation_line:
        report.verdict = Verdict::holds_exact;
        report.method = "closed-form: |a t| = |a| t on t > 0";
        return report;
    case Membership::a2_real: break;
    }

    report.method = "sampled";
    for (std::size_t i = 0; i < config.samples; ++i) {
        SampleStream stream(config.seed, i, slot_abs);
        const Element f = algebra.sample_member(stream);
        const OrderCheck check = evaluate_abs_closed(algebra, f, config.tol);
        report.samples = i + 1;
        if (!check) {
            report.verdict = Verdict::fails;
            report.witness = make_witness({f}, check, i, false);
            return report;
        }
    }
    report.verdict = Verdict::holds_sampled;
    return report;
}

CheckReport check_ii(const AlgebraSpec& algebra, const SamplingConfig& config)
{
    auto report = base_report(Condition::ii, config);
    report.method = "sampled";

    if (has_indicator_candidates(algebra)) {
        const bool failed = for_each_indicator_pair(
            algebra, [&](const Element& f, const Element& g, std::size_t index) {
                report.candidates = index + 1;
                const OrderCheck check = evaluate_ii(algebra, f, g, config.tol);
                if (!check) {
                    report.witness = make_witness({f, g}, check, index, true);
                    return true;
                }
                return false;
            });
        if (failed) {
            report.verdict = Verdict::fails;
            return report;
        }
    }

    for (std::size_t i = 0; i < config.samples; ++i) {
        SampleStream fs(config.seed, i, slot_f);
        SampleStream gs(config.seed, i, slot_g);
        const Element f = algebra.sample_member(fs);
        const Element g = algebra.sample_member(gs);
        const OrderCheck check = evaluate_ii(algebra, f, g, config.tol);
        report.samples = i + 1;
        if (!check) {
            report.verdict = Verdict::fails;
            report.witness = make_witness({f, g}, check, i, false);
            return report;
        }
    }
    report.verdict = Verdict::holds_sampled;
    return report;
}

CheckReport check_ii_real(const AlgebraSpec& algebra, const SamplingConfig& config)
{
    if (algebra.field() != Field::real) {
        throw std::domain_error("check_ii_real: condition (ii)_R is stated for real algebras");
    }
    auto report = base_report(Condition::ii_real, config);

    if (algebra.membership() == Membership::dilation_line) {
        report.verdict = Verdict::holds_exact;
        report.method = "closed-form: a, b >= 0 implies a b >= 0";
        return report;
    }
    if (algebra.is_full() && algebra.product().kind() == Product::Kind::convolution) {
        report.verdict = Verdict::holds_exact;
        report.method = "closed-form: every convolution coefficient is kappa h > 0";
        return report;
    }
    if (algebra.is_full()) {
        report.method = "structure-tensor";
        const bool failed = for_each_indicator_pair(
            algebra, [&](const Element& f, const Element& g, std::size_t index) {
                report.candidates = index + 1;
                const OrderCheck check = evaluate_ii_real(algebra, f, g, config.tol);
                if (!check) {
                    report.witness = make_witness({f, g}, check, index, true);
                    return true;
                }
                return false;
            });
        report.verdict = failed ? Verdict::fails : Verdict::holds_exact;
        return report;
    }

    report.method = "sampled";
    for (std::size_t i = 0; i < config.samples; ++i) {
        SampleStream fs(config.seed, i, slot_nonneg_f);
        SampleStream gs(config.seed, i, slot_nonneg_g);
        const Element f = algebra.sample_member(fs, true);
        const Element g = algebra.sample_member(gs, true);
        const OrderCheck check = evaluate_ii_real(algebra, f, g, config.tol);
        report.samples = i + 1;
        if (!check) {
            report.verdict = Verdict::fails;
            report.witness = make_witness({f, g}, check, i, false);
            return report;
        }
    }
    report.verdict = Verdict::holds_sampled;
    return report;
}

CheckReport check_ii_prime(const AlgebraSpec& algebra, const SamplingConfig& config, Padding padding)
{
    auto report = base_report(Condition::ii_prime, config);
    report.method = padding == Padding::zero ? "sampled, zero padding" : "sampled";

    if (has_indicator_candidates(algebra)) {
        const bool failed = for_each_indicator_pair(
            algebra, [&](const Element& f, const Element& g, std::size_t index) {
                report.candidates = index + 1;
                // Indicators are nonnegative, so g_i = |f_i| = f_i.
                const OrderCheck check = evaluate_ii_prime(algebra, f, g, f, g, config.tol);
                if (!check) {
                    report.witness = make_witness({f, g, f, g}, check, index, true);
                    return true;
                }
                return false;
            });
        if (failed) {
            report.verdict = Verdict::fails;
            return report;
        }
    }

    const Carrier& carrier = algebra.carrier();
    for (std::size_t i = 0; i < config.samples; ++i) {
        SampleStream fs(config.seed, i, slot_f);
        SampleStream gs(config.seed, i, slot_g);
        const Element f1 = algebra.sample_member(fs);
        const Element f2 = algebra.sample_member(gs);
        Element g1 = abs(f1);
        Element g2 = abs(f2);
        if (padding == Padding::random) {
            SampleStream r1s(config.seed, i, slot_r1);
            SampleStream r2s(config.seed, i, slot_r2);
            g1 = add(g1, sample_element(carrier, algebra.field(), r1s, true));
            g2 = add(g2, sample_element(carrier, algebra.field(), r2s, true));
        }
        const OrderCheck check = evaluate_ii_prime(algebra, f1, f2, g1, g2, config.tol);
        report.samples = i + 1;
        if (!check) {
            report.verdict = Verdict::fails;
            report.witness = make_witness({f1, f2, g1, g2}, check, i, false);
            return report;
        }
    }
    report.verdict = Verdict::holds_sampled;
    return report;
}

EquivalenceReport theorem_equivalence_suite(const AlgebraSpec& algebra, const SamplingConfig& config)
{
    EquivalenceReport r{
        .abs_closed = check_abs_closed(algebra, config),
        .ii = check_ii(algebra, config),
        .ii_real = std::nullopt,
        .ii_prime = check_ii_prime(algebra, config),
    };
    const bool closed = r.abs_closed.holds();
    r.via_ii = closed && r.ii.holds();
    r.via_ii_prime = closed && r.ii_prime.holds();
    if (algebra.field() == Field::real) {
        r.ii_real = check_ii_real(algebra, config);
        r.via_ii_real = closed && r.ii_real->holds();
    } else {
        r.via_ii_real = r.via_ii;
    }
    r.consistent = r.via_ii == r.via_ii_real && r.via_ii == r.via_ii_prime;
    return r;
}

HomotonicityDecision decide_homotonicity(const AlgebraSpec& algebra, double tol)
{
    switch (algebra.membership()) {
    case Membership::a2_real:
        return {false, "A2(R) is not closed under absolute values: |(0 1; -1 0)| = (0 1; 1 0)"};
    case Membership::dilation_line:
        return {true, "dilation line: |a t| = |a| t and a, b >= 0 gives a b >= 0"};
    case Membership::full: break;
    }

    const Product& p = algebra.product();
    switch (p.kind()) {
    case Product::Kind::pointwise:
        return {true, "pointwise product: structure constants are 0/1"};
    case Product::Kind::matrix:
        return {true, "matrix product: structure constants are 0/1"};
    case Product::Kind::convolution:
        return {true, "convolution: every structure constant is kappa h > 0"};
    case Product::Kind::jordan: {
        const AlgebraSpec base(p.base(), algebra.field());
        if (decide_homotonicity(base, tol).homotonic) {
            return {true, "Jordan product of a homotonic product"};
        }
        break;
    }
    default: break;
    }

    // Indicators are nonnegative, so (ii) on the pair (1_s, 1_v) reads
    // |c[.][s][v]| <= c[.][s][v]: every structure constant must be real and >= 0.
    std::string reason = "structure constants are real and nonnegative";
    bool homotonic = true;
    for_each_indicator_pair(algebra, [&](const Element& f, const Element& g, std::size_t) {
        const OrderCheck check = evaluate_ii(algebra, f, g, tol);
        if (!check) {
            homotonic = false;
            std::size_t m = algebra.carrier().size();
            std::size_t s = 0, v = 0;
            for (std::size_t t = 0; t < m; ++t) {
                if (f[t] != Scalar(0.0)) s = t;
                if (g[t] != Scalar(0.0)) v = t;
            }
            reason = "structure constant c[" + std::to_string(check.worst_index) + "][" +
                     std::to_string(s) + "][" + std::to_string(v) + "] is not real and nonnegative";
            return true;
        }
        return false;
    });
    return {homotonic, reason};
}

} // namespace homotonic
