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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "homotonic/homotonic.hpp"
#include "oracles.hpp"

using namespace homotonic;

namespace {

constexpr double tau = 1e-9;
constexpr std::uint64_t seed = 20261019;

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Recorder {
public:
    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            outcome_.pass = false;
            if (failures_++ < 5) {
                outcome_.detail += (outcome_.detail.empty() ? "" : "; ") + what;
            }
        }
    }
    Outcome finish(const std::string& summary)
    {
        if (outcome_.pass) {
            outcome_.detail = summary;
        }
        return outcome_;
    }

private:
    Outcome outcome_;
    int failures_ = 0;
};

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

Outcome matrix_threshold()
{
    Recorder rec;
    double worst_margin = 0.0, weakest_violation = 1e300;
    for (std::size_t n = 2; n <= 8; ++n) {
        const AlgebraSpec alg(Product::matrix(n));
        const double mu = static_cast<double>(n);
        const Certificate at = certify(alg, Weight::uniform(alg.carrier(), mu));
        rec.expect(at.certified() && std::fabs(at.margin) <= 1e-12, "n=" + std::to_string(n) + " not certified at mu=n");
        worst_margin = std::max(worst_margin, std::fabs(at.margin));

        const Certificate below = certify(alg, Weight::uniform(alg.carrier(), mu * (1 - 1e-3)));
        rec.expect(!below.certified() && below.witness.has_value(), "n=" + std::to_string(n) + " not refuted below");
        if (below.witness) {
            const auto& w = *below.witness;
            const double factor = w.norm_product / (w.norm_f * w.norm_g);
            const double recomputed = weighted_sup_norm(Weight::uniform(alg.carrier(), mu * (1 - 1e-3)),
                                                        alg.multiply(w.f, w.g));
            rec.expect(factor >= 1 + 5e-4, "n=" + std::to_string(n) + " witness factor " + fmt(factor));
            rec.expect(std::fabs(recomputed - w.norm_product) <= 1e-12, "witness norm not reproduced");
            weakest_violation = std::min(weakest_violation, factor);
        }
    }
    return rec.finish("n=2..8, max |margin| at mu=n " + fmt(worst_margin) + ", min witness factor below " +
                      fmt(weakest_violation));
}

Outcome convolution_threshold()
{
    Recorder rec;
    const SamplingConfig cfg{.samples = 200, .seed = seed, .tol = tau};
    std::string summary;
    for (double kp : {0.9, 1.0, 1.1}) {
        const AlgebraSpec alg(Product::convolution(kp, 1.0, 128));
        const Weight w = Weight::uniform(alg.carrier(), 1.0);
        const Certificate c = certify(alg, w);
        rec.expect(std::fabs(c.margin - (kp - 1.0)) <= 1e-12, "kp=" + fmt(kp) + " margin " + fmt(c.margin));
        rec.expect(c.certified() == (kp <= 1.0), "kp=" + fmt(kp) + " wrong verdict");
        if (!c.certified()) {
            const StabilityReport s = check_strong_stability(alg, w, cfg, 3);
            rec.expect(s.violation && s.violation->k == 2 && s.violation->from_candidate &&
                           s.violation->f == hadamard_inverse(w),
                       "kp=" + fmt(kp) + " no k=2 violation by w_-1");
        }
        summary += (summary.empty() ? "" : ", ") + ("kp=" + fmt(kp) + " margin " + fmt(c.margin));
    }
    return rec.finish(summary);
}

Outcome dilation_threshold()
{
    Recorder rec;
    const AlgebraSpec alg = AlgebraSpec::dilation_line();
    const Certificate one = certify(alg, Weight::dilation(1.0));
    const Certificate low = certify(alg, Weight::dilation(0.99));
    rec.expect(one.certified() && one.margin == 0.0, "nu=1 not certified with margin 0");
    rec.expect(!low.certified(), "nu=0.99 not refuted");
    const double inv = 1.0 / 0.99;
    rec.expect(low.margin == inv * inv - inv, "nu=0.99 margin differs from 1/nu^2 - 1/nu");
    rec.expect(threshold_scale(alg, Weight::dilation(1.0)) == 1.0, "threshold not exactly 1");
    return rec.finish("nu=1 margin 0, nu=0.99 margin " + fmt(low.margin));
}

Outcome jordan_nonassociativity()
{
    Recorder rec;
    for (std::size_t n : {2u, 4u}) {
        const Carrier c = Carrier::matrix_grid(n);
        const Product j = jordanize(Product::matrix(n));
        const Element a = Element::indicator(c, 1), b = Element::indicator(c, n);
        rec.expect(j(j(a, b), b) - scale(0.5, b) == Element::zero(c), "n=" + std::to_string(n) + " (AoB)oB != B/2");
        rec.expect(j(a, j(b, b)) == Element::zero(c), "n=" + std::to_string(n) + " Ao(BoB) != 0");
    }
    return rec.finish("n in {2,4}: (AoB)oB - B/2 = 0 and Ao(BoB) = 0 exactly");
}

json homotonicity_verdicts(Recorder& rec, std::uint64_t s)
{
    const SamplingConfig cfg{.samples = 1000, .seed = s, .tol = tau};
    json out = json::array();
    const std::vector<AlgebraSpec> good{
        AlgebraSpec(Product::matrix(2)),          AlgebraSpec(Product::matrix(4)),
        AlgebraSpec(jordanize(Product::matrix(3))), AlgebraSpec(Product::convolution(1.0, 1.0, 32)),
        AlgebraSpec(Product::pointwise(6)),       AlgebraSpec::dilation_line()};
    for (const AlgebraSpec& alg : good) {
        const EquivalenceReport r = theorem_equivalence_suite(alg, cfg);
        rec.expect(r.homotonic(), alg.describe() + " not homotonic");
        rec.expect(r.ii.samples >= 1000 || r.ii.verdict == Verdict::holds_exact, alg.describe() + " undersampled");
        out.push_back({{"algebra", to_json(alg)}, {"report", to_json(r)}});
    }

    const AlgebraSpec plane(Product::plane());
    const EquivalenceReport p = theorem_equivalence_suite(plane, cfg);
    const EquivalenceReport p2 = theorem_equivalence_suite(plane, cfg);
    rec.expect(p.consistent && !p.homotonic(), "plane not rejected");
    rec.expect(p.ii.witness && !reevaluate_witness(plane, p.ii).holds, "plane witness does not reproduce");
    rec.expect(to_json(p) == to_json(p2), "plane witness not reproducible");
    out.push_back({{"algebra", to_json(plane)}, {"report", to_json(p)}});

    const AlgebraSpec a2 = AlgebraSpec::a2_real();
    const EquivalenceReport q = theorem_equivalence_suite(a2, cfg);
    rec.expect(!q.abs_closed.holds() && q.abs_closed.witness, "A2 abs closure not refuted");
    rec.expect(q.abs_closed.witness && !reevaluate_witness(a2, q.abs_closed).holds, "A2 witness does not reproduce");
    rec.expect(q.consistent && !q.homotonic(), "A2 verdict");
    out.push_back({{"algebra", to_json(a2)}, {"report", to_json(q)}});
    return out;
}

json theorem_equivalences(Recorder& rec, std::uint64_t s, std::size_t& certified_count)
{
    json out = json::array();
    certified_count = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const std::size_t m = 1 + i % 6;
        std::vector<Scalar> c(m * m * m);
        SampleStream stream(s, i, 50);
        for (auto& x : c) {
            x = stream.uniform(0.0, 1.0);
        }
        const StructureTensor tensor(m, Field::real, c);
        const AlgebraSpec alg{Product::tensor(tensor)};
        std::vector<double> w0(m);
        for (auto& x : w0) {
            x = stream.uniform(0.1, 2.0);
        }
        const Weight base(alg.carrier(), w0);
        const double mu = threshold_scale(alg, base, tau);
        const Weight w = base.scaled(mu * stream.uniform(0.5, 1.5));

        const SamplingConfig cfg{.samples = 1000, .seed = s + i, .tol = tau};
        const EquivalenceReport eq = theorem_equivalence_suite(alg, cfg);
        rec.expect(eq.consistent && eq.homotonic(), "case " + std::to_string(i) + " checkers disagree or fail");

        const Certificate cert = certify(alg, w);
        const LambdaEstimate lambda = sample_lambda(alg, w, SamplingConfig{.samples = 300, .seed = s + i, .tol = tau});
        const StabilityReport stab = check_strong_stability(alg, w, SamplingConfig{.samples = 100, .seed = s + i, .tol = tau}, 4);
        if (cert.certified()) {
            ++certified_count;
            rec.expect(lambda.value <= 1 + tau, "case " + std::to_string(i) + " lambda " + fmt(lambda.value));
            rec.expect(stab.stable, "case " + std::to_string(i) + " unstable though certified");
        } else {
            rec.expect(lambda.value > 1 + tau && lambda.value >= cert.norm_inverse_squared,
                       "case " + std::to_string(i) + " lambda sampler misses violator");
            rec.expect(stab.violation && stab.violation->k == 2 && stab.violation->from_candidate,
                       "case " + std::to_string(i) + " stability sampler misses w_-1");
        }

        const std::size_t u = i % m, a = (i / 2) % m, b = (i / 3) % m;
        const AlgebraSpec bad{Product::tensor(tensor.with(u, a, b, -0.1))};
        const EquivalenceReport flipped = theorem_equivalence_suite(bad, cfg);
        rec.expect(flipped.consistent && !flipped.homotonic(), "case " + std::to_string(i) + " flip not detected");
        rec.expect(!flipped.abs_closed.holds() || (!flipped.ii.holds() && !flipped.ii_real->holds() &&
                                                   !flipped.ii_prime.holds()),
                   "case " + std::to_string(i) + " a condition survived the flip");
        for (const CheckReport* r : {&flipped.ii, &*flipped.ii_real, &flipped.ii_prime}) {
            rec.expect(r->witness && r->witness->from_candidate, "case " + std::to_string(i) + " non-indicator witness");
        }
        if (flipped.ii_real->witness) {
            const auto& wi = *flipped.ii_real->witness;
            rec.expect(wi.elements.at(0) == Element::indicator(bad.carrier(), a) &&
                           wi.elements.at(1) == Element::indicator(bad.carrier(), b) && wi.index == u,
                       "case " + std::to_string(i) + " witness is not the flipped indicator pair");
        }
        out.push_back({{"size", m},
                       {"certificate", to_json(cert)},
                       {"lambda", lambda.value},
                       {"stable", stab.stable},
                       {"equivalence", to_json(eq)},
                       {"flipped", to_json(flipped)}});
    }
    return out;
}

json numerical_radius_report(Recorder& rec, std::uint64_t s)
{
    const SquareMatrix e12(2, {0.0, 1.0, 0.0, 0.0});
    const double r = numerical_radius(e12);
    const double sampled = oracle::sampled_radius({e12.entries().begin(), e12.entries().end()}, 2, 100000,
                                                  static_cast<unsigned>(s));
    rec.expect(std::fabs(r - 0.5) <= 1e-6, "r(E12) = " + fmt(r));
    rec.expect(sampled <= r + 1e-6 && sampled >= r - 1e-3, "sampling oracle disagrees: " + fmt(sampled));

    const RadiusSubmultWitness w = radius_submult_witness();
    rec.expect(std::fabs(w.radius_ab - 1.0) <= 1e-6 && w.radius_ab > w.radius_a * w.radius_b,
               "witness r(AB) = " + fmt(w.radius_ab));

    const BergerSweepReport sweep = berger_sweep(200, 5, 5, s, 1e-8);
    rec.expect(sweep.violations == 0, std::to_string(sweep.violations) + " Berger violations");
    return {{"radius_e12", r}, {"witness", to_json(w)}, {"berger", to_json(sweep)}};
}

Outcome homotonicity_criterion()
{
    Recorder rec;
    homotonicity_verdicts(rec, seed);
    return rec.finish("6 homotonic algebras hold, plane fails with reproducible witness, A2 fails (i)");
}

Outcome equivalence_criterion()
{
    Recorder rec;
    std::size_t certified = 0;
    theorem_equivalences(rec, seed, certified);
    return rec.finish("50 tensor algebras (" + std::to_string(certified) + " certified, " +
                      std::to_string(50 - certified) + " refuted), all flips detected by indicator witnesses");
}

Outcome radius_criterion()
{
    Recorder rec;
    const json j = numerical_radius_report(rec, seed);
    return rec.finish("r(E12) = " + fmt(j["radius_e12"].get<double>()) + ", r(AB) = 1 > 0.25, Berger worst ratio " +
                      fmt(j["berger"]["worst_ratio"].get<double>()));
}

Outcome determinism_criterion()
{
    Recorder rec;
    std::size_t certified = 0;
    const auto run = [&] {
        json j;
        j["criterion5"] = homotonicity_verdicts(rec, seed);
        j["criterion6"] = theorem_equivalences(rec, seed, certified);
        j["criterion7"] = numerical_radius_report(rec, seed);
        return j.dump();
    };
    const std::string first = run();
    const std::string second = run();
    rec.expect(first == second, "reports differ between runs");
    return rec.finish("two runs of criteria 5-7 give byte-identical JSON (" + std::to_string(first.size()) + " bytes)");
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"1 matrix threshold", 1.0, matrix_threshold},
        {"2 convolution threshold", 1.0, convolution_threshold},
        {"3 dilation threshold", 0.0, dilation_threshold},
        {"4 Jordan non-associativity", 0.0, jordan_nonassociativity},
        {"5 homotonicity verdicts", 0.0, homotonicity_criterion},
        {"6 theorem-level equivalences", 10.0, equivalence_criterion},
        {"7 numerical radius", 30.0, radius_criterion},
        {"8 determinism", 0.0, determinism_criterion},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = Outcome{false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
            o.pass = false;
            o.detail += " (over the " + fmt(c.budget_seconds) + " s budget)";
        }
        std::printf("%s  criterion %-30s %7.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.name, seconds, o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
