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

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "homotonic/homotonic.hpp"

namespace homotonic::cli {

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError(path + ": cannot open file");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

json envelope(const char* command, const RunConfig& config)
{
    return {{"tool", {{"name", "homotonic"}, {"version", homotonic::version}}},
            {"command", command},
            {"seed", config.seed},
            {"samples", config.samples},
            {"tol", config.tol}};
}

SamplingConfig sampling(const RunConfig& config)
{
    return SamplingConfig{.samples = config.samples, .seed = config.seed, .tol = config.tol};
}

std::string num(double x, int precision = 6)
{
    std::ostringstream os;
    os << std::setprecision(precision) << x;
    return os.str();
}

std::string scalar_text(const Scalar& s, Field field)
{
    if (field == Field::real || s.imag() == 0.0) {
        return num(s.real());
    }
    std::ostringstream os;
    os << num(s.real()) << (s.imag() < 0 ? "-" : "+") << num(std::fabs(s.imag())) << 'i';
    return os.str();
}

// Matrix grids as aligned grids with 1-based (j,k) labels, everything else
// as a bracketed list.
std::string render(const Element& f, const std::string& indent = "    ")
{
    std::ostringstream os;
    if (f.carrier().kind() == Carrier::Kind::matrix_grid) {
        const std::size_t n = f.carrier().dim();
        std::vector<std::string> cells;
        std::size_t width = 3;
        for (const auto& v : f.values()) {
            cells.push_back(scalar_text(v, f.field()));
            width = std::max(width, cells.back().size());
        }
        os << indent << std::setw(5) << "";
        for (std::size_t k = 0; k < n; ++k) {
            os << ' ' << std::setw(static_cast<int>(width)) << ("k=" + std::to_string(k + 1));
        }
        os << '\n';
        for (std::size_t j = 0; j < n; ++j) {
            os << indent << std::setw(5) << std::left << ("j=" + std::to_string(j + 1)) << std::right;
            for (std::size_t k = 0; k < n; ++k) {
                os << ' ' << std::setw(static_cast<int>(width)) << cells[j * n + k];
            }
            os << '\n';
        }
        return os.str();
    }
    constexpr std::size_t shown = 16;
    os << indent << '[';
    for (std::size_t t = 0; t < std::min(shown, f.size()); ++t) {
        os << (t ? ", " : "") << scalar_text(f[t], f.field());
    }
    if (f.size() > shown) {
        os << ", ... (" << f.size() << " values)";
    }
    os << "]\n";
    return os.str();
}

void render_report(std::ostream& os, const CheckReport& r)
{
    os << std::left << std::setw(8) << to_string(r.condition) << std::setw(15) << to_string(r.verdict)
       << std::right << r.method;
    if (r.samples > 0) {
        os << ", " << r.samples << " samples";
    }
    if (r.verdict != Verdict::holds_exact) {
        if (r.candidates > 0) {
            os << ", " << r.candidates << " indicator candidates";
        }
    }
    if (r.verdict == Verdict::holds_sampled) {
        os << " (not a proof)";
    }
    os << '\n';
    if (r.witness) {
        const auto& w = *r.witness;
        os << "  witness (" << (w.from_candidate ? "candidate " : "sample ") << w.sample_index
           << "), violation " << num(w.magnitude, 17) << " at carrier index " << w.index << ":\n";
        for (const auto& e : w.elements) {
            os << render(e);
        }
    }
}

CommandResult input_error(const std::string& message)
{
    return CommandResult{.exit_code = exit_input_error, .out = {}, .err = "error: " + message + "\n"};
}

Weight load_weight(const std::string& path, const AlgebraSpec& algebra)
{
    return weight_from_json(read_json_file(path), algebra.carrier());
}

} // namespace

CommandResult cmd_check(const std::string& algebra_path, const RunConfig& config)
{
    std::optional<AlgebraSpec> algebra;
    try {
        algebra = algebra_from_json(read_json_file(algebra_path));
    } catch (const std::exception& e) {
        return input_error(e.what());
    }

    const EquivalenceReport report = theorem_equivalence_suite(*algebra, sampling(config));
    CommandResult result;
    if (!report.consistent) {
        result.exit_code = exit_inconsistent;
    } else {
        result.exit_code = report.homotonic() ? exit_ok : exit_failed;
    }

    if (config.json) {
        json j = envelope("check", config);
        j["algebra"] = to_json(*algebra);
        j["result"] = to_json(report);
        j["exit_code"] = result.exit_code;
        result.out = j.dump(2) + "\n";
        return result;
    }

    std::ostringstream os;
    os << "algebra: " << algebra->describe() << "\n";
    os << "seed " << config.seed << ", tol " << config.tol << "\n";
    render_report(os, report.abs_closed);
    render_report(os, report.ii);
    if (report.ii_real) {
        render_report(os, *report.ii_real);
    }
    render_report(os, report.ii_prime);
    if (!report.consistent) {
        os << "verdict: INCONSISTENT -- (i)+(ii): " << report.via_ii << ", (i)+(ii)_R: " << report.via_ii_real
           << ", (i)+(ii)': " << report.via_ii_prime << "\n";
    } else {
        os << "verdict: " << (report.homotonic() ? "homotonic" : "not homotonic")
           << " (all characterizations agree)\n";
    }
    result.out = os.str();
    return result;
}

CommandResult cmd_certify(const std::string& algebra_path, const std::string& weight_path,
                          const RunConfig& config)
{
    std::optional<AlgebraSpec> algebra;
    std::optional<Weight> weight;
    try {
        algebra = algebra_from_json(read_json_file(algebra_path));
        weight = load_weight(weight_path, *algebra);
    } catch (const std::exception& e) {
        return input_error(e.what());
    }

    CommandResult result;
    const CheckReport sampled = check_ii(*algebra, sampling(config));
    if (!sampled.holds()) {
        result.err += "warning: sampled condition (ii) fails for " + algebra->describe() +
                      "; the algebra is not homotonic\n";
    }

    Certificate cert;
    try {
        cert = certify(*algebra, *weight, CertifyOptions{.tol = config.tol, .force = config.force});
    } catch (const PreconditionRefused& e) {
        result.exit_code = exit_precondition;
        result.err += std::string("refused: ") + e.what() + "\n(pass --force to evaluate the criterion anyway)\n";
        if (config.json) {
            json j = envelope("certify", config);
            j["algebra"] = to_json(*algebra);
            j["weight"] = to_json(*weight);
            j["refused"] = e.what();
            j["exit_code"] = result.exit_code;
            result.out = j.dump(2) + "\n";
        }
        return result;
    } catch (const std::exception& e) {
        return input_error(e.what());
    }

    result.exit_code = cert.certified() ? exit_ok : exit_failed;
    if (config.json) {
        json j = envelope("certify", config);
        j["algebra"] = to_json(*algebra);
        j["weight"] = to_json(*weight);
        j["certificate"] = to_json(cert);
        j["exit_code"] = result.exit_code;
        result.out = j.dump(2) + "\n";
        return result;
    }

    std::ostringstream os;
    os << "algebra: " << algebra->describe() << "\n";
    os << "verdict: " << to_string(cert.verdict)
       << (cert.certified() ? " (sub-multiplicative and strongly stable)"
                            : " (neither sub-multiplicative nor strongly stable)")
       << "\n";
    os << "margin: " << num(cert.margin, 17) << " at carrier index " << cert.worst_index << " (slack "
       << num(cert.slack) << ")\n";
    os << "|w_-1|_w = " << num(cert.norm_inverse, 17) << ", |w_-1 x w_-1|_w = "
       << num(cert.norm_inverse_squared, 17) << "\n";
    if (!cert.note.empty()) {
        os << "note: " << cert.note << "\n";
    }
    if (cert.witness) {
        os << "witness f = g = w_-1:\n" << render(cert.witness->f);
        os << "  |f|_w = |g|_w = " << num(cert.witness->norm_f, 17) << ", |f x g|_w = "
           << num(cert.witness->norm_product, 17) << " > 1\n";
    }
    result.out = os.str();
    return result;
}

CommandResult cmd_threshold(const ThresholdFamily& family, const RunConfig& config)
{
    std::optional<AlgebraSpec> algebra;
    std::optional<Weight> base;
    std::optional<double> expected;
    try {
        if (family.name == "matrix-uniform") {
            algebra = AlgebraSpec(Product::matrix(family.n));
            base = Weight::uniform(algebra->carrier(), 1.0);
            expected = static_cast<double>(family.n);
        } else if (family.name == "convolution") {
            algebra = AlgebraSpec(Product::convolution(family.kappa, family.period, family.grid));
            base = Weight::uniform(algebra->carrier(), 1.0);
            expected = family.kappa * family.period;
        } else if (family.name == "dilation") {
            algebra = AlgebraSpec::dilation_line();
            base = Weight::dilation(1.0);
            expected = 1.0;
        } else if (family.name == "custom") {
            if (family.algebra_path.empty() || family.weight_path.empty()) {
                return input_error("custom family needs --algebra and --weight");
            }
            algebra = algebra_from_json(read_json_file(family.algebra_path));
            base = load_weight(family.weight_path, *algebra);
        } else {
            return input_error("unknown family \"" + family.name +
                               "\" (expected matrix-uniform, convolution, dilation or custom)");
        }
    } catch (const std::exception& e) {
        return input_error(e.what());
    }

    CommandResult result;
    double mu = 0.0;
    try {
        mu = threshold_scale(*algebra, *base, config.tol);
    } catch (const PreconditionRefused& e) {
        result.exit_code = exit_precondition;
        result.err = std::string("refused: ") + e.what() + "\n";
        return result;
    } catch (const std::exception& e) {
        return input_error(e.what());
    }

    bool matches = true;
    if (expected) {
        matches = std::fabs(mu - *expected) <= config.tol * std::max(1.0, std::fabs(*expected));
        if (!matches) {
            result.exit_code = exit_inconsistent;
            result.err = "closed form " + num(*expected, 17) + " not reproduced\n";
        }
    }

    if (config.json) {
        json j = envelope("threshold", config);
        j["family"] = family.name;
        j["algebra"] = to_json(*algebra);
        j["base_weight"] = to_json(*base);
        j["mu_star"] = mu;
        j["closed_form"] = expected ? json(*expected) : json(nullptr);
        j["matches_closed_form"] = matches;
        j["exit_code"] = result.exit_code;
        result.out = j.dump(2) + "\n";
        return result;
    }
    std::ostringstream os;
    os << std::showpoint << std::setprecision(12) << mu << "\n";
    result.out = os.str();
    return result;
}

namespace {

CommandResult demo_jordan(std::size_t n, const RunConfig& config)
{
    if (n < 2) {
        return input_error("jordan-nonassoc needs n >= 2");
    }
    const Carrier carrier = Carrier::matrix_grid(n);
    const Product jordan = jordanize(Product::matrix(n));
    const Element a = Element::indicator(carrier, 1);     // E12
    const Element b = Element::indicator(carrier, n);     // E21
    const Element left = jordan(jordan(a, b), b);         // (A o B) o B
    const Element right = jordan(a, jordan(b, b));        // A o (B o B)
    const Element half_b = scale(0.5, b);
    const Element diff = subtract(left, right);
    const bool ok = left == half_b && right == Element::zero(carrier) && diff == half_b;

    CommandResult result;
    result.exit_code = ok ? exit_ok : exit_inconsistent;
    if (config.json) {
        json j = envelope("demo", config);
        j["demo"] = "jordan-nonassoc";
        j["n"] = n;
        j["A"] = to_json(a);
        j["B"] = to_json(b);
        j["(AoB)oB"] = to_json(left);
        j["Ao(BoB)"] = to_json(right);
        j["difference"] = to_json(diff);
        j["difference_is_half_B"] = diff == half_b;
        j["exit_code"] = result.exit_code;
        result.out = j.dump(2) + "\n";
        return result;
    }
    std::ostringstream os;
    os << "Jordan product A o B = (AB + BA)/2 on " << n << "x" << n << " matrices\n";
    os << "A =\n" << render(a) << "B =\n" << render(b);
    os << "(A o B) o B =\n" << render(left);
    os << "A o (B o B) =\n" << render(right);
    os << "difference = " << (diff == half_b ? "B/2 exactly" : "NOT B/2") << ": the product is not associative\n";
    result.out = os.str();
    return result;
}

CommandResult demo_plane(const RunConfig& config)
{
    const AlgebraSpec plane(Product::plane());
    double defect = 0.0;
    for (std::size_t i = 0; i < config.samples; ++i) {
        SampleStream fs(config.seed, i, 30);
        SampleStream gs(config.seed, i, 31);
        const Element f = sample_element(plane.carrier(), Field::real, fs);
        const Element g = sample_element(plane.carrier(), Field::real, gs);
        const Element p = plane.multiply(f, g);
        const Scalar z = Scalar(f[0].real(), f[1].real()) * Scalar(g[0].real(), g[1].real());
        defect = std::max({defect, std::fabs(p[0].real() - z.real()), std::fabs(p[1].real() - z.imag())});
    }
    const bool ok = defect <= 1e-12;
    const Element f = Element::real(plane.carrier(), {1.0, 2.0});
    const Element square = plane.multiply(f, f);

    CommandResult result;
    result.exit_code = ok ? exit_ok : exit_inconsistent;
    if (config.json) {
        json j = envelope("demo", config);
        j["demo"] = "plane-complex";
        j["pairs"] = config.samples;
        j["max_defect"] = defect;
        j["example"] = {{"f", to_json(f)}, {"f x f", to_json(square)}};
        j["exit_code"] = result.exit_code;
        result.out = j.dump(2) + "\n";
        return result;
    }
    std::ostringstream os;
    os << "(a, b) x (c, d) = (ac - bd, ad + bc) against (a + ib)(c + id)\n";
    os << "pairs: " << config.samples << ", max defect: " << num(defect, 17) << "\n";
    os << "(1, 2) x (1, 2) = (" << num(square[0].real()) << ", " << num(square[1].real())
       << ") = (1 + 2i)^2\n";
    result.out = os.str();
    return result;
}

CommandResult demo_radius(const RunConfig& config)
{
    const RadiusSubmultWitness w = radius_submult_witness();
    const BergerSweepReport sweep = berger_sweep(200, 5, 5, config.seed);
    const bool ok = w.radius_ab > w.radius_a * w.radius_b && sweep.violations == 0;

    CommandResult result;
    result.exit_code = ok ? exit_ok : exit_inconsistent;
    if (config.json) {
        json j = envelope("demo", config);
        j["demo"] = "radius";
        j["submultiplicativity_witness"] = to_json(w);
        j["berger_sweep"] = to_json(sweep);
        j["exit_code"] = result.exit_code;
        result.out = j.dump(2) + "\n";
        return result;
    }
    std::ostringstream os;
    os << "numerical radius r(A) = max |(Ax, x)| over unit x\n";
    os << "A = E12, B = E21: r(A) = " << num(w.radius_a, 12) << ", r(B) = " << num(w.radius_b, 12)
       << ", r(AB) = " << num(w.radius_ab, 12) << " > r(A) r(B) = " << num(w.radius_a * w.radius_b, 12)
       << "\n";
    os << "Berger sweep: " << sweep.matrices << " random matrices, k <= " << sweep.max_power << ", "
       << sweep.violations << " violations, worst r(A^k)/r(A)^k = " << num(sweep.worst_ratio, 12) << "\n";
    result.out = os.str();
    return result;
}

} // namespace

CommandResult cmd_demo(const std::string& name, std::size_t n, const RunConfig& config)
{
    if (name == "jordan-nonassoc") {
        return demo_jordan(n, config);
    }
    if (name == "plane-complex") {
        return demo_plane(config);
    }
    if (name == "radius") {
        return demo_radius(config);
    }
    std::string names;
    for (const auto& d : demo_names) {
        names += (names.empty() ? "" : ", ") + d;
    }
    return input_error("unknown demo \"" + name + "\"; available: " + names);
}

CommandResult cmd_radius(const std::string& matrix_path, unsigned berger_power,
                         const RadiusOptions& options, const RunConfig& config)
{
    std::optional<SquareMatrix> a;
    try {
        a = matrix_from_json(read_json_file(matrix_path));
    } catch (const std::exception& e) {
        return input_error(e.what());
    }
    CommandResult result;
    double radius = 0.0;
    std::optional<BergerReport> berger;
    try {
        radius = numerical_radius(*a, options);
        if (berger_power >= 2) {
            berger = berger_check(*a, berger_power, 1e-8, options);
            if (!berger->holds) {
                result.exit_code = exit_failed;
            }
        }
    } catch (const std::invalid_argument& e) {
        return input_error(e.what());
    }

    if (config.json) {
        json j = envelope("radius", config);
        j["matrix"] = to_json(*a);
        j["radius"] = radius;
        j["grid"] = options.grid;
        j["refinements"] = options.refinements;
        j["berger"] = berger ? to_json(*berger) : json(nullptr);
        j["exit_code"] = result.exit_code;
        result.out = j.dump(2) + "\n";
        return result;
    }
    std::ostringstream os;
    os << "r(A) = " << num(radius, 12) << "\n";
    if (berger) {
        for (std::size_t i = 0; i < berger->ratios.size(); ++i) {
            os << "k = " << i + 2 << ": r(A^k) / r(A)^k = " << num(berger->ratios[i], 12) << "\n";
        }
        os << "Berger inequality " << (berger->holds ? "holds" : "VIOLATED") << "\n";
    }
    result.out = os.str();
    return result;
}

int run(const std::vector<std::string>& args, std::string& out, std::string& err)
{
    CLI::App app{"Homotonic algebras: homotonicity checks and weighted sup norm certificates", "homotonic"};
    app.set_version_flag("--version", std::string(homotonic::version));
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    app.add_option("--seed", config.seed, "Random seed for every sampler")->envname("HOMOTONIC_SEED");
    app.add_option("--samples", config.samples, "Random samples per checker")->check(CLI::PositiveNumber);
    app.add_option("--tol", config.tol, "Relative tolerance for order comparisons")->check(CLI::PositiveNumber);
    app.add_flag("--json", config.json, "Emit machine-readable JSON");
    app.add_flag("--force", config.force, "Certify even when the algebra is not homotonic");

    std::string algebra_path, weight_path, matrix_path, demo_name;
    ThresholdFamily family;
    std::size_t demo_n = 2;
    unsigned berger_power = 0;
    RadiusOptions radius_options;

    auto* check = app.add_subcommand("check", "Check homotonicity conditions (i), (ii), (ii)_R, (ii)'");
    check->add_option("algebra", algebra_path, "Algebra JSON file")->required();

    auto* cert = app.add_subcommand("certify", "Certify a weighted sup norm: w_-1 x w_-1 <= w_-1");
    cert->add_option("algebra", algebra_path, "Algebra JSON file")->required();
    cert->add_option("weight", weight_path, "Weight JSON file")->required();

    auto* thr = app.add_subcommand("threshold", "Smallest certified scale mu* for a weight family");
    thr->add_option("family", family.name, "matrix-uniform | convolution | dilation | custom")->required();
    thr->add_option("--n", family.n, "Matrix dimension")->check(CLI::PositiveNumber);
    thr->add_option("--kappa", family.kappa, "Convolution constant")->check(CLI::PositiveNumber);
    thr->add_option("--p", family.period, "Convolution period")->check(CLI::PositiveNumber);
    thr->add_option("--grid", family.grid, "Convolution grid size")->check(CLI::PositiveNumber);
    thr->add_option("--algebra", family.algebra_path, "Algebra JSON (custom family)");
    thr->add_option("--weight", family.weight_path, "Base weight JSON (custom family)");

    auto* demo = app.add_subcommand("demo", "Worked demonstrations");
    demo->add_option("name", demo_name, "jordan-nonassoc | plane-complex | radius")->required();
    demo->add_option("--n", demo_n, "Matrix dimension for jordan-nonassoc");

    auto* rad = app.add_subcommand("radius", "Numerical radius of a matrix, optional Berger sweep");
    rad->add_option("matrix", matrix_path, "Matrix JSON file")->required();
    rad->add_option("--berger", berger_power, "Check r(A^k) <= r(A)^k for k = 2..K");
    rad->add_option("--grid", radius_options.grid, "Angular grid size")->check(CLI::Range(16, 1 << 20));
    rad->add_option("--refine", radius_options.refinements, "Golden-section refinement steps");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back(); // program name
    }
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        const int code = app.exit(e, o, er);
        out = o.str();
        err = er.str();
        return code == 0 ? exit_ok : exit_input_error;
    }

    CommandResult result;
    if (*check) {
        result = cmd_check(algebra_path, config);
    } else if (*cert) {
        result = cmd_certify(algebra_path, weight_path, config);
    } else if (*thr) {
        result = cmd_threshold(family, config);
    } else if (*demo) {
        result = cmd_demo(demo_name, demo_n, config);
    } else {
        result = cmd_radius(matrix_path, berger_power, radius_options, config);
    }
    out = std::move(result.out);
    err = std::move(result.err);
    return result.exit_code;
}

} // namespace homotonic::cli
