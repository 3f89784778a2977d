// ============================================================================
// cli.cpp -- subcommand front end: enumerate / classify / visible / count /
//            delta / orchard-min / orchard-fib / orchard-block / euclid
// ============================================================================

#include "hypvis/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypvis/counting.hpp"
#include "hypvis/enumeration.hpp"
#include "hypvis/orchard.hpp"
#include "hypvis/parse.hpp"
#include "hypvis/visibility.hpp"

namespace hypvis {

namespace {

using json = nlohmann::ordered_json;

std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

/** Table key column: integers print bare, anything else at full precision. */
std::string fmt_key(double v) {
    if (v == std::floor(v) && std::fabs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
        return buf;
    }
    return fmt_full(v);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::fputs(content.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

json ratio_json(const Ratio& r) {
    return json{{"num", to_string_i128(r.num())},
                {"den", to_string_i128(r.den())},
                {"value", r.to_double()}};
}

json point_json(const OrbitPoint& z) {
    return json{{"B", z.B}, {"D", z.D}};
}

/** Exactly one of --x / --exact-trace, resolved to the trace cap. */
struct RadiusInput {
    double x = 0;
    i64 exact_trace = 0;
    CLI::Option* opt_x = nullptr;
    CLI::Option* opt_trace = nullptr;

    void attach(CLI::App* sub) {
        opt_x = sub->add_option("--x", x, "circle size as x = e^R (trace cap rounds to x + 1/x)");
        opt_trace =
            sub->add_option("--exact-trace", exact_trace, "trace cap N directly, bypassing rounding");
        opt_x->excludes(opt_trace);
    }

    i64 trace() const {
        if (opt_x->count()) return trace_bound_for_radius(x);
        if (opt_trace->count()) return exact_trace;
        throw CLI::ValidationError("one of --x / --exact-trace is required");
    }

    /** The e^R key matching the trace cap (used when only --exact-trace given). */
    double key() const {
        if (opt_x->count()) return x;
        const double n = double(trace());
        return (n + std::sqrt(n * n - 4.0)) / 2.0;
    }
};

// ---------------------------------------------------------------------------

struct EnumerateCmd {
    RadiusInput radius;
    std::string format = "csv";
    std::string output;

    void run() const {
        const i64 n = radius.trace();
        const std::vector<OrbitPoint> pts = enumerate_points({n, false});
        std::ostringstream out;
        if (format == "csv") {
            out << "B,D,A,trace,visible\n";
            for (const OrbitPoint& z : pts)
                out << z.B << ',' << z.D << ',' << z.A << ',' << static_cast<i64>(z.trace())
                    << ',' << (is_visible(z).visible ? 1 : 0) << '\n';
        } else {
            json rows = json::array();
            for (const OrbitPoint& z : pts) {
                json row = point_json(z);
                row["A"] = z.A;
                row["trace"] = static_cast<i64>(z.trace());
                row["visible"] = is_visible(z).visible;
                rows.push_back(std::move(row));
            }
            out << rows.dump(2) << '\n';
        }
        write_output(output, out.str());
    }
};

struct ClassifyCmd {
    std::string point_text;
    std::string output;

    void run() const {
        const OrbitPoint z = parse_point(point_text);
        const VisibilityResult vis = is_visible(z);
        const RayPosition pos = ray_decompose(z);
        const auto [vm, vn] = v_map(z);
        json report;
        report["point"] = point_json(z);
        report["A"] = z.A;
        report["trace"] = static_cast<i64>(z.trace());
        report["quadrant"] = static_cast<int>(quadrant(z).q);
        report["visible"] = vis.visible;
        if (vis.witness)
            report["witness"] =
                json{{"a", vis.witness->a}, {"b", vis.witness->b}, {"d", vis.witness->d}};
        else
            report["witness"] = nullptr;
        report["ray"] = json{{"index", pos.index},
                             {"generator",
                              json::array({pos.ray.generator.a, pos.ray.generator.b,
                                           pos.ray.generator.c, pos.ray.generator.d})},
                             {"spacing_cosh", ratio_json(pos.ray.spacing_cosh)}};
        report["even_place"] = is_even_place(z);
        report["v"] = json::array({vm, vn});
        report["v_euclid_visible"] = visible_euclidean(vm, vn);
        write_output(output, report.dump(2) + "\n");
    }
};

struct VisibleCmd {
    std::string point_text;
    std::string output;

    void run() const {
        const VisibilityResult vis = is_visible(parse_point(point_text));
        std::ostringstream out;
        if (vis.visible) {
            out << "visible\n";
        } else {
            out << "invisible (a=" << vis.witness->a << ", b=" << vis.witness->b
                << ", d=" << vis.witness->d << ")\n";
        }
        write_output(output, out.str());
    }
};

struct CountCmd {
    std::vector<double> xs;
    std::vector<i64> traces;
    std::string format = "table";
    std::string output;

    void run() const {
        if (xs.empty() == traces.empty())
            throw CLI::ValidationError("exactly one of --x / --exact-trace is required");
        std::vector<CountReport> rows;
        for (double x : xs) rows.push_back(count_report(x));
        for (i64 n : traces) {
            CountReport r;
            r.x = (double(n) + std::sqrt(double(n) * n - 4.0)) / 2.0;
            r.H = count_points(n);
            r.visible = count_visible_direct(n);
            r.invisible = r.H - r.visible;
            r.error = error_term(r.visible, r.x);
            r.approx_invisible = approx_invisible(r.x);
            r.delta_star = delta_star(r.visible, r.x);
            rows.push_back(r);
        }
        std::ostringstream out;
        if (format == "table") {
            out << "x,visible,invisible,error,approx\n";
            for (const CountReport& r : rows)
                out << fmt_key(r.x) << ',' << r.visible << ',' << r.invisible << ','
                    << fmt2(r.error) << ',' << fmt2(r.approx_invisible) << '\n';
        } else if (format == "csv") {
            out << "x,H,visible,invisible,error,approx,delta_star\n";
            for (const CountReport& r : rows)
                out << fmt_full(r.x) << ',' << r.H << ',' << r.visible << ',' << r.invisible
                    << ',' << fmt_full(r.error) << ',' << fmt_full(r.approx_invisible) << ','
                    << fmt_full(r.delta_star) << '\n';
        } else {
            json arr = json::array();
            for (const CountReport& r : rows)
                arr.push_back(json{{"x", r.x},
                                   {"H", r.H},
                                   {"visible", r.visible},
                                   {"invisible", r.invisible},
                                   {"error", r.error},
                                   {"approx", r.approx_invisible},
                                   {"delta_star", r.delta_star}});
            out << arr.dump(2) << '\n';
        }
        write_output(output, out.str());
    }
};

struct DeltaCmd {
    double x_max = 0;
    int samples = 100;
    bool linear = false;
    bool mean = false;
    std::string output;

    void run() const {
        std::ostringstream out;
        if (mean) {
            out << fmt_full(mean_delta_diagnostic(x_max, samples)) << '\n';
        } else {
            out << "x,delta_star\n";
            for (const auto& [x, d] : delta_star_series(x_max, samples, !linear))
                out << fmt_full(x) << ',' << fmt_full(d) << '\n';
        }
        write_output(output, out.str());
    }
};

struct OrchardMinCmd {
    RadiusInput radius;
    std::string format = "csv";
    std::string output;

    void run() const {
        const i64 n = radius.trace();
        const MinEclipse m = min_eclipse_epsilon(n);
        std::ostringstream out;
        if (format == "csv") {
            out << "z_B,z_D,w_B,w_D,T,sinh2_eps_min\n";
            out << m.z.B << ',' << m.z.D << ',' << m.w.B << ',' << m.w.D << ','
                << to_string_i128(m.trace_form) << ',' << m.sinh_sq.str() << '\n';
        } else {
            json report;
            report["max_trace"] = n;
            report["z"] = point_json(m.z);
            report["w"] = point_json(m.w);
            report["trace_form"] = to_string_i128(m.trace_form);
            report["sinh_sq"] = ratio_json(m.sinh_sq);
            out << report.dump(2) << '\n';
        }
        write_output(output, out.str());
    }
};

struct OrchardFibCmd {
    int n = 1;
    std::string output;

    void run() const {
        const FibonacciPair p = fibonacci_pair(n);
        json report;
        report["n"] = p.n;
        report["gamma"] = json::array({p.gamma.a, p.gamma.b, p.gamma.c, p.gamma.d});
        report["tau"] = json::array({p.tau.a, p.tau.b, p.tau.c, p.tau.d});
        report["inner"] = point_json(p.inner);
        report["outer"] = point_json(p.outer);
        report["trace_product"] = static_cast<i64>(p.trace_form);
        report["sinh_sq"] = ratio_json(p.sinh_sq);
        report["inner_visible"] = true;  // construction asserts both
        report["outer_visible"] = true;
        write_output(output, report.dump(2) + "\n");
    }
};

struct OrchardBlockCmd {
    double eps = 0;
    std::string sinh_eps_text;
    i64 max_trace = 3;
    i64 far_factor = 4;
    i64 axis_max = 1000;
    CLI::Option* opt_eps = nullptr;
    CLI::Option* opt_sinh = nullptr;
    std::string output;

    void run() const {
        Ratio sinh_eps;
        if (opt_eps->count() == opt_sinh->count())
            throw CLI::ValidationError("exactly one of --eps / --sinh-eps is required");
        if (opt_eps->count()) {
            if (eps < 0) throw std::invalid_argument("disk radius must be nonnegative");
            sinh_eps = Ratio::from_double(std::sinh(eps));
        } else {
            sinh_eps = parse_decimal_ratio(sinh_eps_text);
        }
        const std::vector<OrbitPoint> far = default_far_sweep(max_trace, far_factor, axis_max);
        const BlockingReport r = blocking_check(sinh_eps, max_trace, far);
        json report;
        report["max_trace"] = max_trace;
        report["far_count"] = r.far_count;
        report["blocker_count"] = r.blocker_count;
        report["blocked"] = r.blocked;
        report["witness"] = r.witness ? point_json(*r.witness) : json(nullptr);
        write_output(output, report.dump(2) + "\n");
    }
};

struct EuclidCmd {
    double radius = 0;
    std::string format = "plain";
    std::string output;

    void run() const {
        const i64 count = euclid_visible_count(radius);
        std::ostringstream out;
        if (format == "json")
            out << json{{"radius", radius}, {"count", count}}.dump(2) << '\n';
        else
            out << count << '\n';
        write_output(output, out.str());
    }
};

void add_output_option(CLI::App* sub, std::string& path) {
    sub->add_option("--output", path, "write to this file instead of stdout");
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Orbit of i under the modular group: enumeration, visibility, "
                 "circle counts, and orchard problems"};
    app.require_subcommand(1);

    EnumerateCmd enumerate_cmd;
    {
        auto* sub = app.add_subcommand("enumerate",
                                       "list orbit points inside a circle (basepoint omitted)");
        enumerate_cmd.radius.attach(sub);
        sub->add_option("--format", enumerate_cmd.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        add_output_option(sub, enumerate_cmd.output);
        sub->callback([&] { enumerate_cmd.run(); });
    }

    ClassifyCmd classify_cmd;
    {
        auto* sub = app.add_subcommand("classify", "full report for one point");
        sub->add_option("point", classify_cmd.point_text, "point as \"(B+i)/D\" or \"B/D\"")
            ->required();
        add_output_option(sub, classify_cmd.output);
        sub->callback([&] { classify_cmd.run(); });
    }

    VisibleCmd visible_cmd;
    {
        auto* sub = app.add_subcommand("visible", "visibility of one point");
        sub->add_option("point", visible_cmd.point_text, "point as \"(B+i)/D\" or \"B/D\"")
            ->required();
        add_output_option(sub, visible_cmd.output);
        sub->callback([&] { visible_cmd.run(); });
    }

    CountCmd count_cmd;
    {
        auto* sub = app.add_subcommand("count", "visible/invisible circle counts");
        sub->add_option("--x", count_cmd.xs, "comma-separated list of x = e^R")->delimiter(',');
        sub->add_option("--exact-trace", count_cmd.traces, "comma-separated list of trace caps")
            ->delimiter(',');
        sub->add_option("--format", count_cmd.format, "table (2-decimal), csv, or json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        add_output_option(sub, count_cmd.output);
        sub->callback([&] { count_cmd.run(); });
    }

    DeltaCmd delta_cmd;
    {
        auto* sub = app.add_subcommand("delta", "normalized remainder series");
        sub->add_option("--x-max", delta_cmd.x_max, "series endpoint")->required();
        sub->add_option("--samples", delta_cmd.samples, "grid size (default 100)");
        sub->add_flag("--linear", delta_cmd.linear, "equal steps in x instead of log x");
        sub->add_flag("--mean", delta_cmd.mean, "print the running-mean diagnostic instead");
        add_output_option(sub, delta_cmd.output);
        sub->callback([&] { delta_cmd.run(); });
    }

    OrchardMinCmd orchard_min_cmd;
    {
        auto* sub = app.add_subcommand("orchard-min", "smallest pairwise eclipse threshold");
        orchard_min_cmd.radius.attach(sub);
        sub->add_option("--format", orchard_min_cmd.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        add_output_option(sub, orchard_min_cmd.output);
        sub->callback([&] { orchard_min_cmd.run(); });
    }

    OrchardFibCmd orchard_fib_cmd;
    {
        auto* sub = app.add_subcommand("orchard-fib",
                                       "Fibonacci sharpness pair (n between 1 and 7: larger "
                                       "indices overflow 63-bit Gram entries)");
        sub->add_option("--n", orchard_fib_cmd.n, "pair index, 1..7")->required();
        add_output_option(sub, orchard_fib_cmd.output);
        sub->callback([&] { orchard_fib_cmd.run(); });
    }

    OrchardBlockCmd orchard_block_cmd;
    {
        auto* sub = app.add_subcommand("orchard-block", "are all far directions blocked?");
        orchard_block_cmd.opt_eps =
            sub->add_option("--eps", orchard_block_cmd.eps, "disk radius (hyperbolic)");
        orchard_block_cmd.opt_sinh = sub->add_option(
            "--sinh-eps", orchard_block_cmd.sinh_eps_text, "sinh of the disk radius, as a decimal");
        orchard_block_cmd.opt_eps->excludes(orchard_block_cmd.opt_sinh);
        sub->add_option("--exact-trace", orchard_block_cmd.max_trace,
                        "trace cap of the blocking set (default 3)");
        sub->add_option("--far-factor", orchard_block_cmd.far_factor,
                        "sweep orbit points up to this multiple of the cap (default 4)");
        sub->add_option("--axis-max", orchard_block_cmd.axis_max,
                        "axis-hugging family size (default 1000)");
        add_output_option(sub, orchard_block_cmd.output);
        sub->callback([&] { orchard_block_cmd.run(); });
    }

    EuclidCmd euclid_cmd;
    {
        auto* sub = app.add_subcommand("euclid", "Euclidean coprime-pair count in a disk");
        sub->add_option("--radius", euclid_cmd.radius, "disk radius")->required();
        sub->add_option("--format", euclid_cmd.format, "plain or json")
            ->check(CLI::IsMember({"plain", "json"}));
        add_output_option(sub, euclid_cmd.output);
        sub->callback([&] { euclid_cmd.run(); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const arithmetic_overflow& e) {
        std::fprintf(stderr, "overflow: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}

}  // namespace hypvis
