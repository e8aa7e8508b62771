#include "upper_envelope/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "upper_envelope/io/csv.hpp"
#include "upper_envelope/io/document.hpp"
#include "upper_envelope/io/format.hpp"
#include "upper_envelope/io/svg.hpp"
#include "upper_envelope/oracle.hpp"
#include "upper_envelope/query.hpp"

namespace uenv::cli {

namespace {

/// A failed command: exit code plus the message for stderr.
struct Failure {
    int code;
    std::string message;
};

std::optional<Point2> parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return std::nullopt;
    Point2 p;
    if (!io::parse_real(std::string_view(text).substr(0, comma), p.x) ||
        !io::parse_real(std::string_view(text).substr(comma + 1), p.y)) {
        return std::nullopt;
    }
    return p;
}

double parse_value(const std::string& text, const char* flag, int code) {
    double v = 0.0;
    if (!io::parse_real(text, v)) throw Failure{code, std::string(flag) + " is not a number"};
    if (!std::isfinite(v)) throw Failure{code, std::string(flag) + " must be finite"};
    return v;
}

io::LoadedEnvelope load(const std::string& path) {
    try {
        return io::load_envelope(io::read_document_file(path));
    } catch (const io::DocumentError& e) {
        throw Failure{kBadInput, path + ": " + e.what()};
    }
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{kUnwritable, "cannot write " + path};
    out << contents;
    out.flush();
    if (!out) throw Failure{kUnwritable, "cannot write " + path};
}

struct BuildArgs {
    std::string input, output, radius = "1", direction = "0,1";
};

void cmd_build(const BuildArgs& a, std::ostream& out) {
    double radius = 0.0;
    if (!io::parse_real(a.radius, radius)) throw Failure{kBadFrame, "--radius is not a number"};
    const auto direction = parse_pair(a.direction);
    if (!direction) throw Failure{kBadFrame, "--direction must be dx,dy"};
    try {
        (void)make_frame(radius, *direction);
    } catch (const InvalidFrame& e) {
        throw Failure{kBadFrame, e.what()};
    }

    std::vector<Point2> points;
    try {
        points = io::read_points_file(a.input);
    } catch (const io::CsvError& e) {
        throw Failure{kBadInput, a.input + ": " + e.what()};
    } catch (const std::runtime_error& e) {
        throw Failure{kBadInput, e.what()};
    }

    const io::BuiltDocument built = io::build_document(points, radius, *direction);
    write_file(a.output, io::serialize(built.document));
    std::size_t contributing = 0;
    for (const Segment& s : built.document.segments) contributing += s.circles.size();
    out << "segments " << built.document.segments.size() << '\n'
        << "contributing " << contributing << '\n';
}

struct EvalArgs {
    std::string envelope, at;
    bool oracle = false;
};

void cmd_eval(const EvalArgs& a, std::ostream& out) {
    const io::LoadedEnvelope loaded = load(a.envelope);
    const double at = parse_value(a.at, "--at", kBadValue);
    const double r = loaded.frame.radius();
    const double x = at / r;

    const QueryResult q = evaluate(loaded.envelope, x);
    out << (q.defined ? io::format_real(q.y * r) : "none") << '\n';
    if (a.oracle) {
        const auto ref = oracle::brute_force_evaluate(loaded.envelope.circles(), x);
        out << "oracle " << (ref ? io::format_real(*ref * r) : "none") << '\n';
        if (ref && q.defined) {
            out << "difference " << io::format_real(std::abs(*ref - q.y) * r) << '\n';
        } else if (ref.has_value() != q.defined) {
            out << "difference defined-mismatch\n";
        }
    }
}

struct SampleArgs {
    std::string envelope, from, to, step, output;
};

void cmd_sample(const SampleArgs& a, std::ostream& out) {
    const io::LoadedEnvelope loaded = load(a.envelope);
    const double from = parse_value(a.from, "--from", kBadValue);
    const double to = parse_value(a.to, "--to", kBadValue);
    const double step = parse_value(a.step, "--step", kBadValue);
    std::vector<double> grid;
    try {
        grid = sample_grid(from, to, step);
    } catch (const InvalidRange& e) {
        throw Failure{kBadValue, e.what()};
    }

    const double r = loaded.frame.radius();
    std::ostringstream csv;
    for (double s : grid) {
        const QueryResult q = evaluate(loaded.envelope, s / r);
        csv << io::format_real(s) << ',';
        if (q.defined) csv << io::format_real(q.y * r);
        csv << '\n';
    }
    if (a.output.empty()) {
        out << csv.str();
    } else {
        write_file(a.output, csv.str());
    }
}

struct PlotArgs {
    std::string envelope, input, output, width = "800", height = "400";
};

void cmd_plot(const PlotArgs& a) {
    const io::LoadedEnvelope loaded = load(a.envelope);
    io::PlotOptions options;
    const double w = parse_value(a.width, "--width", kBadValue);
    const double h = parse_value(a.height, "--height", kBadValue);
    if (w != std::floor(w) || h != std::floor(h) || w < 1 || h < 1 ||
        w > io::kMaxPlotDimension || h > io::kMaxPlotDimension) {
        throw Failure{kBadValue, "--width/--height must be integers in [1, " +
                                     std::to_string(io::kMaxPlotDimension) + "]"};
    }
    options.width = static_cast<int>(w);
    options.height = static_cast<int>(h);

    std::vector<Point2> circles;
    if (a.input.empty()) {
        for (const UnitCircle& c : loaded.envelope.circles()) {
            circles.push_back(loaded.frame.from_canonical(c.center));
        }
    } else {
        try {
            circles = io::read_points_file(a.input);
        } catch (const io::CsvError& e) {
            throw Failure{kBadInput, a.input + ": " + e.what()};
        } catch (const std::runtime_error& e) {
            throw Failure{kBadInput, e.what()};
        }
    }
    write_file(a.output, io::render_plot(circles, loaded.envelope, loaded.frame, options));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Upper envelope of a union of equal-radius circles"};
    app.require_subcommand(1);

    BuildArgs build;
    auto* b = app.add_subcommand("build", "Build an envelope document from CSV centers");
    b->add_option("--input", build.input, "CSV of x,y circle centers")->required();
    b->add_option("--output", build.output, "Envelope document to write")->required();
    b->add_option("--radius", build.radius, "Common circle radius")->capture_default_str();
    b->add_option("--direction", build.direction, "Extremal direction dx,dy")
        ->capture_default_str();

    EvalArgs eval;
    auto* e = app.add_subcommand("eval", "Evaluate the boundary at one position");
    e->add_option("envelope", eval.envelope, "Envelope document")->required();
    e->add_option("--at", eval.at, "Lateral position (world units)")->required();
    e->add_flag("--oracle", eval.oracle, "Also print the brute-force value");

    SampleArgs samp;
    auto* s = app.add_subcommand("sample", "Evaluate the boundary on a regular grid");
    s->add_option("envelope", samp.envelope, "Envelope document")->required();
    s->add_option("--from", samp.from)->required();
    s->add_option("--to", samp.to)->required();
    s->add_option("--step", samp.step)->required();
    s->add_option("--output", samp.output, "CSV to write (default: stdout)");

    PlotArgs plot;
    auto* p = app.add_subcommand("plot", "Write an SVG of the circles and their envelope");
    p->add_option("envelope", plot.envelope, "Envelope document")->required();
    p->add_option("--input", plot.input, "CSV of all circle centers (default: document table)");
    p->add_option("--output", plot.output, "SVG to write")->required();
    p->add_option("--width", plot.width)->capture_default_str();
    p->add_option("--height", plot.height)->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& ex) {
        return app.exit(ex, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*b) cmd_build(build, out);
        if (*e) cmd_eval(eval, out);
        if (*s) cmd_sample(samp, out);
        if (*p) cmd_plot(plot);
    } catch (const Failure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    }
    return kOk;
}

}  // namespace uenv::cli
