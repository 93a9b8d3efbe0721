#include "tricomplex/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "tricomplex/io.hpp"
#include "tricomplex/raster.hpp"
#include "tricomplex/realroots.hpp"
#include "tricomplex/sets.hpp"
#include "tricomplex/verify.hpp"

namespace tricomplex::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* flag) {
    std::vector<double> values;
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view token = rest.substr(0, comma);
        double v = 0.0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || end != token.data() + token.size() || token.empty()) {
            throw UsageError(std::string("malformed ") + flag + " '" + text + "'");
        }
        values.push_back(v);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (values.size() != expected) {
        throw UsageError(std::string(flag) + " needs " + std::to_string(expected) + " comma-separated values");
    }
    return values;
}

struct RenderFlags {
    int power = 3;
    std::string window;
    std::uint32_t res = 0;
    std::uint32_t max_iter = 1000;
    std::string out;
    unsigned threads = 0;
};

void add_render_flags(CLI::App* cmd, RenderFlags& f, const char* window_help) {
    cmd->add_option("--power", f.power, "Power p of eta^p + c")->check(CLI::Range(2, 64))->capture_default_str();
    cmd->add_option("--window", f.window, window_help)->capture_default_str();
    cmd->add_option("--res", f.res, "Cells per axis")->check(CLI::Range(2U, 1U << 16))->capture_default_str();
    cmd->add_option("--max-iter", f.max_iter, "Iteration budget")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--out", f.out, "Output file")->required();
    cmd->add_option("--threads", f.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
}

Window2D window2d(const RenderFlags& f) {
    const auto v = parse_list(f.window, 4, "--window");
    try {
        return Window2D::make(v[0], v[1], v[2], v[3], f.res, f.res);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Window3D window3d(const RenderFlags& f) {
    const auto v = parse_list(f.window, 6, "--window");
    try {
        return Window3D::make(v[0], v[1], v[2], v[3], v[4], v[5], f.res, f.res, f.res);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

SliceSpec parse_slice(const std::string& axes) {
    try {
        return SliceSpec::parse(axes);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

int verify_exit_code(const std::vector<CheckRow>& rows) { return all_pass(rows) ? kExitOk : kExitVerifyFailed; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tricomplex Multibrot, Hyperbrot and Perplexbrot toolkit", "tricomplex"};
    app.require_subcommand(1);

    RenderFlags plane{3, "-1.5,1.5,-1.5,1.5", 1024, 1000, "", 0};
    auto* multibrot = app.add_subcommand("multibrot", "Render M^p in the complex plane C(i1) to PPM");
    add_render_flags(multibrot, plane, "XLO,XHI,YLO,YHI");
    auto* hyperbrot = app.add_subcommand("hyperbrot", "Render H^p in the hyperbolic plane D(j1) to PPM");
    add_render_flags(hyperbrot, plane, "XLO,XHI,YLO,YHI");

    RenderFlags volume{3, "-1,1,-1,1,-1,1", 128, 1000, "", 0};
    std::string obj_path;
    std::string axes;
    auto* perplexbrot = app.add_subcommand("perplexbrot", "Voxelize the slice T(1,j1,j2) to VOX");
    add_render_flags(perplexbrot, volume, "XLO,XHI,YLO,YHI,ZLO,ZHI");
    perplexbrot->add_option("--obj", obj_path, "Also write the analytic octahedron as OBJ (odd p)");
    auto* slice = app.add_subcommand("slice", "Voxelize a principal 3D slice to VOX");
    add_render_flags(slice, volume, "XLO,XHI,YLO,YHI,ZLO,ZHI");
    slice->add_option("--axes", axes, "Three distinct units from 1,i1,i2,i3,i4,j1,j2,j3")->required();

    int root_power = 3;
    double root_c = 0.0;
    auto* roots = app.add_subcommand("roots", "Real roots of x^p - x + c as CSV");
    roots->add_option("--power", root_power, "Odd power p > 2")->capture_default_str();
    roots->add_option("--c", root_c, "Constant c")->required();

    std::string suite = "all";
    std::string report_path;
    unsigned verify_threads = 0;
    auto* verify = app.add_subcommand("verify", "Run self-check suites; CSV report");
    verify->add_option("--suite", suite, "algebra|roots|dynamics|sets|raster|all")
        ->check(CLI::IsMember({"algebra", "roots", "dynamics", "sets", "raster", "all"}))
        ->capture_default_str();
    verify->add_option("--out", report_path, "CSV report path (stdout when omitted)");
    verify->add_option("--threads", verify_threads, "Worker threads for raster checks");

    std::vector<const char*> argv{"tricomplex"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (multibrot->parsed() || hyperbrot->parsed()) {
            const Window2D w = window2d(plane);
            const PlaneKind kind = multibrot->parsed() ? PlaneKind::MultibrotComplex : PlaneKind::Hyperbrot;
            write_ppm(scan2d(kind, plane.power, w, plane.max_iter, {plane.threads}), plane.out);
        } else if (perplexbrot->parsed() || slice->parsed()) {
            const Window3D w = window3d(volume);
            const SliceSpec s = slice->parsed() ? parse_slice(axes) : SliceSpec(Unit::One, Unit::J1, Unit::J2);
            std::optional<OctahedronSpec> octahedron;
            if (perplexbrot->parsed() && !obj_path.empty()) {
                if (volume.power % 2 == 0) throw UsageError("--obj needs an odd power");
                octahedron = OctahedronSpec::perplexbrot(volume.power);
            }
            write_vox(scan3d(s, volume.power, w, volume.max_iter, {volume.threads}), volume.out);
            if (octahedron) write_octahedron_obj(*octahedron, obj_path);
        } else if (roots->parsed()) {
            RootReport report;
            try {
                report = classify(root_power, root_c);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            CsvWriter csv({"value", "multiplicity", "bracket_lo", "bracket_hi"});
            for (const Root& r : report.roots) {
                csv.add_row({format_fixed(r.value), std::to_string(r.multiplicity), format_fixed(r.bracket.lo),
                             format_fixed(r.bracket.hi)});
            }
            out << csv.str();
            err << "regime: " << regime_name(report.regime) << '\n';
        } else if (verify->parsed()) {
            const auto rows = run_suite(suite, verify_threads);
            const CsvWriter csv = to_csv(rows);
            if (report_path.empty()) {
                out << csv.str();
            } else {
                csv.write(report_path);
            }
            std::size_t failed = 0;
            for (const CheckRow& row : rows) failed += row.pass ? 0 : 1;
            err << rows.size() - failed << "/" << rows.size() << " checks passed\n";
            return verify_exit_code(rows);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace tricomplex::cli
