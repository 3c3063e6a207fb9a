#include "transurf/csv.hpp"
#include "transurf/error.hpp"
#include "transurf/fixtures.hpp"
#include "transurf/mesh_io.hpp"
#include "transurf/pipeline.hpp"
#include "transurf/version.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace transurf;

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
    f << content;
}

void print_checks(const VerificationReport& report) {
    for (const auto& [name, check] : report.checks)
        std::printf("  %-22s max %-13.6g tol %-10.4g %s\n", name.c_str(), check.max,
                    check.tolerance, check.pass ? "pass" : "FAIL");
    for (const auto& flag : report.flags) std::printf("  note: %s\n", flag.c_str());
    std::printf("overall: %s\n", report.pass() ? "pass" : "FAIL");
}

MeshFormat parse_format(const std::string& name) {
    if (name == "obj") return MeshFormat::Obj;
    if (name == "ply") return MeshFormat::Ply;
    throw Error(ErrorCode::IoError, "unknown mesh format \"" + name + "\"");
}

int cmd_construct(const std::vector<double>& roots, const std::vector<double>& coeffs,
                  double y0, std::pair<double, double> span, double step,
                  std::size_t grid_n, bool has_w0, double w0,
                  const std::string& out_dir, const std::string& format,
                  bool no_timestamp) {
    ConstructOptions opt;
    if (!roots.empty())
        opt.moduli = coefficients_from_roots(roots[0], roots[1], roots[2]);
    else
        opt.moduli = roots_from_coefficients(coeffs[0], coeffs[1], coeffs[2]);
    opt.y0 = y0;
    opt.span = span;
    opt.step = step;
    opt.grid_n = grid_n;
    if (has_w0) opt.w0 = w0;

    if (is_double_root(opt.moduli))
        std::printf("double root detected: constructing the circular helix\n");

    ConstructResult result = run_construction(opt);
    result.report.timestamp = utc_timestamp();

    const auto [y_low, y_high] = equilibria(result.moduli);
    std::printf("moduli: c = (%.17g, %.17g, %.17g)\n", result.moduli.c1,
                result.moduli.c2, result.moduli.c3);
    std::printf("roots:  (%.17g, %.17g, %.17g)%s\n", result.moduli.roots[0],
                result.moduli.roots[1], result.moduli.roots[2],
                result.moduli.mirrored ? " [mirrored]" : "");
    std::printf("equilibria: (%.17g, %.17g)\n", y_low, y_high);

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    write_profile_csv(result.profile, (dir / "profile.csv").string());
    write_curve_csv(result.curve, (dir / "curve.csv").string());
    write_surface_csv(result.surface, (dir / "surface.csv").string());
    const MeshFormat mesh_format = parse_format(format);
    const std::string mesh_name =
        mesh_format == MeshFormat::Obj ? "surface.obj" : "surface.ply";
    const MeshStats stats =
        export_mesh(result.surface, (dir / mesh_name).string(), mesh_format);
    write_text((dir / "report.json").string(),
               result.report.to_json(!no_timestamp));

    std::printf("mesh: %zu vertices, %zu triangles", stats.vertices, stats.triangles);
    if (stats.skipped_cells > 0)
        std::printf(" (%zu cells skipped at degenerate nodes)", stats.skipped_cells);
    std::printf("\nwrote %s/{profile,curve,surface}.csv, %s, report.json\n",
                out_dir.c_str(), mesh_name.c_str());
    print_checks(result.report);
    return result.report.pass() ? 0 : 1;
}

int cmd_verify(const std::string& input, const std::string& out_path,
               bool no_timestamp) {
    const CurveFile file = read_curve_csv(input);
    VerificationReport report = verify_curve_file(file);
    report.timestamp = utc_timestamp();
    const std::string json = report.to_json(!no_timestamp);
    if (out_path.empty())
        std::fputs(json.c_str(), stdout);
    else
        write_text(out_path, json);
    print_checks(report);
    return report.pass() ? 0 : 1;
}

int cmd_export(const std::string& input, const std::string& out_path,
               const std::string& format) {
    const TranslationSurface surf = read_surface_csv(input);
    const MeshStats stats = export_mesh(surf, out_path, parse_format(format));
    std::printf("%s: %zu vertices, %zu triangles", out_path.c_str(), stats.vertices,
                stats.triangles);
    if (stats.skipped_cells > 0)
        std::printf(" (%zu cells skipped at degenerate nodes)", stats.skipped_cells);
    std::printf("\n");
    return 0;
}

int cmd_fixture(const std::string& name, std::size_t grid_n,
                const std::string& out_dir, const std::string& format,
                bool no_timestamp) {
    TranslationSurface surf;
    // Dense copies of the generators for the CSV export; the surface grid
    // is too coarse for downstream stencil-based verification.
    SpaceCurve alpha_dense, beta_dense;
    double h_tol = 1e-10;
    nlohmann::ordered_json inputs;
    inputs["fixture"] = name;
    inputs["grid"] = {grid_n, grid_n};

    if (name == "plane") {
        surf = plane_surface(Vec3(1, 0, 0), Vec3(0, 1, 0), grid_n);
        alpha_dense = straight_line(Vec3(1, 0, 0), {0.0, 1.0}, 1e-3);
        beta_dense = straight_line(Vec3(0, 1, 0), {0.0, 1.0}, 1e-3);
    } else if (name == "helicoid") {
        surf = helicoid_surface(grid_n);
        alpha_dense = circular_helix(0.5, 0.5, {0.0, 2.0}, 1e-3);
        beta_dense = circular_helix(0.5, 0.5, {2.2, 4.2}, 1e-3);
    } else if (name.rfind("scherk", 0) == 0) {
        ScherkParams params;
        if (name != "scherk") {
            const auto first = name.find(':');
            const auto second = name.find(':', first + 1);
            if (first == std::string::npos || second == std::string::npos)
                throw Error(ErrorCode::ParseError,
                            "fixture syntax: scherk:<c>:<theta>");
            try {
                params.c = std::stod(name.substr(first + 1, second - first - 1));
                params.theta = std::stod(name.substr(second + 1));
            } catch (const std::exception&) {
                throw Error(ErrorCode::ParseError,
                            "fixture syntax: scherk:<c>:<theta>");
            }
        }
        inputs["c"] = params.c;
        inputs["theta"] = params.theta;
        surf = scherk_surface(params, grid_n);
        const double padded = 0.95 * 3.14159265358979323846 / (2.0 * params.c);
        alpha_dense = scherk_generator(params.c, 0.0, -1.0, {-padded, padded}, 6001);
        beta_dense = scherk_generator(params.c, params.theta, +1.0,
                                      {-padded, padded}, 6001);
        h_tol = 1e-6;
    } else {
        throw Error(ErrorCode::ParseError,
                    "unknown fixture \"" + name +
                        "\" (expected plane, helicoid, scherk:<c>:<theta>)");
    }

    VerificationReport report = fixture_report(surf, h_tol, inputs.dump());
    report.timestamp = utc_timestamp();

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    write_curve_csv(alpha_dense, (dir / "alpha.csv").string());
    write_curve_csv(beta_dense, (dir / "beta.csv").string());
    write_surface_csv(surf, (dir / "surface.csv").string());
    const MeshFormat mesh_format = parse_format(format);
    const std::string mesh_name =
        mesh_format == MeshFormat::Obj ? "surface.obj" : "surface.ply";
    export_mesh(surf, (dir / mesh_name).string(), mesh_format);
    write_text((dir / "report.json").string(), report.to_json(!no_timestamp));

    std::printf("wrote %s/{alpha,beta,surface}.csv, %s, report.json\n",
                out_dir.c_str(), mesh_name.c_str());
    print_checks(report);
    return report.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal translation surfaces: construction and verification"};
    app.set_version_flag("--version", transurf::kVersion);
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand(
        "construct", "build a minimal translation surface from a cubic's roots");
    std::vector<double> roots, coeffs;
    auto* roots_opt =
        construct->add_option("--roots", roots, "roots r1 r2 r3 of the cubic")
            ->expected(3);
    auto* coeffs_opt =
        construct->add_option("--coeffs", coeffs, "coefficients c1 c2 c3")
            ->expected(3);
    roots_opt->excludes(coeffs_opt);
    double y0 = 0.0;
    construct->add_option("--y0", y0,
                          "initial curvature, strictly between the equilibria");
    std::vector<double> span_vals{0.0, 20.0};
    construct->add_option("--span", span_vals, "arc-length span")->expected(2);
    double step = 1e-3;
    construct->add_option("--step", step, "integrator step")->capture_default_str();
    std::size_t grid_n = 101;
    construct->add_option("--grid", grid_n, "surface grid size (NxN)")->capture_default_str();
    double w0 = 0.0;
    auto* w0_opt = construct->add_option(
        "--w0", w0, "raw phase origin (default: synchronized with y0)");
    std::string out_dir = "out";
    construct->add_option("--out", out_dir, "output directory")->capture_default_str();
    std::string format = "obj";
    construct->add_option("--format", format, "mesh format: obj or ply")->capture_default_str();
    bool no_timestamp = false;
    construct->add_flag("--no-timestamp", no_timestamp,
                        "omit the timestamp from report.json");

    // verify
    auto* verify = app.add_subcommand("verify", "verify an exported curve CSV");
    std::string verify_input;
    verify->add_option("file", verify_input, "curve CSV file")->required();
    std::string verify_out;
    verify->add_option("--out", verify_out, "report path (default: stdout)");
    bool verify_no_ts = false;
    verify->add_flag("--no-timestamp", verify_no_ts,
                     "omit the timestamp from the report");

    // export
    auto* exp = app.add_subcommand("export", "convert a surface CSV to a mesh");
    std::string export_input, export_out = "surface.obj", export_format = "obj";
    exp->add_option("file", export_input, "surface CSV file")->required();
    exp->add_option("--out", export_out, "mesh output path")->capture_default_str();
    exp->add_option("--format", export_format, "mesh format: obj or ply")->capture_default_str();

    // fixture
    auto* fixture = app.add_subcommand(
        "fixture", "build a closed-form reference surface");
    std::string fixture_name;
    fixture->add_option("name", fixture_name,
                        "plane | helicoid | scherk:<c>:<theta>")
        ->required();
    std::size_t fixture_grid = 41;
    fixture->add_option("--grid", fixture_grid, "grid size (NxN)")->capture_default_str();
    std::string fixture_out = "out";
    fixture->add_option("--out", fixture_out, "output directory")->capture_default_str();
    std::string fixture_format = "obj";
    fixture->add_option("--format", fixture_format, "mesh format: obj or ply")
        ->capture_default_str();
    bool fixture_no_ts = false;
    fixture->add_flag("--no-timestamp", fixture_no_ts,
                      "omit the timestamp from report.json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            if (roots.empty() && coeffs.empty()) {
                std::fprintf(stderr, "construct needs --roots or --coeffs\n");
                return 2;
            }
            if (!construct->count("--y0") && roots.size() + coeffs.size() > 0) {
                // A double root does not need y0; anything else does.
                transurf::Moduli probe =
                    roots.empty()
                        ? transurf::roots_from_coefficients(coeffs[0], coeffs[1],
                                                            coeffs[2])
                        : transurf::coefficients_from_roots(roots[0], roots[1],
                                                            roots[2]);
                if (!transurf::is_double_root(probe)) {
                    std::fprintf(stderr,
                                 "construct needs --y0 strictly between the "
                                 "equilibria\n");
                    return 2;
                }
            }
            return cmd_construct(roots, coeffs, y0,
                                 {span_vals[0], span_vals[1]}, step, grid_n,
                                 w0_opt->count() > 0, w0, out_dir, format,
                                 no_timestamp);
        }
        if (verify->parsed()) return cmd_verify(verify_input, verify_out, verify_no_ts);
        if (exp->parsed()) return cmd_export(export_input, export_out, export_format);
        if (fixture->parsed())
            return cmd_fixture(fixture_name, fixture_grid, fixture_out,
                               fixture_format, fixture_no_ts);
    } catch (const transurf::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.exit_code();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 2;
}
