#pragma once

/**
 * Command-line front end. Each subcommand returns its exit code:
 *
 *   0  success
 *   1  configuration, usage or I/O error
 *   2  geometric failure (no frame, duplicate eta, degenerate tessellation)
 *   3  verify: at least one check out of tolerance
 */

#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "frenet.hpp"
#include "hermite.hpp"
#include "meshio.hpp"
#include "pencil.hpp"
#include "scene.hpp"

namespace isoasym::cli {

enum ExitCode : int { ok = 0, config_error = 1, geometry_error = 2, check_failed = 3 };

/// Pass/fail thresholds applied by `verify`.
struct VerifyLimits {
    double max_e = 1e-5;
    double max_tangency = 1e-8;
    double isoparametric = 1e-12;
    double frenet = 1e-6;
    double interpolation = 1e-10;
    double det_agreement = 1e-10;
};

namespace detail {

inline std::string num(double v)
{
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

// Human-facing: 12 significant digits, rounding noise below 1e-15 shown as 0.
inline std::string pretty(double v)
{
    if (std::fabs(v) < 1e-15)
        v = 0;
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, ptr);
}

inline std::string pretty(const Vec3& v) { return "(" + pretty(v.x) + ", " + pretty(v.y) + ", " + pretty(v.z) + ")"; }

inline std::string pretty(const std::vector<double>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + pretty(v[i]);
    return s + "]";
}

inline void warn_regularity(const SceneConfig& s, std::ostream& err)
{
    const auto issues = check_regularity(s.curve, s.tolerances.eps_reg);
    for (std::size_t i = 0; i < issues.size() && i < 5; ++i)
        err << "warning: curve irregular at w=" << pretty(issues[i].omega) << ": " << issues[i].what << '\n';
    if (issues.size() > 5)
        err << "warning: " << issues.size() - 5 << " more irregular samples\n";
}

inline void warn_speed(const FrenetFrame& f, double omega, std::ostream& err)
{
    if (!f.unit_speed())
        err << "warning: speed " << pretty(f.speed) << " at w=" << pretty(omega)
            << " is not 1; the construction assumes an arc-length parameter\n";
}

inline void warn_points(const SceneConfig& s, std::ostream& err)
{
    for (std::size_t i = 0; i < s.data.points.size(); ++i)
        if (!s.eta_domain.contains(s.data.points[i].eta))
            err << "warning: points[" << i << "].eta lies outside eta_domain\n";
    if (!s.factors.k && !s.factors.m && !s.factors.n)
        return;
    err << "warning: the interpolation solver assumes unit factor functions; scene factors are applied "
           "only when evaluating the pencil\n";
}

} // namespace detail

inline int cmd_frenet(const SceneConfig& s, double omega, std::ostream& out, std::ostream& err)
{
    using detail::pretty;
    detail::warn_regularity(s, err);
    try {
        const FrenetFrame f = frenet_frame(s.curve, omega, s.tolerances);
        const FrenetResidual r = frenet_ode_residual(s.curve, omega, s.tolerances);
        detail::warn_speed(f, omega, err);
        out << "w = " << pretty(omega) << '\n'
            << "V1 = " << pretty(f.V1) << '\n'
            << "V2 = " << pretty(f.V2) << '\n'
            << "V3 = " << pretty(f.V3) << '\n'
            << "kappa = " << pretty(f.kappa) << '\n'
            << "tau = " << pretty(f.tau) << '\n'
            << "speed = " << pretty(f.speed) << '\n'
            << "ode_residual = " << detail::num(r.r1) << ' ' << detail::num(r.r2) << ' ' << detail::num(r.r3) << '\n';
        return ok;
    } catch (const FrameUndefined& e) {
        err << "error: " << e.what() << '\n';
        return geometry_error;
    } catch (const DegenerateCurve& e) {
        err << "error: " << e.what() << '\n';
        return geometry_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return geometry_error;
    }
}

inline int cmd_solve(const SceneConfig& s, const std::optional<std::string>& out_path, std::ostream& out,
                     std::ostream& err)
{
    using detail::pretty;
    if (s.data.points.empty()) {
        err << "error: points: solve needs at least one control point\n";
        return config_error;
    }
    detail::warn_regularity(s, err);
    detail::warn_points(s, err);

    HermiteSolution sol;
    double residual = 0;
    try {
        sol = hermite_solve(s.curve, s.data, s.tolerances);
        const SurfacePencil p(s.curve, sol.scale, s.eta_domain, s.tolerances);
        residual = interpolation_residual(p, s.data);
        for (const auto& pt : s.data.points)
            detail::warn_speed(frenet_frame(s.curve, pt.omega, s.tolerances), pt.omega, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return geometry_error;
    }

    if (sol.regularity_warning)
        out << "WARNING: |b1| below eps_b; the surface normal along the curve is undefined "
               "(RegularityWarning)\n";
    if (sol.max_condition() > condition_warning_threshold)
        out << "WARNING: condition estimate " << pretty(sol.max_condition()) << " exceeds 1e12\n";

    out << "points = " << s.data.points.size() << '\n'
        << "eta0 = " << pretty(sol.scale.eta0()) << '\n'
        << "a = " << pretty(sol.scale.a()) << '\n'
        << "b = " << pretty(sol.scale.b()) << '\n'
        << "c (powers 2..) = " << pretty(sol.scale.c()) << '\n'
        << "interpolation_residual = " << detail::num(residual) << '\n'
        << "det_M1 closed = " << pretty(sol.det_m1_closed) << " lu = " << pretty(sol.det_m1_lu) << '\n'
        << "det_M2 closed = " << pretty(sol.det_m2_closed) << " lu = " << pretty(sol.det_m2_lu) << '\n'
        << "det_relative_disagreement = " << detail::num(sol.det_disagreement()) << '\n'
        << "condition M1 (a) = " << pretty(sol.solve_a.condition) << " M1 (b) = " << pretty(sol.solve_b.condition)
        << " M2 = " << pretty(sol.solve_c.condition) << '\n';

    const std::string doc = coefficients_json(sol.scale).dump(2) + "\n";
    if (out_path) {
        std::ofstream f(*out_path, std::ios::binary);
        if (!(f << doc)) {
            err << "error: cannot write '" << *out_path << "'\n";
            return config_error;
        }
        out << "coefficients written to " << *out_path << '\n';
    } else {
        out << doc;
    }
    return ok;
}

struct VerifyOutcome {
    bool pass = false;
    ValidationReport structural;
    bool asymptotic_checked = false;
    AsymptoticResidual asymptotic;
    double isoparametric = 0;
    double frenet = 0;
    double interpolation = 0;
    double det_disagreement = 0;
    bool regularity_warning = false;
};

/// Full audit of a scene's solved pencil.
inline VerifyOutcome verify_scene(const SceneConfig& s, std::size_t samples, const VerifyLimits& lim = {})
{
    VerifyOutcome v;
    const HermiteSolution sol = hermite_solve(s.curve, s.data, s.tolerances);
    const SurfacePencil p = scene_pencil(s, sol.scale);

    v.structural = validate_isoasymptotic(p.scale(), s.curve.domain(), s.tolerances);
    v.regularity_warning = !v.structural.regular;
    if (v.structural.regular) {
        v.asymptotic = asymptotic_residual(p, samples);
        v.asymptotic_checked = true;
    }
    v.isoparametric = isoparametric_residual(p, samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const double w = samples == 1 ? s.curve.domain().lo : s.curve.domain().sample(i, samples);
        v.frenet = std::max(v.frenet, frenet_ode_residual(s.curve, w, s.tolerances).max());
    }
    v.interpolation = interpolation_residual(p, s.data);
    v.det_disagreement = sol.det_disagreement();

    v.pass = v.structural.isoasymptotic() && v.isoparametric < lim.isoparametric && v.frenet < lim.frenet
             && v.interpolation < lim.interpolation && v.det_disagreement < lim.det_agreement;
    if (v.asymptotic_checked)
        v.pass = v.pass && v.asymptotic.max_e < lim.max_e && v.asymptotic.max_tangency < lim.max_tangency;
    return v;
}

inline int cmd_verify(const SceneConfig& s, std::size_t samples, std::ostream& out, std::ostream& err)
{
    using detail::num;
    if (samples < 2) {
        err << "error: --samples must be at least 2\n";
        return config_error;
    }
    detail::warn_regularity(s, err);
    detail::warn_points(s, err);

    VerifyOutcome v;
    try {
        v = verify_scene(s, samples);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return geometry_error;
    }

    const VerifyLimits lim;
    auto mark = [](bool good) { return good ? "pass" : "FAIL"; };
    out << "[" << mark(v.structural.vanish_at_eta0) << "] U, V, Z vanish at eta0\n"
        << "[" << mark(v.structural.normal_branch) << "] n(w) = 0 or Z'(eta0) = 0 (Z'(eta0) = "
        << num(v.structural.dZ0) << ")\n";
    if (v.asymptotic_checked) {
        out << "[" << mark(v.asymptotic.max_e < lim.max_e) << "] normal curvature along curve max_e = "
            << num(v.asymptotic.max_e) << " (< 1e-5)\n"
            << "[" << mark(v.asymptotic.max_tangency < lim.max_tangency) << "] curve tangent in tangent plane "
            << num(v.asymptotic.max_tangency) << " (< 1e-8)\n";
    } else {
        out << "WARNING: V'(eta0) = 0 (RegularityWarning); the surface normal along the curve is undefined "
               "and the asymptotic check is skipped\n";
    }
    out << "[" << mark(v.isoparametric < lim.isoparametric) << "] isoparametric residual " << num(v.isoparametric)
        << " (< 1e-12)\n"
        << "[" << mark(v.frenet < lim.frenet) << "] Frenet-Serret residual " << num(v.frenet) << " (< 1e-6)\n"
        << "[" << mark(v.interpolation < lim.interpolation) << "] interpolation residual " << num(v.interpolation)
        << " (< 1e-10)\n"
        << "[" << mark(v.det_disagreement < lim.det_agreement) << "] closed-form vs LU determinants "
        << num(v.det_disagreement) << " (< 1e-10)\n";

    out << "--- summary ---\n"
        << "samples=" << samples << '\n'
        << "vanish_at_eta0=" << v.structural.vanish_at_eta0 << '\n'
        << "normal_branch=" << v.structural.normal_branch << '\n'
        << "regular=" << v.structural.regular << '\n'
        << "asymptotic_checked=" << v.asymptotic_checked << '\n'
        << "max_e=" << num(v.asymptotic.max_e) << '\n'
        << "max_tangency=" << num(v.asymptotic.max_tangency) << '\n'
        << "isoparametric_residual=" << num(v.isoparametric) << '\n'
        << "frenet_residual=" << num(v.frenet) << '\n'
        << "interpolation_residual=" << num(v.interpolation) << '\n'
        << "det_disagreement=" << num(v.det_disagreement) << '\n'
        << "status=" << (v.pass ? "pass" : "fail") << '\n';
    return v.pass ? ok : check_failed;
}

inline int cmd_mesh(const SceneConfig& s, const std::string& dir, std::optional<std::size_t> nu,
                    std::optional<std::size_t> nv, std::ostream& out, std::ostream& err)
{
    namespace fs = std::filesystem;
    const std::size_t cols = nu.value_or(s.grid.nu);
    const std::size_t rows = nv.value_or(s.grid.nv);
    if (cols < 2 || rows < 2) {
        err << "error: --nu and --nv must be at least 2\n";
        return config_error;
    }
    detail::warn_regularity(s, err);
    if (s.grid.eta_range.lo < s.eta_domain.lo || s.grid.eta_range.hi > s.eta_domain.hi)
        err << "warning: grid.eta_range extends beyond eta_domain\n";

    Mesh mesh;
    std::string curve_obj;
    try {
        MarchingScale ms;
        if (!s.data.points.empty())
            ms = hermite_solve(s.curve, s.data, s.tolerances).scale;
        else
            ms = MarchingScale(s.data.eta0, {}, {}, {});
        const SurfacePencil p = scene_pencil(s, ms);
        mesh = tessellate(p, s.grid.omega_range, s.grid.eta_range, cols, rows);
        curve_obj = export_curve_polyline(s.curve, s.grid.omega_range, cols);
    } catch (const Error& e) {
        err << "error: tessellation failed: " << e.what() << '\n';
        return geometry_error;
    }

    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path surface_path = fs::path(dir) / "surface.obj";
    const fs::path curve_path = fs::path(dir) / "curve.obj";
    for (const auto& [path, text] : {std::pair{surface_path, export_obj(mesh)}, std::pair{curve_path, curve_obj}}) {
        std::ofstream f(path, std::ios::binary);
        if (!(f << text) || !f.flush()) {
            err << "error: cannot write '" << path.string() << "'\n";
            return config_error;
        }
    }
    out << "surface " << surface_path.string() << ": " << mesh.vertices.size() << " vertices, " << mesh.faces.size()
        << " faces (grid " << mesh.nu << "x" << mesh.nv << ")\n"
        << "curve " << curve_path.string() << ": " << cols << " vertices\n";
    return ok;
}

/// Parses `args` (without the program name) and dispatches.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Surface pencils with an isoasymptotic curve", "isoasym"};
    app.require_subcommand(1);

    std::string config;
    double omega = 0;
    std::optional<std::string> coeff_out;
    std::size_t samples = 256;
    std::string mesh_dir;
    std::optional<std::size_t> nu, nv;

    auto* frenet = app.add_subcommand("frenet", "Frenet apparatus of the scene curve at one parameter");
    frenet->add_option("--config", config, "Scene file")->required();
    frenet->add_option("--omega", omega, "Curve parameter")->required();

    auto* solve = app.add_subcommand("solve", "Solve the Hermite interpolation problem");
    solve->add_option("--config", config, "Scene file")->required();
    solve->add_option("--out", coeff_out, "Coefficient file to write");

    auto* verify = app.add_subcommand("verify", "Audit the isoasymptotic conditions of the solved pencil");
    verify->add_option("--config", config, "Scene file")->required();
    verify->add_option("--samples", samples, "Samples along the curve");

    auto* mesh = app.add_subcommand("mesh", "Write surface and curve OBJ files");
    mesh->add_option("--config", config, "Scene file")->required();
    mesh->add_option("--out", mesh_dir, "Output directory")->required();
    mesh->add_option("--nu", nu, "Grid samples in w");
    mesh->add_option("--nv", nv, "Grid samples in eta");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return config_error;
    }

    SceneConfig scene;
    try {
        scene = load_scene(config);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return config_error;
    }

    if (*frenet)
        return cmd_frenet(scene, omega, out, err);
    if (*solve)
        return cmd_solve(scene, coeff_out, out, err);
    if (*verify)
        return cmd_verify(scene, samples, out, err);
    return cmd_mesh(scene, mesh_dir, nu, nv, out, err);
}

} // namespace isoasym::cli
