#pragma once

/**
 * Scene files: JSON documents describing a curve, Hermite control points and
 * tessellation settings. The schema is strict; unknown keys are rejected with
 * the path of the offending key. Every real-valued field accepts either a
 * JSON number or a constant expression string such as "sqrt(3)*pi/4".
 *
 * See docs/scene-format.md for the full schema.
 */

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "curve.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "hermite.hpp"
#include "pencil.hpp"
#include "tolerances.hpp"

namespace isoasym {

struct GridConfig {
    std::size_t nu = 100;
    std::size_t nv = 25;
    Interval omega_range;
    Interval eta_range;
};

struct FactorConfig {
    std::optional<Expr> k, m, n;
};

struct SceneConfig {
    ParamCurve curve = ParamCurve::circle(1, {0, 1});
    HermiteData data;
    Interval eta_domain;
    GridConfig grid;
    FactorConfig factors;
    Tolerances tolerances;
    std::optional<double> inject_c1; ///< test-only: adds a linear Z term
};

namespace detail {

using nlohmann::json;

inline std::string key_path(const std::string& base, const std::string& key)
{
    return base.empty() ? key : base + "." + key;
}

inline void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed)
{
    if (!obj.is_object())
        throw ConfigError(path, "expected an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [k, v] : obj.items())
        if (!ok.count(k))
            throw ConfigError(key_path(path, k), "unknown key");
}

inline const json& require(const json& obj, const std::string& path, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        throw ConfigError(key_path(path, key), "missing required key");
    return *it;
}

inline double read_real(const json& v, const std::string& path)
{
    if (v.is_number())
        return v.get<double>();
    if (v.is_string()) {
        try {
            return eval_constant(v.get<std::string>());
        } catch (const Error& e) {
            throw ConfigError(path, e.what());
        }
    }
    throw ConfigError(path, "expected a number or constant expression string");
}

inline std::size_t read_count(const json& v, const std::string& path)
{
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ConfigError(path, "expected a non-negative integer");
    return v.get<std::size_t>();
}

inline Interval read_interval(const json& v, const std::string& path)
{
    if (!v.is_array() || v.size() != 2)
        throw ConfigError(path, "expected [lo, hi]");
    Interval r{read_real(v[0], path + "[0]"), read_real(v[1], path + "[1]")};
    if (r.degenerate())
        throw ConfigError(path, "interval must satisfy lo < hi");
    return r;
}

inline Expr read_expr(const json& v, const std::string& path)
{
    if (!v.is_string())
        throw ConfigError(path, "expected an expression string");
    try {
        return parse_expr(v.get<std::string>());
    } catch (const Error& e) {
        throw ConfigError(path, e.what());
    }
}

inline ParamCurve read_curve(const json& c)
{
    const std::string path = "curve";
    if (!c.is_object())
        throw ConfigError(path, "expected an object");
    const json& type = require(c, path, "type");
    if (!type.is_string())
        throw ConfigError(path + ".type", "expected a string");
    const std::string t = type.get<std::string>();
    const Interval domain = read_interval(require(c, path, "domain"), path + ".domain");

    if (t == "helix") {
        check_keys(c, path, {"type", "domain", "a", "b"});
        return ParamCurve::helix(read_real(require(c, path, "a"), path + ".a"),
                                 read_real(require(c, path, "b"), path + ".b"), domain);
    }
    if (t == "circle") {
        check_keys(c, path, {"type", "domain", "r"});
        return ParamCurve::circle(read_real(require(c, path, "r"), path + ".r"), domain);
    }
    if (t == "expr") {
        check_keys(c, path, {"type", "domain", "x", "y", "z"});
        return ParamCurve(read_expr(require(c, path, "x"), path + ".x"), read_expr(require(c, path, "y"), path + ".y"),
                          read_expr(require(c, path, "z"), path + ".z"), domain);
    }
    throw ConfigError(path + ".type", "expected one of helix, circle, expr; got '" + t + "'");
}

} // namespace detail

inline SceneConfig parse_scene(const nlohmann::json& root)
{
    using namespace detail;
    check_keys(root, "", {"curve", "eta0", "points", "eta_domain", "grid", "factors", "tolerances", "test_inject_c1"});

    SceneConfig s;
    s.curve = read_curve(require(root, "", "curve"));
    if (auto it = root.find("eta0"); it != root.end())
        s.data.eta0 = read_real(*it, "eta0");

    if (auto it = root.find("points"); it != root.end()) {
        if (!it->is_array())
            throw ConfigError("points", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& p = (*it)[i];
            const std::string path = "points[" + std::to_string(i) + "]";
            check_keys(p, path, {"A", "omega", "eta"});
            const json& a = require(p, path, "A");
            if (!a.is_array() || a.size() != 3)
                throw ConfigError(path + ".A", "expected [x, y, z]");
            ControlPoint cp;
            cp.A = {read_real(a[0], path + ".A[0]"), read_real(a[1], path + ".A[1]"), read_real(a[2], path + ".A[2]")};
            cp.omega = read_real(require(p, path, "omega"), path + ".omega");
            cp.eta = read_real(require(p, path, "eta"), path + ".eta");
            s.data.points.push_back(cp);
        }
    }

    if (auto it = root.find("eta_domain"); it != root.end()) {
        s.eta_domain = read_interval(*it, "eta_domain");
    } else {
        double lo = std::min(0.0, s.data.eta0), hi = s.data.eta0;
        for (const auto& p : s.data.points) {
            lo = std::min(lo, p.eta);
            hi = std::max(hi, p.eta);
        }
        if (!(hi > lo))
            hi = lo + 1;
        s.eta_domain = {lo, hi};
    }
    if (!s.eta_domain.contains(s.data.eta0))
        throw ConfigError("eta0", "lies outside eta_domain");

    s.grid.omega_range = s.curve.domain();
    s.grid.eta_range = s.eta_domain;
    if (auto it = root.find("grid"); it != root.end()) {
        check_keys(*it, "grid", {"nu", "nv", "omega_range", "eta_range"});
        if (auto g = it->find("nu"); g != it->end())
            s.grid.nu = read_count(*g, "grid.nu");
        if (auto g = it->find("nv"); g != it->end())
            s.grid.nv = read_count(*g, "grid.nv");
        if (auto g = it->find("omega_range"); g != it->end())
            s.grid.omega_range = read_interval(*g, "grid.omega_range");
        if (auto g = it->find("eta_range"); g != it->end())
            s.grid.eta_range = read_interval(*g, "grid.eta_range");
        if (s.grid.nu < 2 || s.grid.nv < 2)
            throw ConfigError("grid", "nu and nv must be at least 2");
    }

    if (auto it = root.find("factors"); it != root.end()) {
        check_keys(*it, "factors", {"k", "m", "n"});
        if (auto f = it->find("k"); f != it->end())
            s.factors.k = read_expr(*f, "factors.k");
        if (auto f = it->find("m"); f != it->end())
            s.factors.m = read_expr(*f, "factors.m");
        if (auto f = it->find("n"); f != it->end())
            s.factors.n = read_expr(*f, "factors.n");
    }

    if (auto it = root.find("tolerances"); it != root.end()) {
        check_keys(*it, "tolerances", {"eps_kappa", "eps_b", "h_fd"});
        auto positive = [](double v, const std::string& path) {
            if (!(v > 0))
                throw ConfigError(path, "must be positive");
            return v;
        };
        if (auto t = it->find("eps_kappa"); t != it->end())
            s.tolerances.eps_kappa = positive(read_real(*t, "tolerances.eps_kappa"), "tolerances.eps_kappa");
        if (auto t = it->find("eps_b"); t != it->end())
            s.tolerances.eps_b = positive(read_real(*t, "tolerances.eps_b"), "tolerances.eps_b");
        if (auto t = it->find("h_fd"); t != it->end())
            s.tolerances.h_fd = positive(read_real(*t, "tolerances.h_fd"), "tolerances.h_fd");
    }

    if (auto it = root.find("test_inject_c1"); it != root.end())
        s.inject_c1 = read_real(*it, "test_inject_c1");
    return s;
}

inline SceneConfig parse_scene_text(const std::string& text)
{
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
    return parse_scene(root);
}

inline SceneConfig load_scene(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("", "cannot open scene file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scene_text(ss.str());
}

/// The pencil described by a scene for a given marching scale: attaches the
/// scene's factor functions and the test-only linear Z term.
inline SurfacePencil scene_pencil(const SceneConfig& s, const MarchingScale& solved)
{
    MarchingScale ms = solved.with_factors(s.factors.k, s.factors.m, s.factors.n);
    if (s.inject_c1)
        ms = ms.unchecked_with_linear_z(*s.inject_c1);
    return SurfacePencil(s.curve, ms, s.eta_domain, s.tolerances);
}

/// Coefficient artifact written by `solve`.
inline nlohmann::json coefficients_json(const MarchingScale& ms)
{
    return {{"format", "isoasym-coefficients/1"},
            {"eta0", ms.eta0()},
            {"a", ms.a()},
            {"b", ms.b()},
            {"c", ms.c()},
            {"c_first_power", 2}};
}

inline MarchingScale coefficients_from_json(const nlohmann::json& j)
{
    using namespace detail;
    check_keys(j, "", {"format", "eta0", "a", "b", "c", "c_first_power"});
    if (require(j, "", "format") != "isoasym-coefficients/1")
        throw ConfigError("format", "unsupported coefficient format");
    if (auto it = j.find("c_first_power"); it != j.end() && *it != 2)
        throw ConfigError("c_first_power", "must be 2");
    auto vec = [&](const char* key) {
        const json& v = require(j, "", key);
        if (!v.is_array())
            throw ConfigError(key, "expected an array");
        std::vector<double> out;
        for (std::size_t i = 0; i < v.size(); ++i)
            out.push_back(read_real(v[i], std::string(key) + "[" + std::to_string(i) + "]"));
        return out;
    };
    return MarchingScale(read_real(require(j, "", "eta0"), "eta0"), vec("a"), vec("b"), vec("c"));
}

} // namespace isoasym
