#pragma once

// Grid tessellation of surface pencils and a Wavefront OBJ subset
// (`#` comments, `v`, `f`, `l` records).

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "curve.hpp"
#include "errors.hpp"
#include "pencil.hpp"
#include "vec3.hpp"

namespace isoasym {

struct Mesh {
    using Face = std::array<std::uint32_t, 3>;

    std::vector<Vec3> vertices;
    std::vector<Face> faces;
    std::size_t nu = 0; ///< grid columns (w direction); 0 when not grid-built
    std::size_t nv = 0; ///< grid rows (eta direction)

    bool valid() const
    {
        for (const Face& f : faces) {
            for (auto i : f)
                if (i >= vertices.size())
                    return false;
            if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
                return false;
        }
        return true;
    }
};

/// The eta values of a tessellation grid: nv uniform samples of `range`,
/// plus eta0 when it falls strictly between two samples.
inline std::vector<double> eta_grid(Interval range, std::size_t nv, double eta0)
{
    std::vector<double> etas(nv);
    for (std::size_t j = 0; j < nv; ++j)
        etas[j] = range.sample(j, nv);
    if (range.contains(eta0) && std::find(etas.begin(), etas.end(), eta0) == etas.end()) {
        etas.insert(std::upper_bound(etas.begin(), etas.end(), eta0), eta0);
    }
    return etas;
}

/// Row-major grid of surface samples (row j holds eta_j, column i holds w_i).
/// Triangles wind counter-clockwise around +(Psi_w x Psi_eta).
inline Mesh tessellate(const SurfacePencil& p, Interval omega_range, Interval eta_range, std::size_t nu,
                       std::size_t nv)
{
    if (nu < 2 || nv < 2)
        throw Error("tessellation needs at least a 2x2 grid");
    if (omega_range.degenerate() || eta_range.degenerate())
        throw Error("tessellation ranges must be non-degenerate");

    const std::vector<double> etas = eta_grid(eta_range, nv, p.scale().eta0());
    const std::size_t rows = etas.size();

    Mesh m;
    m.nu = nu;
    m.nv = rows;
    m.vertices.resize(nu * rows);
    for (std::size_t i = 0; i < nu; ++i) {
        const double w = omega_range.sample(i, nu);
        // Frame and curve are shared by every row of column i.
        const CurveJet j = p.curve().derivatives(w);
        const FrenetFrame f = frenet_frame(j, w, p.tolerances());
        const auto fac = detail::factors_at(p.scale(), w);
        for (std::size_t r = 0; r < rows; ++r) {
            const MarchingValues mv = marching_eval(p.scale(), etas[r]);
            m.vertices[r * nu + i] = j.d0 + (fac.k * mv.U) * f.V1 + (fac.m * mv.V) * f.V2 + (fac.n * mv.Z) * f.V3;
        }
    }

    m.faces.reserve(2 * (nu - 1) * (rows - 1));
    for (std::size_t r = 0; r + 1 < rows; ++r) {
        for (std::size_t i = 0; i + 1 < nu; ++i) {
            const auto v00 = static_cast<std::uint32_t>(r * nu + i);
            const auto v10 = v00 + 1;
            const auto v01 = static_cast<std::uint32_t>((r + 1) * nu + i);
            const auto v11 = v01 + 1;
            m.faces.push_back({v00, v10, v11});
            m.faces.push_back({v00, v11, v01});
        }
    }
    return m;
}

namespace detail {

inline void append_double(std::string& out, double v)
{
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
}

inline void append_vertex(std::string& out, const Vec3& v)
{
    out += "v ";
    append_double(out, v.x);
    out += ' ';
    append_double(out, v.y);
    out += ' ';
    append_double(out, v.z);
    out += '\n';
}

} // namespace detail

/// Shortest round-trip decimal for every coordinate, 1-based face indices, LF endings.
inline std::string export_obj(const Mesh& m)
{
    std::string out = "# isoasym mesh";
    if (m.nu != 0)
        out += " grid " + std::to_string(m.nu) + "x" + std::to_string(m.nv);
    out += " vertices " + std::to_string(m.vertices.size()) + " faces " + std::to_string(m.faces.size()) + "\n";
    for (const Vec3& v : m.vertices)
        detail::append_vertex(out, v);
    for (const auto& f : m.faces)
        out += "f " + std::to_string(f[0] + 1) + ' ' + std::to_string(f[1] + 1) + ' ' + std::to_string(f[2] + 1) + '\n';
    return out;
}

inline std::string export_curve_polyline(const ParamCurve& c, Interval range, std::size_t n)
{
    if (n < 2)
        throw Error("polyline needs at least 2 samples");
    std::string out = "# isoasym curve samples " + std::to_string(n) + "\n";
    for (std::size_t i = 0; i < n; ++i)
        detail::append_vertex(out, c(range.sample(i, n)));
    out += 'l';
    for (std::size_t i = 1; i <= n; ++i)
        out += ' ' + std::to_string(i);
    out += '\n';
    return out;
}

struct ObjData {
    std::vector<Vec3> vertices;
    std::vector<Mesh::Face> faces;              ///< 0-based
    std::vector<std::vector<std::uint32_t>> lines; ///< 0-based
};

/// Reads back the OBJ subset written above.
inline ObjData parse_obj(std::string_view text)
{
    ObjData d;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;

        std::vector<std::string_view> tok;
        for (std::size_t pos = 0; pos < line.size();) {
            while (pos < line.size() && line[pos] == ' ')
                ++pos;
            const std::size_t start = pos;
            while (pos < line.size() && line[pos] != ' ')
                ++pos;
            if (pos > start)
                tok.push_back(line.substr(start, pos - start));
        }
        if (tok.empty())
            continue;
        auto fail = [&](const std::string& what) {
            return Error("OBJ line " + std::to_string(line_no) + ": " + what);
        };
        auto num = [&](std::string_view s) {
            double v = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || ptr != s.data() + s.size())
                throw fail("bad number '" + std::string(s) + "'");
            return v;
        };
        auto index = [&](std::string_view s) {
            std::uint32_t v = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
                throw fail("bad index '" + std::string(s) + "'");
            return v - 1;
        };

        if (tok[0] == "v") {
            if (tok.size() != 4)
                throw fail("vertex needs 3 coordinates");
            d.vertices.push_back({num(tok[1]), num(tok[2]), num(tok[3])});
        } else if (tok[0] == "f") {
            if (tok.size() != 4)
                throw fail("only triangles are supported");
            d.faces.push_back({index(tok[1]), index(tok[2]), index(tok[3])});
        } else if (tok[0] == "l") {
            std::vector<std::uint32_t> l;
            for (std::size_t i = 1; i < tok.size(); ++i)
                l.push_back(index(tok[i]));
            d.lines.push_back(std::move(l));
        } else {
            throw fail("unsupported record '" + std::string(tok[0]) + "'");
        }
    }
    return d;
}

} // namespace isoasym
