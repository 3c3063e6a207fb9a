#include "transurf/csv.hpp"
#include "transurf/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace transurf {

namespace {

/// Shortest representation that round-trips a double (17 significant
/// digits); keeps byte-identical output across runs.
void append_double(std::string& out, double v) {
    char buf[40];
    const int len = std::snprintf(buf, sizeof(buf), "%.17g", v);
    out.append(buf, static_cast<std::size_t>(len));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw Error(ErrorCode::IoError, "write failed for " + path);
}

} // namespace

void write_profile_csv(const CurvatureProfile& p, const std::string& path) {
    std::string out = "s,kappa,kappa_prime,tau,residual\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
        append_double(out, p.s_grid[i]);
        out.push_back(',');
        append_double(out, p.kappa[i]);
        out.push_back(',');
        append_double(out, p.kappa_prime[i]);
        out.push_back(',');
        append_double(out, p.tau[i]);
        out.push_back(',');
        append_double(out, p.first_integral_residual[i]);
        out.push_back('\n');
    }
    write_file(path, out);
}

void write_curve_csv(const SpaceCurve& c, const std::string& path) {
    std::string out = "s,x,y,z,tx,ty,tz,nx,ny,nz,bx,by,bz,kappa,tau\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
        append_double(out, c.s_grid[i]);
        for (const auto* vec : {&c.position[i], &c.tangent[i], &c.normal[i],
                                &c.binormal[i]})
            for (int k = 0; k < 3; ++k) {
                out.push_back(',');
                append_double(out, (*vec)[k]);
            }
        out.push_back(',');
        append_double(out, c.kappa[i]);
        out.push_back(',');
        append_double(out, c.tau[i]);
        out.push_back('\n');
    }
    write_file(path, out);
}

void write_surface_csv(const TranslationSurface& surf, const std::string& path) {
    std::string out = "s,t,x,y,z,K,H,phi\n";
    for (std::size_t i = 0; i < surf.rows(); ++i)
        for (std::size_t j = 0; j < surf.cols(); ++j) {
            const std::size_t k = surf.index(i, j);
            append_double(out, surf.s_grid[i]);
            out.push_back(',');
            append_double(out, surf.t_grid[j]);
            for (int d = 0; d < 3; ++d) {
                out.push_back(',');
                append_double(out, surf.position[k][d]);
            }
            out.push_back(',');
            append_double(out, surf.gauss_K[k]);
            out.push_back(',');
            append_double(out, surf.mean_H[k]);
            out.push_back(',');
            append_double(out, std::atan2(surf.sin_phi[k], surf.cos_phi[k]));
            out.push_back('\n');
        }
    write_file(path, out);
}

namespace {

struct LineParser {
    std::string_view line;
    std::size_t line_no;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                               ", column " + std::to_string(pos + 1) +
                                               ": " + what);
    }

    double next_number() {
        if (pos > 0) {
            if (pos >= line.size() || line[pos] != ',') fail("expected ','");
            ++pos;
        }
        double value = 0.0;
        const char* begin = line.data() + pos;
        const char* end = line.data() + line.size();
        const auto res = std::from_chars(begin, end, value);
        if (res.ec != std::errc{}) fail("expected a number");
        pos += static_cast<std::size_t>(res.ptr - begin);
        return value;
    }

    bool done() const { return pos >= line.size(); }
};

} // namespace

CurveFile read_curve_csv(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoError, "cannot open " + path);

    std::string header;
    if (!std::getline(f, header))
        throw Error(ErrorCode::ParseError, "line 1: empty file");
    if (!header.empty() && header.back() == '\r') header.pop_back();

    CurveFile out;
    std::size_t columns;
    if (header == "s,x,y,z,tx,ty,tz,nx,ny,nz,bx,by,bz,kappa,tau") {
        out.has_frames = true;
        columns = 15;
    } else if (header == "s,x,y,z") {
        out.has_frames = false;
        columns = 4;
    } else {
        throw Error(ErrorCode::ParseError,
                    "line 1: unrecognized header \"" + header + "\"");
    }

    std::string line;
    std::size_t line_no = 1;
    while (std::getline(f, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        LineParser p{line, line_no};
        std::vector<double> row;
        row.reserve(columns);
        for (std::size_t k = 0; k < columns; ++k) row.push_back(p.next_number());
        if (!p.done()) p.fail("trailing characters");

        auto& c = out.curve;
        c.s_grid.push_back(row[0]);
        c.position.emplace_back(row[1], row[2], row[3]);
        if (out.has_frames) {
            c.tangent.emplace_back(row[4], row[5], row[6]);
            c.normal.emplace_back(row[7], row[8], row[9]);
            c.binormal.emplace_back(row[10], row[11], row[12]);
            c.kappa.push_back(row[13]);
            c.tau.push_back(row[14]);
        }
    }
    if (out.curve.size() < 2)
        throw Error(ErrorCode::ParseError, "file holds fewer than 2 samples");
    return out;
}

TranslationSurface read_surface_csv(const std::string& path, double sin_phi_min) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoError, "cannot open " + path);

    std::string header;
    if (!std::getline(f, header))
        throw Error(ErrorCode::ParseError, "line 1: empty file");
    if (!header.empty() && header.back() == '\r') header.pop_back();
    if (header != "s,t,x,y,z,K,H,phi")
        throw Error(ErrorCode::ParseError,
                    "line 1: unrecognized header \"" + header + "\"");

    std::vector<double> s_values, t_values, k_values, h_values, phi_values;
    std::vector<Vec3> positions;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(f, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        LineParser p{line, line_no};
        std::vector<double> row;
        for (int k = 0; k < 8; ++k) row.push_back(p.next_number());
        if (!p.done()) p.fail("trailing characters");
        s_values.push_back(row[0]);
        t_values.push_back(row[1]);
        positions.emplace_back(row[2], row[3], row[4]);
        k_values.push_back(row[5]);
        h_values.push_back(row[6]);
        phi_values.push_back(row[7]);
    }

    // Rows are s-major: the leading block shares one s value.
    std::size_t cols = 0;
    while (cols < s_values.size() && s_values[cols] == s_values[0]) ++cols;
    if (cols < 2 || s_values.size() % cols != 0)
        throw Error(ErrorCode::ParseError, "rows do not form an s-major grid");
    const std::size_t rows = s_values.size() / cols;
    if (rows < 2) throw Error(ErrorCode::ParseError, "grid needs at least 2 rows");

    TranslationSurface surf;
    surf.sin_phi_min = sin_phi_min;
    for (std::size_t i = 0; i < rows; ++i) surf.s_grid.push_back(s_values[i * cols]);
    for (std::size_t j = 0; j < cols; ++j) surf.t_grid.push_back(t_values[j]);
    surf.position = positions;
    surf.gauss_K = k_values;
    surf.mean_H = h_values;
    const std::size_t total = rows * cols;
    surf.sin_phi.resize(total);
    surf.cos_phi.resize(total);
    surf.degenerate.resize(total);
    for (std::size_t k = 0; k < total; ++k) {
        surf.sin_phi[k] = std::sin(phi_values[k]);
        surf.cos_phi[k] = std::cos(phi_values[k]);
        surf.degenerate[k] = surf.sin_phi[k] < sin_phi_min;
    }
    return surf;
}

} // namespace transurf
