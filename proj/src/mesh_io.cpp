#include "transurf/mesh_io.hpp"
#include "transurf/error.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <vector>

namespace transurf {

namespace {

void append_double(std::string& out, double v) {
    char buf[40];
    const int len = std::snprintf(buf, sizeof(buf), "%.17g", v);
    out.append(buf, static_cast<std::size_t>(len));
}

} // namespace

MeshStats export_mesh(const TranslationSurface& surf, const std::string& path,
                      MeshFormat format) {
    const std::size_t ns = surf.rows(), nt = surf.cols();
    if (ns < 2 || nt < 2)
        throw Error(ErrorCode::IoError, "mesh export needs a grid of at least 2x2");

    MeshStats stats;
    stats.vertices = ns * nt;

    // Triangles per cell: (i,j) (i+1,j) (i+1,j+1) and (i,j) (i+1,j+1) (i,j+1).
    // Counter-clockwise in (s,t), so face normals follow Psi_s x Psi_t = N.
    std::vector<std::array<std::size_t, 3>> faces;
    faces.reserve(2 * (ns - 1) * (nt - 1));
    for (std::size_t i = 0; i + 1 < ns; ++i)
        for (std::size_t j = 0; j + 1 < nt; ++j) {
            const std::size_t v00 = surf.index(i, j), v10 = surf.index(i + 1, j);
            const std::size_t v11 = surf.index(i + 1, j + 1), v01 = surf.index(i, j + 1);
            if (surf.degenerate[v00] || surf.degenerate[v10] ||
                surf.degenerate[v11] || surf.degenerate[v01]) {
                ++stats.skipped_cells;
                continue;
            }
            faces.push_back({v00, v10, v11});
            faces.push_back({v00, v11, v01});
        }
    stats.triangles = faces.size();

    std::string out;
    out.reserve(stats.vertices * 64 + faces.size() * 32);
    if (format == MeshFormat::Obj) {
        for (std::size_t k = 0; k < stats.vertices; ++k) {
            out += "v ";
            append_double(out, surf.position[k].x());
            out.push_back(' ');
            append_double(out, surf.position[k].y());
            out.push_back(' ');
            append_double(out, surf.position[k].z());
            out.push_back('\n');
        }
        for (const auto& f : faces) {
            out += "f ";
            out += std::to_string(f[0] + 1);
            out.push_back(' ');
            out += std::to_string(f[1] + 1);
            out.push_back(' ');
            out += std::to_string(f[2] + 1);
            out.push_back('\n');
        }
    } else {
        out += "ply\nformat ascii 1.0\n";
        out += "element vertex " + std::to_string(stats.vertices) + "\n";
        out += "property double x\nproperty double y\nproperty double z\n";
        out += "element face " + std::to_string(faces.size()) + "\n";
        out += "property list uchar int vertex_indices\nend_header\n";
        for (std::size_t k = 0; k < stats.vertices; ++k) {
            append_double(out, surf.position[k].x());
            out.push_back(' ');
            append_double(out, surf.position[k].y());
            out.push_back(' ');
            append_double(out, surf.position[k].z());
            out.push_back('\n');
        }
        for (const auto& f : faces) {
            out += "3 ";
            out += std::to_string(f[0]);
            out.push_back(' ');
            out += std::to_string(f[1]);
            out.push_back(' ');
            out += std::to_string(f[2]);
            out.push_back('\n');
        }
    }

    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
    file.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!file) throw Error(ErrorCode::IoError, "write failed for " + path);
    return stats;
}

} // namespace transurf
