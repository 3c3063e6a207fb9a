#pragma once

#include "transurf/surface.hpp"

#include <string>

namespace transurf {

enum class MeshFormat { Obj, Ply };

struct MeshStats {
    std::size_t vertices = 0;
    std::size_t triangles = 0;
    std::size_t skipped_cells = 0; // cells touching a degenerate node
};

/// Write the surface grid as a triangulated mesh: vertices in row-major
/// (s-major) order, two triangles per cell wound so that face normals
/// agree with the surface normal t_alpha x t_beta. Cells touching a
/// degenerate node are omitted and counted. OBJ uses 1-based indices and
/// 17-significant-digit vertices; both formats use LF line endings.
MeshStats export_mesh(const TranslationSurface& surface, const std::string& path,
                      MeshFormat format);

} // namespace transurf
