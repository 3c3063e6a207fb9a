#pragma once

#include "transurf/curvature_ode.hpp"
#include "transurf/curve.hpp"
#include "transurf/surface.hpp"

#include <string>
#include <vector>

namespace transurf {

/// Header: s,kappa,kappa_prime,tau,residual
void write_profile_csv(const CurvatureProfile& profile, const std::string& path);

/// Header: s,x,y,z,tx,ty,tz,nx,ny,nz,bx,by,bz,kappa,tau
void write_curve_csv(const SpaceCurve& curve, const std::string& path);

/// Header: s,t,x,y,z,K,H,phi
void write_surface_csv(const TranslationSurface& surface, const std::string& path);

/// A curve file is either the full SpaceCurve schema or the bare sampled
/// schema s,x,y,z (arbitrary parameterization, no frames).
struct CurveFile {
    bool has_frames = false;
    SpaceCurve curve; // bare files fill only s_grid and position
};

/// Throws ParseError with line and column on schema or number errors,
/// IoError if the file cannot be opened.
CurveFile read_curve_csv(const std::string& path);

/// Rebuild grids, positions and degeneracy flags (from the phi column)
/// of a surface CSV; enough to re-export meshes. Fields the file does
/// not carry stay empty.
TranslationSurface read_surface_csv(const std::string& path,
                                    double sin_phi_min = 1e-3);

} // namespace transurf
