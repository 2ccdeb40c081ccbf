#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "gnwave/basis.hpp"
#include "gnwave/errors.hpp"
#include "gnwave/quadrature.hpp"

namespace gn {

enum class MeshId { primal, dual };

enum class BcType { periodic, outgoing, wall, inflow };

enum class Side { left = 0, right = 1, bottom = 2, top = 3 };

inline BcType bc_from_string(const std::string& s)
{
    if (s == "periodic") return BcType::periodic;
    if (s == "outgoing" || s == "absorbing") return BcType::outgoing;
    if (s == "wall" || s == "reflective") return BcType::wall;
    if (s == "inflow") return BcType::inflow;
    throw ConfigError("unknown boundary condition '" + s + "'");
}

/// Two overlapping uniform Cartesian meshes. The primal mesh has nx*ny
/// cells with faces on the domain boundary; the dual mesh is shifted by
/// half a cell in each direction. In a periodic direction the dual mesh
/// has the same cell count (it wraps); otherwise it gains one column/row
/// of full cells whose outer halves extend dx/2 (dy/2) past the domain,
/// so every dual cell keeps the uniform size and the interior scheme
/// applies unchanged. One layer of ghost cells per mesh carries all
/// boundary handling.
struct MeshPair {
    double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
    int nx = 0, ny = 0;
    double dx = 0, dy = 0;
    std::array<BcType, 4> bc{BcType::periodic, BcType::periodic,
                             BcType::periodic, BcType::periodic};

    bool periodic_x() const { return bc[0] == BcType::periodic; }
    bool periodic_y() const { return bc[2] == BcType::periodic; }

    int ncx(MeshId m) const
    {
        return m == MeshId::primal ? nx : (periodic_x() ? nx : nx + 1);
    }
    int ncy(MeshId m) const
    {
        return m == MeshId::primal ? ny : (periodic_y() ? ny : ny + 1);
    }

    double center_x(MeshId m, int i) const
    {
        return m == MeshId::primal ? x_min + (i + 0.5) * dx : x_min + i * dx;
    }
    double center_y(MeshId m, int j) const
    {
        return m == MeshId::primal ? y_min + (j + 0.5) * dy : y_min + j * dy;
    }

    /// Index of the cell of mesh m containing (x, y); clamped to the real
    /// cell range so boundary points resolve to the adjacent interior cell.
    std::array<int, 2> locate(MeshId m, double x, double y) const
    {
        double fx = m == MeshId::primal ? (x - x_min) / dx : (x - x_min) / dx + 0.5;
        double fy = m == MeshId::primal ? (y - y_min) / dy : (y - y_min) / dy + 0.5;
        int i = std::clamp(static_cast<int>(std::floor(fx)), 0, ncx(m) - 1);
        int j = std::clamp(static_cast<int>(std::floor(fy)), 0, ncy(m) - 1);
        return {i, j};
    }

    /// Reference coordinates of (x, y) within cell (i, j) of mesh m.
    std::array<double, 2> to_ref(MeshId m, int i, int j, double x, double y) const
    {
        return {(x - center_x(m, i)) / dx, (y - center_y(m, j)) / dy};
    }

    /// Base index of the four opposite-mesh cells overlapping cell (i,j):
    /// the quarter (qx, qy) of the cell lies inside opposite cell
    /// (bi+qx, bj+qy). Valid for both directions of the pairing.
    std::array<int, 2> opposite_base(MeshId m, int i, int j) const
    {
        return m == MeshId::primal ? std::array<int, 2>{i, j}
                                   : std::array<int, 2>{i - 1, j - 1};
    }
};

inline MeshPair build_overlapping_meshes(double x_min, double x_max, double y_min,
                                         double y_max, int nx, int ny,
                                         std::array<BcType, 4> bc)
{
    if (!(x_max > x_min) || !(y_max > y_min))
        throw ConfigError("mesh: domain bounds must satisfy x_max > x_min, y_max > y_min");
    if (nx < 2 || ny < 2)
        throw ConfigError("mesh: need at least 2 cells per direction");
    if ((bc[0] == BcType::periodic) != (bc[1] == BcType::periodic) ||
        (bc[2] == BcType::periodic) != (bc[3] == BcType::periodic))
        throw ConfigError("mesh: periodic boundary conditions must pair up");
    MeshPair mp;
    mp.x_min = x_min;
    mp.x_max = x_max;
    mp.y_min = y_min;
    mp.y_max = y_max;
    mp.nx = nx;
    mp.ny = ny;
    mp.dx = (x_max - x_min) / nx;
    mp.dy = (y_max - y_min) / ny;
    mp.bc = bc;
    return mp;
}

/// The per-element point set where nonnegative depth must be enforced:
/// on each quarter-cell, (Gauss-x x Lobatto-y) united with
/// (Lobatto-x x Gauss-y), deduplicated across shared quarter boundaries.
/// The same reference set serves every cell of both meshes, since dual
/// cells decompose into quarter rectangles exactly like primal ones.
struct PositivityPointSet {
    int k = 1;
    std::vector<std::array<double, 2>> points; // reference coords in [-1/2,1/2]^2
    int raw_count = 0;                         // before dedup, for accounting
};

inline PositivityPointSet positivity_point_set(int k)
{
    const QuadRule g = gauss_rule(k);
    const QuadRule l = lobatto_rule(k);
    PositivityPointSet set;
    set.k = k;
    auto add = [&set](double x, double y) {
        for (const auto& p : set.points)
            if (std::abs(p[0] - x) < 1e-14 && std::abs(p[1] - y) < 1e-14) return;
        set.points.push_back({x, y});
    };
    for (int qx = 0; qx < 2; ++qx) {
        for (int qy = 0; qy < 2; ++qy) {
            const double ox = -0.25 + 0.5 * qx;
            const double oy = -0.25 + 0.5 * qy;
            set.raw_count += g.size() * l.size() + l.size() * g.size();
            for (double gp : g.points)
                for (double lp : l.points) add(ox + 0.5 * gp, oy + 0.5 * lp);
            for (double lp : l.points)
                for (double gp : g.points) add(ox + 0.5 * lp, oy + 0.5 * gp);
        }
    }
    return set;
}

} // namespace gn
