#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <functional>
#include <vector>

#include "gnwave/basis.hpp"
#include "gnwave/errors.hpp"
#include "gnwave/mesh.hpp"

namespace gn {

/// Piecewise-polynomial field on one of the two meshes: per-cell modal
/// coefficients in the orthonormal reference basis, ncomp components.
/// Storage includes a one-cell ghost ring; cell indices run over
/// [-1, ncx] x [-1, ncy].
struct DGField {
    MeshId mesh = MeshId::primal;
    int k = 1;
    int nb = 3;
    int ncomp = 1;
    int ncx = 0, ncy = 0;
    std::vector<double> a;

    DGField() = default;
    DGField(const MeshPair& mp, MeshId m, int degree, int ncomponents)
        : mesh(m), k(degree), nb(basis_size(degree)), ncomp(ncomponents),
          ncx(mp.ncx(m)), ncy(mp.ncy(m)),
          a(static_cast<size_t>((ncx + 2) * (ncy + 2)) * ncomp * nb, 0.0)
    {
    }

    int cell_index(int i, int j) const
    {
        assert(i >= -1 && i <= ncx && j >= -1 && j <= ncy);
        return (j + 1) * (ncx + 2) + (i + 1);
    }
    double* cell(int i, int j) { return a.data() + static_cast<size_t>(cell_index(i, j)) * ncomp * nb; }
    const double* cell(int i, int j) const
    {
        return a.data() + static_cast<size_t>(cell_index(i, j)) * ncomp * nb;
    }
    double& coeff(int i, int j, int comp, int mode) { return cell(i, j)[comp * nb + mode]; }
    double coeff(int i, int j, int comp, int mode) const { return cell(i, j)[comp * nb + mode]; }

    /// Cell average: for the orthonormal basis this is the constant-mode
    /// coefficient (phi_0 == 1 on the reference cell).
    double cell_average(int i, int j, int comp) const { return coeff(i, j, comp, 0); }

    double eval_ref(int i, int j, int comp, double xi, double eta) const
    {
        const BasisEval b = eval_basis(k, xi, eta);
        const double* c = cell(i, j) + comp * nb;
        double s = 0;
        for (int m = 0; m < nb; ++m) s += c[m] * b.val[m];
        return s;
    }
};

/// One-sided evaluation at a physical point: the owning cell's polynomial.
inline double eval_field(const DGField& f, const MeshPair& mp, int comp, double x, double y)
{
    if (x < mp.x_min - 0.5 * mp.dx || x > mp.x_max + 0.5 * mp.dx || y < mp.y_min - 0.5 * mp.dy ||
        y > mp.y_max + 0.5 * mp.dy)
        throw ConfigError("eval_field: point outside mesh");
    const auto [i, j] = mp.locate(f.mesh, x, y);
    const auto [xi, eta] = mp.to_ref(f.mesh, i, j, x, y);
    return f.eval_ref(i, j, comp, xi, eta);
}

/// L2 projection of f onto cell (i,j). The quadrature runs per quarter-cell
/// so that kinks aligned with half-cell lines (the other mesh's faces) are
/// integrated cleanly. nq Gauss points per direction per quarter.
template <typename F>
inline void project_cell(DGField& field, const MeshPair& mp, int i, int j, int comp, F&& f,
                         int nq = 5)
{
    const QuadRule g = gauss_points(nq);
    const int nb = field.nb;
    double acc[max_basis] = {0, 0, 0, 0, 0, 0};
    const double cx = mp.center_x(field.mesh, i);
    const double cy = mp.center_y(field.mesh, j);
    for (int qx = 0; qx < 2; ++qx) {
        for (int qy = 0; qy < 2; ++qy) {
            const double ox = -0.25 + 0.5 * qx;
            const double oy = -0.25 + 0.5 * qy;
            for (int a = 0; a < nq; ++a) {
                for (int b = 0; b < nq; ++b) {
                    const double xi = ox + 0.5 * g.points[a];
                    const double eta = oy + 0.5 * g.points[b];
                    const double w = 0.25 * g.weights[a] * g.weights[b];
                    const double v = f(cx + xi * mp.dx, cy + eta * mp.dy);
                    if (!std::isfinite(v))
                        throw NumericalError("project_cell: non-finite sample value");
                    const BasisEval be = eval_basis(field.k, xi, eta);
                    for (int m = 0; m < nb; ++m) acc[m] += w * v * be.val[m];
                }
            }
        }
    }
    double* c = field.cell(i, j) + comp * nb;
    for (int m = 0; m < nb; ++m) c[m] = acc[m];
}

/// Project over all cells including the ghost ring.
template <typename F>
inline void project_all(DGField& field, const MeshPair& mp, int comp, F&& f, int nq = 5)
{
    for (int j = -1; j <= field.ncy; ++j)
        for (int i = -1; i <= field.ncx; ++i) project_cell(field, mp, i, j, comp, f, nq);
}

/// Continuous velocity data sampled cellwise: tensor-product Lagrange nodal
/// values of degree k on each cell, ghost ring included. Interior cells
/// mirror a single global continuous field, so shared nodes agree; ghost
/// cells are filled from the boundary conditions.
struct VelocityField {
    MeshId mesh = MeshId::primal;
    int k = 1;
    int nn = 4; // (k+1)^2 nodes per cell
    int ncx = 0, ncy = 0;
    std::vector<double> u, v;

    VelocityField() = default;
    VelocityField(const MeshPair& mp, MeshId m, int degree)
        : mesh(m), k(degree), nn((degree + 1) * (degree + 1)), ncx(mp.ncx(m)), ncy(mp.ncy(m)),
          u(static_cast<size_t>((ncx + 2) * (ncy + 2)) * nn, 0.0),
          v(static_cast<size_t>((ncx + 2) * (ncy + 2)) * nn, 0.0)
    {
    }

    size_t cell_offset(int i, int j) const
    {
        assert(i >= -1 && i <= ncx && j >= -1 && j <= ncy);
        return static_cast<size_t>((j + 1) * (ncx + 2) + (i + 1)) * nn;
    }
    double* u_cell(int i, int j) { return u.data() + cell_offset(i, j); }
    double* v_cell(int i, int j) { return v.data() + cell_offset(i, j); }
    const double* u_cell(int i, int j) const { return u.data() + cell_offset(i, j); }
    const double* v_cell(int i, int j) const { return v.data() + cell_offset(i, j); }
};

/// 1D Lagrange basis on the equispaced reference nodes of degree k.
inline void lagrange_1d(int k, double xi, double* val, double* der)
{
    if (k == 1) {
        // nodes -1/2, 1/2
        val[0] = 0.5 - xi;
        val[1] = 0.5 + xi;
        der[0] = -1.0;
        der[1] = 1.0;
    } else {
        // nodes -1/2, 0, 1/2
        assert(k == 2);
        val[0] = 2.0 * xi * (xi - 0.5);
        val[1] = (1.0 - 2.0 * xi) * (1.0 + 2.0 * xi);
        val[2] = 2.0 * xi * (xi + 0.5);
        der[0] = 4.0 * xi - 1.0;
        der[1] = -8.0 * xi;
        der[2] = 4.0 * xi + 1.0;
    }
}

struct LagrangeEval {
    std::array<double, 9> val{};
    std::array<double, 9> dx{};
    std::array<double, 9> dy{};
};

inline LagrangeEval eval_lagrange(int k, double xi, double eta)
{
    double vx[3], dxv[3], vy[3], dyv[3];
    lagrange_1d(k, xi, vx, dxv);
    lagrange_1d(k, eta, vy, dyv);
    LagrangeEval e;
    const int n = k + 1;
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) {
            const int id = b * n + a;
            e.val[id] = vx[a] * vy[b];
            e.dx[id] = dxv[a] * vy[b];
            e.dy[id] = vx[a] * dyv[b];
        }
    }
    return e;
}

/// Reference coordinates of velocity node (a, b) within a cell.
inline std::array<double, 2> velocity_node_ref(int k, int a, int b)
{
    const double step = 1.0 / k;
    return {-0.5 + a * step, -0.5 + b * step};
}

} // namespace gn
