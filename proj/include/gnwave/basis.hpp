#pragma once

#include <array>
#include <cassert>
#include <cmath>

namespace gn {

/// Dimension of the total-degree-k polynomial space on a 2D cell.
inline constexpr int basis_size(int k) { return (k + 1) * (k + 2) / 2; }

inline constexpr int max_degree = 2;
inline constexpr int max_basis = basis_size(max_degree);

/// Exponent pairs (mx, my) of the basis modes, ordered by total degree.
/// Mode 0 is the constant, modes 1,2 are the x/y linears.
inline constexpr std::array<std::array<int, 2>, max_basis> basis_modes = {{
    {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2},
}};

namespace detail {

// Legendre polynomials and derivatives at t in [-1,1], degrees 0..m_max.
inline void legendre_all(int m_max, double t, double* p, double* dp, double* ddp)
{
    p[0] = 1.0;
    dp[0] = 0.0;
    ddp[0] = 0.0;
    if (m_max >= 1) {
        p[1] = t;
        dp[1] = 1.0;
        ddp[1] = 0.0;
    }
    for (int m = 1; m < m_max; ++m) {
        p[m + 1] = ((2 * m + 1) * t * p[m] - m * p[m - 1]) / (m + 1);
        dp[m + 1] = dp[m - 1] + (2 * m + 1) * p[m];
        ddp[m + 1] = ddp[m - 1] + (2 * m + 1) * dp[m];
    }
}

} // namespace detail

/// Values and reference-coordinate derivatives of the L2-orthonormal basis
/// of P^k on [-1/2,1/2]^2 at (xi, eta). Each factor is a shifted Legendre
/// polynomial scaled so that the mass matrix is the identity. Physical-cell
/// derivatives are obtained by the caller via 1/dx, 1/dy (and squares for
/// the second derivatives).
struct BasisEval {
    std::array<double, max_basis> val{};
    std::array<double, max_basis> dx{};
    std::array<double, max_basis> dy{};
    std::array<double, max_basis> dxx{};
    std::array<double, max_basis> dxy{};
    std::array<double, max_basis> dyy{};
};

inline BasisEval eval_basis(int k, double xi, double eta)
{
    assert(k >= 0 && k <= max_degree);
    double px[max_degree + 1], dpx[max_degree + 1], ddpx[max_degree + 1];
    double py[max_degree + 1], dpy[max_degree + 1], ddpy[max_degree + 1];
    detail::legendre_all(k, 2.0 * xi, px, dpx, ddpx);
    detail::legendre_all(k, 2.0 * eta, py, dpy, ddpy);

    double norm[max_degree + 1];
    for (int m = 0; m <= k; ++m) norm[m] = std::sqrt(2.0 * m + 1.0);

    BasisEval b;
    const int nb = basis_size(k);
    for (int i = 0; i < nb; ++i) {
        const int mx = basis_modes[i][0];
        const int my = basis_modes[i][1];
        const double s = norm[mx] * norm[my];
        // chain rule: d/dxi = 2 d/dt
        b.val[i] = s * px[mx] * py[my];
        b.dx[i] = s * 2.0 * dpx[mx] * py[my];
        b.dy[i] = s * px[mx] * 2.0 * dpy[my];
        b.dxx[i] = s * 4.0 * ddpx[mx] * py[my];
        b.dxy[i] = s * 4.0 * dpx[mx] * dpy[my];
        b.dyy[i] = s * px[mx] * 4.0 * ddpy[my];
    }
    return b;
}

} // namespace gn
