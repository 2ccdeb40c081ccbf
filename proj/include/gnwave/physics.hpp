#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "gnwave/errors.hpp"

namespace gn {

using Vec3 = std::array<double, 3>;

/// Physical constants of the dispersion-enhanced Green-Naghdi system.
/// alpha = 1 recovers the standard model; alpha = 1.159 is the value that
/// best tracks the exact linear dispersion relation.
struct PhysParams {
    double g = 9.81;
    double alpha = 1.0;
};

/// Everything the fluxes and the source need at one point: conserved
/// variables (h, hP, hQ), recovered velocities with their in-cell
/// gradients, depth gradients, and surface eta = h + b derivatives taken
/// from the same polynomial data.
struct PointState {
    double h = 0, hP = 0, hQ = 0;
    double u = 0, v = 0;
    double ux = 0, uy = 0, vx = 0, vy = 0;
    double hx = 0, hy = 0;
    double etax = 0, etay = 0, etaxx = 0, etayy = 0;
};

/// Bottom value and derivatives at a point, evaluated from the projected
/// per-mesh polynomial (never from the analytic callbacks inside the
/// scheme, so kinks and jumps are handled by the projection alone).
struct BottomPoint {
    double b = 0;
    double bx = 0, by = 0;
    double bxx = 0, bxy = 0, byy = 0;
};

/// x-direction flux of the reformulated balance law in (h, hP, hQ).
inline Vec3 flux_F(const PointState& s, const BottomPoint& t, const PhysParams& p)
{
    const double a = p.alpha;
    const double g = p.g;
    const double h = s.h, h2 = h * h, h3 = h2 * h;
    const double div = s.ux + s.vy;

    Vec3 f;
    f[0] = h * s.u;
    f[1] = s.hP * s.u + s.hQ * s.v + 0.5 * g * h2 - a * h * s.u * s.v * t.bx * t.by +
           0.5 * (1.0 - a) * h2 * (s.u * s.u * t.bxx + s.v * s.v * t.byy) -
           h * s.v * s.v * (1.0 + a * t.by * t.by) -
           ((4.0 * a - 2.0) / 3.0 * h3 * s.ux * s.ux + (6.0 * a - 2.0) / 3.0 * h3 * s.ux * s.vy +
            (4.0 * a - 2.0) / 3.0 * h3 * s.vy * s.vy) +
           a * h2 * s.u * div * t.bx + 1.5 * a * h2 * s.v * div * t.by -
           (2.0 / 3.0) * (a - 1.0) * h3 * s.uy * s.vx + (1.0 - a) * h2 * s.u * s.v * t.bxy -
           (a - 1.0) / 3.0 * g * h3 * (s.etaxx + s.etayy) +
           0.5 * (a - 1.0) * g * h2 * (t.bx * s.etax + t.by * s.etay);
    f[2] = h * s.u * s.v * (1.0 + a * t.by * t.by) + a * h * s.u * s.u * t.bx * t.by -
           0.5 * a * h2 * s.u * div * t.by;
    return f;
}

/// y-direction flux; the mirror image of flux_F under the x<->y swap.
inline Vec3 flux_G(const PointState& s, const BottomPoint& t, const PhysParams& p)
{
    const double a = p.alpha;
    const double g = p.g;
    const double h = s.h, h2 = h * h, h3 = h2 * h;
    const double div = s.ux + s.vy;

    Vec3 f;
    f[0] = h * s.v;
    f[1] = h * s.u * s.v * (1.0 + a * t.bx * t.bx) + a * h * s.v * s.v * t.bx * t.by -
           0.5 * a * h2 * s.v * div * t.bx;
    f[2] = s.hP * s.u + s.hQ * s.v + 0.5 * g * h2 - a * h * s.u * s.v * t.bx * t.by +
           0.5 * (1.0 - a) * h2 * (s.u * s.u * t.bxx + s.v * s.v * t.byy) -
           h * s.u * s.u * (1.0 + a * t.bx * t.bx) -
           ((4.0 * a - 2.0) / 3.0 * h3 * s.ux * s.ux + (6.0 * a - 2.0) / 3.0 * h3 * s.ux * s.vy +
            (4.0 * a - 2.0) / 3.0 * h3 * s.vy * s.vy) +
           1.5 * a * h2 * s.u * div * t.bx + a * h2 * s.v * div * t.by -
           (2.0 / 3.0) * (a - 1.0) * h3 * s.uy * s.vx + (1.0 - a) * h2 * s.u * s.v * t.bxy -
           (a - 1.0) / 3.0 * g * h3 * (s.etaxx + s.etayy) +
           0.5 * (a - 1.0) * g * h2 * (t.bx * s.etax + t.by * s.etay);
    return f;
}

/// Source term. The first component vanishes identically; the hydrostatic
/// parts are -g h b_x and -g h b_y.
inline Vec3 source_S(const PointState& s, const BottomPoint& t, const PhysParams& p)
{
    const double a = p.alpha;
    const double g = p.g;
    const double h = s.h, h2 = h * h;
    const double div = s.ux + s.vy;
    const double grad2 = s.ux * s.ux + s.ux * s.vy + s.uy * s.vx + s.vy * s.vy;
    const double lap_eta = s.etaxx + s.etayy;

    Vec3 src;
    src[0] = 0.0;
    src[1] = -g * h * t.bx - 0.5 * a * h2 * s.u * div * t.bxx - 0.5 * a * h2 * s.v * div * t.bxy +
             (2.0 * a - 1.0) * h * s.u * s.u * t.bx * t.bxx +
             h * s.u * s.v * ((3.0 * a - 2.0) * t.bx * t.bxy + a * t.bxx * t.by) +
             (a - 1.0) * h2 * grad2 * t.bx + a * h * s.v * s.v * t.bxy * t.by +
             (a - 1.0) * h * s.v * s.v * t.bx * t.byy + 0.5 * (a - 1.0) * g * h2 * lap_eta * t.bx -
             (a - 1.0) * g * h * (t.bx * t.bx * s.etax + t.bx * t.by * s.etay);
    src[2] = -g * h * t.by - 0.5 * a * h2 * s.u * div * t.bxy - 0.5 * a * h2 * s.v * div * t.byy +
             (2.0 * a - 1.0) * h * s.v * s.v * t.by * t.byy +
             h * s.u * s.v * ((3.0 * a - 2.0) * t.bxy * t.by + a * t.bx * t.byy) +
             (a - 1.0) * h2 * grad2 * t.by + a * h * s.u * s.u * t.bx * t.bxy +
             (a - 1.0) * h * s.u * s.u * t.bxx * t.by + 0.5 * (a - 1.0) * g * h2 * lap_eta * t.by -
             (a - 1.0) * g * h * (t.bx * t.by * s.etax + t.by * t.by * s.etay);
    return src;
}

/// Source with the hydrostatic -g h grad(b) part removed; this is the
/// "remaining" piece the well-balanced stage keeps untouched while the
/// hydrostatic piece is replaced by its flux/face decomposition.
inline Vec3 source_remaining(const PointState& s, const BottomPoint& t, const PhysParams& p)
{
    Vec3 src = source_S(s, t, p);
    src[1] += p.g * s.h * t.bx;
    src[2] += p.g * s.h * t.by;
    return src;
}

/// Positive branch of the linear dispersion relation of the modified model
/// over a flat bottom of depth h0.
inline double dispersion_omega(double k_mag, double h0, const PhysParams& p)
{
    const double kk = k_mag * k_mag * h0 * h0;
    const double num = 1.0 + (p.alpha - 1.0) / 3.0 * kk;
    const double den = 1.0 + p.alpha / 3.0 * kk;
    return k_mag * std::sqrt(p.g * h0 * num / den);
}

/// Full linear water-wave (Airy) dispersion relation.
inline double airy_omega(double k_mag, double h0, double g)
{
    return std::sqrt(g * k_mag * std::tanh(h0 * k_mag));
}

/// Solitary wave over a flat bottom: depth profile, velocity, and their
/// spatial derivatives up to second order (needed to initialize the
/// auxiliary momenta without finite differences).
struct SolitaryWave {
    double h1 = 1.0;  // ambient depth
    double h2 = 2.25; // crest depth
    double g = 9.81;
    double x0 = 0.0; // crest position at t = 0

    double speed() const { return std::sqrt(g * h2); }
    double kappa() const { return 0.5 * std::sqrt(3.0 * (h2 - h1) / (h2 * h1 * h1)); }

    double h(double x, double t) const
    {
        const double s = 1.0 / std::cosh(kappa() * (x - x0 - speed() * t));
        return h1 + (h2 - h1) * s * s;
    }
    double u(double x, double t) const { return speed() * (1.0 - h1 / h(x, t)); }

    double h_x(double x, double t) const
    {
        const double th = kappa() * (x - x0 - speed() * t);
        const double s = 1.0 / std::cosh(th), tn = std::tanh(th);
        return -2.0 * (h2 - h1) * kappa() * s * s * tn;
    }
    double h_xx(double x, double t) const
    {
        const double th = kappa() * (x - x0 - speed() * t);
        const double s = 1.0 / std::cosh(th), tn = std::tanh(th);
        const double k = kappa();
        return -2.0 * (h2 - h1) * k * k * (s * s * s * s - 2.0 * s * s * tn * tn);
    }
    double u_x(double x, double t) const
    {
        const double hh = h(x, t);
        return speed() * h1 * h_x(x, t) / (hh * hh);
    }
    double u_xx(double x, double t) const
    {
        const double hh = h(x, t), hx = h_x(x, t);
        return speed() * h1 * (h_xx(x, t) / (hh * hh) - 2.0 * hx * hx / (hh * hh * hh));
    }
};

/// Third-order Stokes wave surface elevation of the incident wave train.
inline double stokes_incident_eta(double x, double t, double T0, double a0, double lambda)
{
    const double ph = 2.0 * M_PI * (x / lambda - t / T0);
    const double pi_a2 = M_PI * a0 * a0 / lambda;
    const double pi2_a3 = 0.5 * M_PI * M_PI * a0 * a0 * a0 / (lambda * lambda);
    return a0 * std::cos(ph) + pi_a2 * std::cos(2.0 * ph) -
           pi2_a3 * (std::cos(ph) - std::cos(3.0 * ph));
}

/// Smooth field with the derivatives the auxiliary-momentum definitions
/// consume. Scenario initializers and manufactured tests provide these
/// analytically.
struct ScalarField2 {
    std::function<double(double, double)> f;
    std::function<double(double, double)> fx;
    std::function<double(double, double)> fy;
    std::function<double(double, double)> fxx;
    std::function<double(double, double)> fxy;
    std::function<double(double, double)> fyy;

    static ScalarField2 zero()
    {
        auto z = [](double, double) { return 0.0; };
        return {z, z, z, z, z, z};
    }
    static ScalarField2 constant(double c)
    {
        auto z = [](double, double) { return 0.0; };
        return {[c](double, double) { return c; }, z, z, z, z, z};
    }
};

/// Pointwise value of hP per its definition, with the outer divergence
/// expanded; all ingredients are supplied analytically.
inline double momentum_hP(double x, double y, const ScalarField2& h, const ScalarField2& u,
                          const ScalarField2& v, const ScalarField2& b, double alpha)
{
    const double H = h.f(x, y), Hx = h.fx(x, y), Hy = h.fy(x, y);
    const double U = u.f(x, y), Ux = u.fx(x, y), Uxx = u.fxx(x, y);
    const double V = v.f(x, y), Vx = v.fx(x, y), Vy = v.fy(x, y), Vxy = v.fxy(x, y);
    const double Bx = b.fx(x, y), By = b.fy(x, y);
    const double Bxx = b.fxx(x, y), Bxy = b.fxy(x, y);
    const double H2 = H * H, H3 = H2 * H;

    // d/dx of (a/3 h^3 (u_x+v_y) - a/2 h^2 v b_y)
    const double Tx = alpha * H2 * Hx * (Ux + Vy) + alpha / 3.0 * H3 * (Uxx + Vxy) -
                      alpha * H * Hx * V * By - 0.5 * alpha * H2 * (Vx * By + V * Bxy);
    // d/dy of (a/2 h^2 v b_x)
    const double Sy = alpha * H * Hy * V * Bx + 0.5 * alpha * H2 * (Vy * Bx + V * Bxy);
    const double mass = H * (1.0 + alpha * Hx * Bx + 0.5 * alpha * H * Bxx + alpha * Bx * Bx) * U +
                        H * (alpha * Hy * Bx + 0.5 * alpha * H * Bxy + alpha * Bx * By) * V;
    return -Tx - Sy + mass;
}

inline double momentum_hQ(double x, double y, const ScalarField2& h, const ScalarField2& u,
                          const ScalarField2& v, const ScalarField2& b, double alpha)
{
    const double H = h.f(x, y), Hx = h.fx(x, y), Hy = h.fy(x, y);
    const double U = u.f(x, y), Ux = u.fx(x, y), Uy = u.fy(x, y), Uxy = u.fxy(x, y);
    const double V = v.f(x, y), Vy = v.fy(x, y), Vyy = v.fyy(x, y);
    const double Bx = b.fx(x, y), By = b.fy(x, y);
    const double Bxy = b.fxy(x, y), Byy = b.fyy(x, y);
    const double H2 = H * H, H3 = H2 * H;

    const double Ty = alpha * H2 * Hy * (Ux + Vy) + alpha / 3.0 * H3 * (Uxy + Vyy) -
                      alpha * H * Hy * U * Bx - 0.5 * alpha * H2 * (Uy * Bx + U * Bxy);
    const double Sx = alpha * H * Hx * U * By + 0.5 * alpha * H2 * (Ux * By + U * Bxy);
    const double mass = H * (alpha * Hx * By + 0.5 * alpha * H * Bxy + alpha * Bx * By) * U +
                        H * (1.0 + alpha * Hy * By + 0.5 * alpha * H * Byy + alpha * By * By) * V;
    return -Ty - Sx + mass;
}

} // namespace gn
