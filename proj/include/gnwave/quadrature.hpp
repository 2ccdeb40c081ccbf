#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "gnwave/errors.hpp"

namespace gn {

/// 1D quadrature rule on the reference interval [-1/2, 1/2].
/// Weights sum to 1 (the interval length).
struct QuadRule {
    std::vector<double> points;
    std::vector<double> weights;

    int size() const { return static_cast<int>(points.size()); }
};

namespace detail {

// Gauss-Legendre nodes/weights on [-1,1], n = 1..6.
inline QuadRule gauss_ref(int n)
{
    QuadRule r;
    switch (n) {
    case 1:
        r.points = {0.0};
        r.weights = {2.0};
        break;
    case 2:
        r.points = {-0.57735026918962576, 0.57735026918962576};
        r.weights = {1.0, 1.0};
        break;
    case 3:
        r.points = {-0.77459666924148338, 0.0, 0.77459666924148338};
        r.weights = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
        break;
    case 4:
        r.points = {-0.86113631159405258, -0.33998104358485626,
                    0.33998104358485626, 0.86113631159405258};
        r.weights = {0.34785484513745386, 0.65214515486254614,
                     0.65214515486254614, 0.34785484513745386};
        break;
    case 5:
        r.points = {-0.90617984593866399, -0.53846931010568309, 0.0,
                    0.53846931010568309, 0.90617984593866399};
        r.weights = {0.23692688505618909, 0.47862867049936647,
                     0.56888888888888889, 0.47862867049936647,
                     0.23692688505618909};
        break;
    case 6:
        r.points = {-0.93246951420315203, -0.66120938646626451,
                    -0.23861918608319691, 0.23861918608319691,
                    0.66120938646626451, 0.93246951420315203};
        r.weights = {0.17132449237917035, 0.36076157304813861,
                     0.46791393457269105, 0.46791393457269105,
                     0.36076157304813861, 0.17132449237917035};
        break;
    default:
        throw ConfigError("gauss rule: unsupported point count " + std::to_string(n));
    }
    return r;
}

// Gauss-Lobatto nodes/weights on [-1,1], n = 2..5. Endpoints included.
inline QuadRule lobatto_ref(int n)
{
    QuadRule r;
    switch (n) {
    case 2:
        r.points = {-1.0, 1.0};
        r.weights = {1.0, 1.0};
        break;
    case 3:
        r.points = {-1.0, 0.0, 1.0};
        r.weights = {1.0 / 3.0, 4.0 / 3.0, 1.0 / 3.0};
        break;
    case 4:
        r.points = {-1.0, -0.44721359549995794, 0.44721359549995794, 1.0};
        r.weights = {1.0 / 6.0, 5.0 / 6.0, 5.0 / 6.0, 1.0 / 6.0};
        break;
    case 5:
        r.points = {-1.0, -0.65465367070797714, 0.0, 0.65465367070797714, 1.0};
        r.weights = {0.1, 49.0 / 90.0, 32.0 / 45.0, 49.0 / 90.0, 0.1};
        break;
    default:
        throw ConfigError("lobatto rule: unsupported point count " + std::to_string(n));
    }
    return r;
}

inline QuadRule to_half_interval(QuadRule r)
{
    for (auto& p : r.points) p *= 0.5;
    for (auto& w : r.weights) w *= 0.5;
    return r;
}

} // namespace detail

/// N-point Gauss rule on [-1/2,1/2], exact for polynomials of degree 2N-1.
inline QuadRule gauss_points(int n)
{
    return detail::to_half_interval(detail::gauss_ref(n));
}

/// N-point Gauss-Lobatto rule on [-1/2,1/2], exact for degree 2N-3.
/// Includes both endpoints +-1/2.
inline QuadRule lobatto_points(int n)
{
    return detail::to_half_interval(detail::lobatto_ref(n));
}

/// Smallest Gauss rule integrating univariate polynomials of degree 2k+1:
/// N = k+1 points.
inline QuadRule gauss_rule(int k)
{
    assert(k >= 0);
    return gauss_points(k + 1);
}

/// Smallest Gauss-Lobatto rule with 2N-3 >= k. The first weight is the
/// omega_hat_1 that enters the positivity CFL bound.
inline QuadRule lobatto_rule(int k)
{
    assert(k >= 1);
    int n = 2;
    while (2 * n - 3 < k) ++n;
    return lobatto_points(n);
}

/// First Lobatto weight on [-1/2,1/2] for degree k (CFL constant).
inline double lobatto_omega1(int k)
{
    return lobatto_rule(k).weights.front();
}

} // namespace gn
