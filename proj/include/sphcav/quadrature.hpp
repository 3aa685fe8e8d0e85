#pragma once

#include <vector>

#include "sphcav/types.hpp"

namespace sphcav {

inline constexpr int kMaxSphereDegree = 64;

struct SpherePoint {
    Direction dir;
    double weight{0.0};
};

/// Gauss-Legendre in cos(theta) times a uniform phi grid, plus optional radial Gauss-Legendre nodes.
struct QuadratureRule {
    int degree{0};
    std::vector<double> cos_theta;
    std::vector<double> theta_weights;
    std::vector<double> phi_nodes;
    std::vector<double> radial_nodes;
    std::vector<double> radial_weights;

    [[nodiscard]] std::vector<SpherePoint> points() const;
    [[nodiscard]] double weight_sum() const;
};

/// Exact for Y_lm conj(Y_l'm') with l + l' <= degree.
QuadratureRule sphere_quadrature(int degree);

/// Same angular rule with an n-point radial rule on [0, radius].
QuadratureRule ball_quadrature(int degree, int n_radial, double radius);

/// n-point Gauss-Legendre rule mapped to [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes, std::vector<double>& weights);

/// Quasi-uniform spiral point set, never exactly at a pole.
std::vector<Direction> fibonacci_directions(int n);

}  // namespace sphcav
