#include "sphcav/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <string>

#include "sphcav/report.hpp"

namespace sphcav {

CheckReport CheckReport::make(std::string name, double residual, double tolerance, std::string details) {
    CheckReport r;
    r.name = std::move(name);
    r.max_residual = residual;
    r.tolerance = tolerance;
    r.pass = std::isfinite(residual) && residual < tolerance;
    r.details = std::move(details);
    return r;
}

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw Error(ErrorCode::Domain, "Gauss-Legendre rule needs at least one node");
    std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
        gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n)), &gsl_integration_glfixed_table_free);
    if (!table) throw Error(ErrorCode::Domain, "Gauss-Legendre table allocation failed");
    nodes.resize(static_cast<std::size_t>(n));
    weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        gsl_integration_glfixed_point(a, b, static_cast<std::size_t>(i), &nodes[static_cast<std::size_t>(i)],
                                      &weights[static_cast<std::size_t>(i)], table.get());
}

QuadratureRule sphere_quadrature(int degree) {
    if (degree < 0 || degree > kMaxSphereDegree)
        throw Error(ErrorCode::Domain, "sphere quadrature degree out of range [0, 64]: " + std::to_string(degree));
    QuadratureRule q;
    q.degree = degree;
    gauss_legendre(degree / 2 + 1, -1.0, 1.0, q.cos_theta, q.theta_weights);
    const int nphi = degree + 1;
    for (int k = 0; k < nphi; ++k) q.phi_nodes.push_back(2.0 * pi * k / nphi);
    return q;
}

QuadratureRule ball_quadrature(int degree, int n_radial, double radius) {
    QuadratureRule q = sphere_quadrature(degree);
    gauss_legendre(n_radial, 0.0, radius, q.radial_nodes, q.radial_weights);
    return q;
}

std::vector<SpherePoint> QuadratureRule::points() const {
    std::vector<SpherePoint> pts;
    pts.reserve(cos_theta.size() * phi_nodes.size());
    const double wphi = 2.0 * pi / static_cast<double>(phi_nodes.size());
    for (std::size_t i = 0; i < cos_theta.size(); ++i)
        for (double phi : phi_nodes) pts.push_back({{std::acos(cos_theta[i]), phi}, theta_weights[i] * wphi});
    return pts;
}

double QuadratureRule::weight_sum() const {
    double s = 0.0;
    for (const auto& p : points()) s += p.weight;
    return s;
}

std::vector<Direction> fibonacci_directions(int n) {
    if (n < 1) throw Error(ErrorCode::Domain, "need at least one direction");
    const double golden = pi * (3.0 - std::sqrt(5.0));
    std::vector<Direction> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / n;
        double phi = std::fmod(golden * i, 2.0 * pi);
        out.push_back({std::acos(z), phi});
    }
    return out;
}

}  // namespace sphcav
