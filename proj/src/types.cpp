#include "sphcav/types.hpp"

#include <algorithm>
#include <cmath>

namespace sphcav {

Direction Direction::from_cartesian(double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    if (!(r > 0.0)) throw Error(ErrorCode::Domain, "direction from zero vector");
    double phi = std::atan2(y, x);
    if (phi < 0.0) phi += 2.0 * pi;
    if (phi >= 2.0 * pi) phi -= 2.0 * pi;
    return {std::acos(std::clamp(z / r, -1.0, 1.0)), phi};
}

std::array<double, 3> Direction::unit() const {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

std::array<double, 3> Direction::theta_hat() const {
    const double ct = std::cos(theta);
    return {ct * std::cos(phi), ct * std::sin(phi), -std::sin(theta)};
}

std::array<double, 3> Direction::phi_hat() const { return {-std::sin(phi), std::cos(phi), 0.0}; }

Direction Direction::antipode() const {
    double p = phi + pi;
    if (p >= 2.0 * pi) p -= 2.0 * pi;
    return {pi - theta, p};
}

double CartesianVector::norm() const { return std::sqrt(norm2()); }

CartesianVector to_vector(const std::array<double, 3>& v) { return {v[0], v[1], v[2]}; }

cplx dot(const CartesianVector& a, const CartesianVector& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

cplx inner(const CartesianVector& a, const CartesianVector& b) {
    return std::conj(a.x) * b.x + std::conj(a.y) * b.y + std::conj(a.z) * b.z;
}

CartesianVector cross(const CartesianVector& a, const CartesianVector& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double max_abs_diff(const CartesianVector& a, const CartesianVector& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

cplx SphericalComponents::operator[](int mu) const {
    switch (mu) {
        case 1: return c_plus;
        case 0: return c_zero;
        case -1: return c_minus;
        default: throw Error(ErrorCode::Domain, "spherical component index must be +1, 0 or -1");
    }
}

cplx& SphericalComponents::operator[](int mu) {
    switch (mu) {
        case 1: return c_plus;
        case 0: return c_zero;
        case -1: return c_minus;
        default: throw Error(ErrorCode::Domain, "spherical component index must be +1, 0 or -1");
    }
}

SphericalComponents to_spherical(const CartesianVector& v) {
    const double s = 1.0 / std::sqrt(2.0);
    const cplx i{0.0, 1.0};
    return {-s * (v.x + i * v.y), v.z, s * (v.x - i * v.y)};
}

CartesianVector to_cartesian(const SphericalComponents& c) {
    const double s = 1.0 / std::sqrt(2.0);
    const cplx i{0.0, 1.0};
    return {s * (c.c_minus - c.c_plus), i * s * (c.c_plus + c.c_minus), c.c_zero};
}

}  // namespace sphcav
