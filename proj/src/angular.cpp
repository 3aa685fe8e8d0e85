#include "sphcav/angular.hpp"

#include <cmath>
#include <string>

namespace sphcav {

namespace {

constexpr cplx I{0.0, 1.0};

cplx ycs(int l, int m, const Direction& dir) {
    return scalar_harmonic(l, m, dir, HarmonicConvention::CondonShortley);
}

void check_jm(int j, int m, const char* what) {
    if (j < 0 || std::abs(m) > j)
        throw Error(ErrorCode::Domain, std::string(what) + ": need |m| <= j, got j=" + std::to_string(j) +
                                           " m=" + std::to_string(m));
}

double sqrt0(double v) { return v > 0.0 ? std::sqrt(v) : 0.0; }

}  // namespace

CartesianVector spherical_basis_vector(int mu) {
    const double s = 1.0 / std::sqrt(2.0);
    switch (mu) {
        case 1: return {-s, -s * I, 0.0};
        case 0: return {0.0, 0.0, 1.0};
        case -1: return {s, -s * I, 0.0};
        default: throw Error(ErrorCode::Domain, "spherical basis index must be +1, 0 or -1");
    }
}

double cg_s1(int l, int j, int mu, int m) {
    if (l < 0 || j < 0 || std::abs(mu) > 1) return 0.0;
    if (std::abs(m) > j || std::abs(m - mu) > l) return 0.0;
    const double L = l;
    const double M = m;
    if (j == l + 1) {
        switch (mu) {
            case 1: return sqrt0((L + M) * (L + M + 1) / ((2 * L + 1) * (2 * L + 2)));
            case 0: return sqrt0((L - M + 1) * (L + M + 1) / ((2 * L + 1) * (L + 1)));
            default: return sqrt0((L - M) * (L - M + 1) / ((2 * L + 1) * (2 * L + 2)));
        }
    }
    if (j == l && l > 0) {
        switch (mu) {
            case 1: return sqrt0((L + M) * (L - M + 1) / (2 * L * (L + 1)));
            case 0: return -M / std::sqrt(L * (L + 1));
            default: return -sqrt0((L - M) * (L + M + 1) / (2 * L * (L + 1)));
        }
    }
    if (j == l - 1) {
        switch (mu) {
            case 1: return sqrt0((L - M) * (L - M + 1) / (2 * L * (2 * L + 1)));
            case 0: return -sqrt0((L - M) * (L + M) / (L * (2 * L + 1)));
            default: return sqrt0((L + M + 1) * (L + M) / (2 * L * (2 * L + 1)));
        }
    }
    return 0.0;
}

CartesianVector vsh_coupled(int j, int l, int m, const Direction& dir) {
    check_jm(j, m, "vsh_coupled");
    if (l < 0 || std::abs(l - j) > 1 || (j == 0 && l != 1))
        throw Error(ErrorCode::Domain, "vsh_coupled: l must be in {j-1, j, j+1}, got j=" + std::to_string(j) +
                                           " l=" + std::to_string(l));
    CartesianVector out;
    for (int mu = -1; mu <= 1; ++mu) {
        const double c = cg_s1(l, j, mu, m);
        if (c == 0.0) continue;
        out += (c * ycs(l, m - mu, dir)) * spherical_basis_vector(mu);
    }
    return out;
}

CartesianVector vsh(VshKind kind, int j, int m, const Direction& dir) {
    check_jm(j, m, "vsh");
    if (kind == VshKind::Longitudinal) return ycs(j, m, dir) * to_vector(dir.unit());
    if (j < 1) throw Error(ErrorCode::Domain, "vsh: electric and magnetic harmonics need j >= 1");
    if (kind == VshKind::Magnetic) return -I * vsh_coupled(j, j, m, dir);
    const double a = std::sqrt(j / (2.0 * j + 1.0));
    const double b = std::sqrt((j + 1.0) / (2.0 * j + 1.0));
    return a * vsh_coupled(j, j + 1, m, dir) + b * vsh_coupled(j, j - 1, m, dir);
}

CartesianVector vsh_gradient_form(VshKind kind, int j, int m, const Direction& dir) {
    check_jm(j, m, "vsh_gradient_form");
    if (kind == VshKind::Longitudinal) return ycs(j, m, dir) * to_vector(dir.unit());
    if (j < 1) throw Error(ErrorCode::Domain, "vsh_gradient_form needs j >= 1");
    const double st = std::sin(dir.theta);
    if (std::abs(st) < 1e-12) throw Error(ErrorCode::Domain, "vsh_gradient_form is not evaluated at the poles");
    const cplx y = ycs(j, m, dir);
    cplx dtheta = m * std::cos(dir.theta) / st * y;
    if (m < j) dtheta += std::sqrt((j - m) * (j + m + 1.0)) * std::polar(1.0, -dir.phi) * ycs(j, m + 1, dir);
    const cplx dphi_over_sin = I * static_cast<double>(m) * y / st;
    const double n = 1.0 / std::sqrt(j * (j + 1.0));
    const auto th = to_vector(dir.theta_hat());
    const auto ph = to_vector(dir.phi_hat());
    if (kind == VshKind::Electric) return n * (dtheta * th + dphi_over_sin * ph);
    // r x theta_hat = phi_hat, r x phi_hat = -theta_hat
    return n * (dtheta * ph - dphi_over_sin * th);
}

CartesianVector helicity_vsh(int lambda, int j, int m, const Direction& dir) {
    if (lambda == 0) return vsh(VshKind::Longitudinal, j, m, dir);
    if (lambda != 1 && lambda != -1) throw Error(ErrorCode::Domain, "helicity must be +1, 0 or -1");
    const auto e = vsh(VshKind::Electric, j, m, dir);
    const auto h = vsh(VshKind::Magnetic, j, m, dir);
    const double s = 1.0 / std::sqrt(2.0);
    if (lambda == 1) return (-s) * (e + I * h);
    return s * (e - I * h);
}

CartesianVector helicity_apply(const Direction& axis, const CartesianVector& v) {
    return I * cross(to_vector(axis.unit()), v);
}

}  // namespace sphcav
