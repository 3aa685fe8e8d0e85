#include "sphcav/rotations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sphcav {

namespace {

long double factorial(int n) {
    static const auto table = [] {
        std::array<long double, 2 * kMaxWignerJ + 2> t{};
        t[0] = 1.0L;
        for (std::size_t k = 1; k < t.size(); ++k) t[k] = t[k - 1] * static_cast<long double>(k);
        return t;
    }();
    return table[static_cast<std::size_t>(n)];
}

void check_j(int j) {
    if (j < 0 || j > kMaxWignerJ)
        throw Error(ErrorCode::Domain, "Wigner matrix order out of range [0, 20]: " + std::to_string(j));
}

void check_jm(int j, int m, int lambda) {
    check_j(j);
    if (std::abs(m) > j) throw Error(ErrorCode::Domain, "need |m| <= j");
    if (lambda != 1 && lambda != -1) throw Error(ErrorCode::Domain, "helicity must be +1 or -1");
    if (std::abs(lambda) > j) throw Error(ErrorCode::Domain, "need |lambda| <= j");
}

/// Active-convention d^j_{m'm}(beta) from Wigner's sum.
double active_small_d(int j, int mp, int m, double beta) {
    const long double c = std::cos(static_cast<long double>(beta) / 2);
    const long double s = std::sin(static_cast<long double>(beta) / 2);
    const long double pref = std::sqrt(factorial(j + mp) * factorial(j - mp) * factorial(j + m) * factorial(j - m));
    long double sum = 0.0L;
    const int kmin = std::max(0, m - mp);
    const int kmax = std::min(j + m, j - mp);
    for (int k = kmin; k <= kmax; ++k) {
        const long double den = factorial(j + m - k) * factorial(k) * factorial(mp - m + k) * factorial(j - mp - k);
        const long double t = std::pow(c, 2 * j + m - mp - 2 * k) * std::pow(s, mp - m + 2 * k) / den;
        sum += ((mp - m + k) % 2 == 0) ? t : -t;
    }
    return static_cast<double>(pref * sum);
}

}  // namespace

WignerMatrix::WignerMatrix(int j) : j_(j) {
    check_j(j);
    data_.assign(static_cast<std::size_t>(dim() * dim()), cplx{});
}

std::size_t WignerMatrix::index(int mp, int m) const {
    if (std::abs(mp) > j_ || std::abs(m) > j_) throw Error(ErrorCode::Domain, "Wigner matrix index out of range");
    return static_cast<std::size_t>((j_ - mp) * dim() + (j_ - m));
}

WignerMatrix WignerMatrix::adjoint() const {
    WignerMatrix out(j_);
    for (int a = -j_; a <= j_; ++a)
        for (int b = -j_; b <= j_; ++b) out(a, b) = std::conj((*this)(b, a));
    return out;
}

WignerMatrix WignerMatrix::operator*(const WignerMatrix& o) const {
    if (o.j_ != j_) throw Error(ErrorCode::LengthMismatch, "Wigner matrix product of different orders");
    WignerMatrix out(j_);
    for (int a = -j_; a <= j_; ++a)
        for (int b = -j_; b <= j_; ++b) {
            cplx s{};
            for (int c = -j_; c <= j_; ++c) s += (*this)(a, c) * o(c, b);
            out(a, b) = s;
        }
    return out;
}

double WignerMatrix::unitarity_residual() const {
    const WignerMatrix p = (*this) * adjoint();
    double r = 0.0;
    for (int a = -j_; a <= j_; ++a)
        for (int b = -j_; b <= j_; ++b) r = std::max(r, std::abs(p(a, b) - (a == b ? 1.0 : 0.0)));
    return r;
}

double WignerMatrix::max_abs_diff(const WignerMatrix& o) const {
    if (o.j_ != j_) throw Error(ErrorCode::LengthMismatch, "Wigner matrix comparison of different orders");
    double r = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k) r = std::max(r, std::abs(data_[k] - o.data_[k]));
    return r;
}

double wigner_small_d(int j, int mp, int m, double beta) {
    check_j(j);
    if (std::abs(mp) > j || std::abs(m) > j) throw Error(ErrorCode::Domain, "wigner_small_d index out of range");
    return active_small_d(j, m, mp, beta);
}

cplx wigner_d_element(int j, int mp, int m, const EulerAngles& a) {
    return std::polar(1.0, mp * a.gamma) * wigner_small_d(j, mp, m, a.beta) * std::polar(1.0, m * a.alpha);
}

WignerMatrix wigner_d(int j, const EulerAngles& angles) {
    WignerMatrix d(j);
    for (int mp = -j; mp <= j; ++mp)
        for (int m = -j; m <= j; ++m) d(mp, m) = wigner_d_element(j, mp, m, angles);
    return d;
}

SphericalComponents rotate_spherical(const SphericalComponents& v, const EulerAngles& angles) {
    const WignerMatrix d = wigner_d(1, angles);
    SphericalComponents out;
    for (int s = -1; s <= 1; ++s) {
        cplx acc{};
        for (int sp = -1; sp <= 1; ++sp) acc += std::conj(d(s, sp)) * v[sp];
        out[s] = acc;
    }
    return out;
}

std::array<double, 9> cartesian_rotation_matrix(const EulerAngles& a) {
    auto rz_t = [](double t) {
        const double c = std::cos(t), s = std::sin(t);
        return std::array<double, 9>{c, s, 0, -s, c, 0, 0, 0, 1};
    };
    auto ry_t = [](double t) {
        const double c = std::cos(t), s = std::sin(t);
        return std::array<double, 9>{c, 0, -s, 0, 1, 0, s, 0, c};
    };
    auto mul = [](const std::array<double, 9>& p, const std::array<double, 9>& q) {
        std::array<double, 9> r{};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) r[3 * i + k] += p[3 * i + l] * q[3 * l + k];
        return r;
    };
    return mul(rz_t(a.gamma), mul(ry_t(a.beta), rz_t(a.alpha)));
}

std::vector<cplx> rotate_jm_coefficients(int j, const std::vector<cplx>& coeffs, const EulerAngles& angles) {
    check_j(j);
    if (coeffs.size() != static_cast<std::size_t>(2 * j + 1))
        throw Error(ErrorCode::LengthMismatch, "rotate_jm_coefficients: expected " + std::to_string(2 * j + 1) +
                                                   " coefficients, got " + std::to_string(coeffs.size()));
    const WignerMatrix d = wigner_d(j, angles);
    std::vector<cplx> out(coeffs.size());
    for (int mp = -j; mp <= j; ++mp) {
        cplx acc{};
        for (int m = -j; m <= j; ++m) acc += d(mp, m) * coeffs[static_cast<std::size_t>(m + j)];
        out[static_cast<std::size_t>(mp + j)] = acc;
    }
    return out;
}

CartesianVector helicity_polarization(int lambda, const Direction& k) {
    if (lambda != 1 && lambda != -1) throw Error(ErrorCode::Domain, "helicity must be +1 or -1");
    const EulerAngles a{k.phi, k.theta, 0.0};
    CartesianVector e;
    for (int sp = -1; sp <= 1; ++sp) {
        const cplx c = std::conj(wigner_d_element(1, lambda, sp, a));
        const double s = 1.0 / std::sqrt(2.0);
        const CartesianVector b = sp == 0 ? CartesianVector{0.0, 0.0, 1.0}
                                          : CartesianVector{-sp * s, cplx(0.0, -s), 0.0};
        e += c * b;
    }
    return e;
}

CartesianVector spherical_wave_helicity(int j, int m, int lambda, const Direction& dir) {
    check_jm(j, m, lambda);
    const double n = std::sqrt((2.0 * j + 1.0) / (4.0 * pi));
    return (n * wigner_d_element(j, lambda, m, {dir.phi, dir.theta, 0.0})) * helicity_polarization(lambda, dir);
}

cplx plane_to_spherical_coefficient(int j, int m, int lambda, const Direction& p_dir) {
    check_jm(j, m, lambda);
    const double n = std::sqrt((2.0 * j + 1.0) / (4.0 * pi));
    return n * std::conj(wigner_d_element(j, lambda, m, {p_dir.phi, p_dir.theta, 0.0}));
}

}  // namespace sphcav
