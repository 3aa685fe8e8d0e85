#include "sphcav/modes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "roots.hpp"
#include "sphcav/angular.hpp"
#include "sphcav/quadrature.hpp"
#include "sphcav/specfun.hpp"

namespace sphcav {

namespace {

constexpr double kScanStart = 0.05;
constexpr double kScanStep = pi / 8.0;
constexpr double kDenominatorFloor = 1e-14;
constexpr double kCurlStep = 1e-4;  // in units of R

void check_j(int j) {
    if (j < 1 || j > kMaxBesselOrder - 2) throw Error(ErrorCode::Domain, "mode order j out of range: " + std::to_string(j));
}

const char* tau_name(Tau t) { return t == Tau::Electric ? "E" : "M"; }

std::string mode_label(const ModeIndex& i) {
    std::ostringstream os;
    os << tau_name(i.tau) << " j=" << i.j << " n=" << i.n;
    return os.str();
}

/// (R^3 / 2)[j_l^2 - j_{l-1} j_{l+1}] over R^3, i.e. int_0^1 j_l(x s)^2 s^2 ds.
double lommel(int l, double x) {
    const double lo = l == 0 ? std::cos(x) / x : spherical_bessel_j(l - 1, x);
    const double jl = spherical_bessel_j(l, x);
    return 0.5 * (jl * jl - lo * spherical_bessel_j(l + 1, x));
}

}  // namespace

void CavityConfig::validate() const {
    if (!(radius > 0.0) || !(c > 0.0) || !(hbar > 0.0) || !(epsilon0 > 0.0) || !std::isfinite(radius) ||
        !std::isfinite(c) || !std::isfinite(hbar) || !std::isfinite(epsilon0))
        throw Error(ErrorCode::InvalidArgument, "cavity constants must be finite and strictly positive");
}

double magnetic_root_equation(int j, double x) {
    check_j(j);
    return bessel_j_halfint(2 * j + 1, x);
}

double electric_root_equation(int j, double x) {
    check_j(j);
    return j * bessel_j_halfint(2 * j + 3, x) - (j + 1) * bessel_j_halfint(2 * j - 1, x);
}

double root_equation(Tau tau, int j, double x) {
    return tau == Tau::Electric ? electric_root_equation(j, x) : magnetic_root_equation(j, x);
}

std::vector<double> find_roots(Tau tau, int j, int count) {
    check_j(j);
    if (count < 1 || count > kMaxRootCount) throw Error(ErrorCode::Domain, "root count out of range [1, 64]");
    const std::string label = std::string(tau_name(tau)) + " j=" + std::to_string(j);
    if (tau == Tau::Magnetic) {
        return detail::scan_roots([j](double x) { return bessel_j_halfint(2 * j + 1, x); },
                                  [j](double x) { return bessel_j_halfint(2 * j + 3, x); }, count, kScanStart,
                                  kScanStep, label);
    }
    return detail::scan_roots([j](double x) { return electric_root_equation(j, x); },
                              [j](double x) { return x * spherical_bessel_j(j, x); }, count, kScanStart, kScanStep,
                              label);
}

std::vector<double> bessel_halfint_zeros(int two_nu, int count) {
    if (two_nu <= 0 || two_nu % 2 == 0 || two_nu > 2 * kMaxBesselOrder - 1)
        throw Error(ErrorCode::Domain, "bessel_halfint_zeros needs odd positive two_nu");
    if (count < 1 || count > kMaxRootCount) throw Error(ErrorCode::Domain, "root count out of range [1, 64]");
    return detail::scan_roots([two_nu](double x) { return bessel_j_halfint(two_nu, x); },
                              [two_nu](double x) { return bessel_j_halfint(two_nu + 2, x); }, count, kScanStart,
                              kScanStep, "J_" + std::to_string(two_nu) + "/2");
}

double normalization_constant(Tau tau, int j, double x_root, const CavityConfig& config) {
    check_j(j);
    config.validate();
    if (tau == Tau::Electric) return energy_normalization_constant(tau, j, x_root, config);
    const double den = std::abs(bessel_j_halfint(2 * j + 3, x_root));
    if (den < kDenominatorFloor) throw Error(ErrorCode::Degenerate, "normalization denominator vanishes");
    return std::sqrt(8.0 * config.hbar / (pi * config.epsilon0 * config.c)) / (config.radius * den);
}

double energy_normalization_constant(Tau tau, int j, double x_root, const CavityConfig& config) {
    check_j(j);
    config.validate();
    if (!(x_root > 0.0)) throw Error(ErrorCode::Domain, "root must be positive");
    const double integral =
        tau == Tau::Magnetic ? lommel(j, x_root) : j * lommel(j + 1, x_root) + (j + 1) * lommel(j - 1, x_root);
    if (std::abs(integral) < kDenominatorFloor) throw Error(ErrorCode::Degenerate, "normalization denominator vanishes");
    return std::sqrt(2.0 * config.hbar / (config.epsilon0 * config.c * x_root * integral)) / config.radius;
}

ModeSpec resolve_mode(const ModeIndex& index, const CavityConfig& config) {
    config.validate();
    if (index.j < 1 || index.j > 20 || std::abs(index.m) > index.j || index.n < 1 || index.n > kMaxRootCount)
        throw Error(ErrorCode::Unresolvable, "mode index cannot be resolved: " + mode_label(index) +
                                                 " m=" + std::to_string(index.m));
    const double x = find_roots(index.tau, index.j, index.n).back();
    ModeSpec s;
    s.index = index;
    s.x_root = x;
    s.omega = config.c * x / config.radius;
    s.norm_const = normalization_constant(index.tau, index.j, x, config);
    s.degeneracy = 2 * index.j + 1;
    return s;
}

CartesianVector vector_potential_at(const ModeSpec& spec, const std::array<double, 3>& p, const CavityConfig& config) {
    const double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    const Direction dir = r > 0.0 ? Direction::from_cartesian(p[0], p[1], p[2]) : Direction{};
    const double kr = spec.x_root * r / config.radius;
    const int j = spec.index.j;
    const int m = spec.index.m;
    if (spec.index.tau == Tau::Magnetic)
        return (spec.norm_const * spherical_bessel_j(j, kr)) * vsh(VshKind::Magnetic, j, m, dir);
    return spec.norm_const * ((std::sqrt(static_cast<double>(j)) * spherical_bessel_j(j + 1, kr)) *
                                  vsh_coupled(j, j + 1, m, dir) -
                              (std::sqrt(j + 1.0) * spherical_bessel_j(j - 1, kr)) * vsh_coupled(j, j - 1, m, dir));
}

CartesianVector magnetic_field_at(const ModeSpec& spec, const std::array<double, 3>& p, const CavityConfig& config) {
    auto gradient_row = [&](int axis, double h) {
        auto q1 = p;
        auto q2 = p;
        q1[static_cast<std::size_t>(axis)] += h;
        q2[static_cast<std::size_t>(axis)] -= h;
        return (1.0 / (2.0 * h)) * (vector_potential_at(spec, q1, config) - vector_potential_at(spec, q2, config));
    };
    const double h = kCurlStep * config.radius;
    CartesianVector d[3];
    for (int a = 0; a < 3; ++a)
        d[a] = (1.0 / 3.0) * (4.0 * gradient_row(a, 0.5 * h) - gradient_row(a, h));
    // d[a] holds dA/dx_a
    return {d[1].z - d[2].y, d[2].x - d[0].z, d[0].y - d[1].x};
}

FieldSample mode_field(const ModeSpec& spec, double r, const Direction& dir, const CavityConfig& config) {
    config.validate();
    if (!(r >= 0.0) || r > config.radius * (1.0 + 1e-12))
        throw Error(ErrorCode::Domain, "mode_field: radius outside [0, R]");
    const auto u = dir.unit();
    const std::array<double, 3> p{r * u[0], r * u[1], r * u[2]};
    FieldSample s;
    s.r = r;
    s.dir = dir;
    s.A = vector_potential_at(spec, p, config);
    s.E = cplx(0.0, spec.omega) * s.A;
    s.B = magnetic_field_at(spec, p, config);
    return s;
}

CheckReport boundary_residual(const ModeSpec& spec, const CavityConfig& config, int n_dirs, double tolerance) {
    config.validate();
    const auto dirs = fibonacci_directions(n_dirs);
    double peak_e = 0.0;
    double peak_b = 0.0;
    constexpr int kRadii = 32;
    for (int k = 0; k <= kRadii; ++k) {
        const double r = config.radius * k / kRadii;
        for (const auto& d : dirs) {
            const auto s = mode_field(spec, r, d, config);
            peak_e = std::max(peak_e, s.E.norm());
            peak_b = std::max(peak_b, s.B.norm());
        }
    }
    double res_e = 0.0;
    double res_b = 0.0;
    for (const auto& d : dirs) {
        const auto s = mode_field(spec, config.radius, d, config);
        res_e = std::max({res_e, std::abs(dot(s.E, to_vector(d.theta_hat()))), std::abs(dot(s.E, to_vector(d.phi_hat())))});
        res_b = std::max(res_b, std::abs(dot(s.B, to_vector(d.unit()))));
    }
    res_e /= peak_e;
    res_b /= peak_b;
    std::ostringstream os;
    os.precision(3);
    os << mode_label(spec.index) << " dirs=" << n_dirs << " tangential_E=" << res_e << " normal_B=" << res_b;
    return CheckReport::make("modes.boundary", std::max(res_e, res_b), tolerance, os.str());
}

std::vector<ModeSpec> spectrum(int j_max, int n_max, const CavityConfig& config) {
    config.validate();
    if (j_max < 1 || j_max > 20) throw Error(ErrorCode::Domain, "spectrum j_max out of range [1, 20]");
    if (n_max < 1 || n_max > 32) throw Error(ErrorCode::Domain, "spectrum n_max out of range [1, 32]");
    std::vector<ModeSpec> out;
    for (Tau tau : {Tau::Electric, Tau::Magnetic}) {
        for (int j = 1; j <= j_max; ++j) {
            const auto roots = find_roots(tau, j, n_max);
            for (int n = 1; n <= n_max; ++n) {
                ModeSpec s;
                s.index = {tau, j, 0, n};
                s.x_root = roots[static_cast<std::size_t>(n - 1)];
                s.omega = config.c * s.x_root / config.radius;
                s.norm_const = normalization_constant(tau, j, s.x_root, config);
                s.degeneracy = 2 * j + 1;
                out.push_back(s);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ModeSpec& a, const ModeSpec& b) {
        if (a.omega != b.omega) return a.omega < b.omega;
        if (a.index.tau != b.index.tau) return a.index.tau == Tau::Electric;
        if (a.index.j != b.index.j) return a.index.j < b.index.j;
        return a.index.n < b.index.n;
    });
    return out;
}

EnergyTotal hamiltonian_energy(const std::map<ModeIndex, int>& occupations, bool include_zero_point,
                               const CavityConfig& config) {
    config.validate();
    EnergyTotal total;
    for (const auto& [index, count] : occupations) {
        if (count < 0) throw Error(ErrorCode::InvalidArgument, "occupation numbers must be >= 0");
        const ModeSpec s = resolve_mode(index, config);
        total.energy += config.hbar * s.omega * (count + (include_zero_point ? 0.5 : 0.0));
        total.photon_number += count;
    }
    return total;
}

ModeEnergy mode_energy_quadrature(const ModeSpec& spec, const CavityConfig& config, bool with_b, int n_radial) {
    config.validate();
    const auto rule = ball_quadrature(std::min(2 * spec.index.j + 4, kMaxSphereDegree), n_radial, config.radius);
    const auto pts = rule.points();
    double a2 = 0.0;
    double b2 = 0.0;
    for (std::size_t i = 0; i < rule.radial_nodes.size(); ++i) {
        const double r = rule.radial_nodes[i];
        const double wr = rule.radial_weights[i] * r * r;
        for (const auto& sp : pts) {
            const auto u = sp.dir.unit();
            const std::array<double, 3> p{r * u[0], r * u[1], r * u[2]};
            a2 += wr * sp.weight * vector_potential_at(spec, p, config).norm2();
            if (with_b) b2 += wr * sp.weight * magnetic_field_at(spec, p, config).norm2();
        }
    }
    ModeEnergy e;
    const double w2 = spec.omega * spec.omega;
    e.from_potential = 0.5 * w2 * config.epsilon0 * a2;
    e.electric = 0.25 * config.epsilon0 * w2 * a2;
    e.magnetic = 0.25 * config.epsilon0 * config.c * config.c * b2;
    return e;
}

}  // namespace sphcav
