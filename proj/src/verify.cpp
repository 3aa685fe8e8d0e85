#include "sphcav/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <sstream>

#include "sphcav/entangle.hpp"
#include "sphcav/modes.hpp"
#include "sphcav/rotations.hpp"
#include "sphcav/selection_rules.hpp"
#include "sphcav/specfun.hpp"

namespace sphcav {

namespace {

constexpr cplx I{0.0, 1.0};

cplx ipow(int l) {
    static const cplx t[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return t[((l % 4) + 4) % 4];
}

cplx ycs(int l, int m, const Direction& d) { return scalar_harmonic(l, m, d, HarmonicConvention::CondonShortley); }

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

Direction random_direction(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> p(0.0, 2.0 * pi);
    return {std::acos(u(rng)), p(rng)};
}

EulerAngles random_angles(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> a(-pi, pi);
    std::uniform_real_distribution<double> b(0.0, pi);
    return {a(rng), b(rng), a(rng)};
}

/// Test directions for field comparisons: 12 spiral points plus both poles.
std::vector<Direction> probe_directions() {
    auto d = fibonacci_directions(12);
    d.push_back({0.0, 0.0});
    d.push_back({pi, 0.0});
    return d;
}

struct NamedFunction {
    std::string label;
    std::function<CartesianVector(const Direction&)> f;
};

std::vector<NamedFunction> family_functions(OrthoFamily family, int l_max) {
    std::vector<NamedFunction> out;
    auto add = [&](std::string label, std::function<CartesianVector(const Direction&)> f) {
        out.push_back({std::move(label), std::move(f)});
    };
    for (int j = 0; j <= l_max; ++j)
        for (int m = -j; m <= j; ++m) {
            const std::string jm = std::to_string(j) + "," + std::to_string(m);
            switch (family) {
                case OrthoFamily::Scalar:
                    add("Y" + jm, [j, m](const Direction& d) { return CartesianVector{ycs(j, m, d), 0.0, 0.0}; });
                    break;
                case OrthoFamily::CoupledVsh:
                    for (int l = std::max(0, j - 1); l <= j + 1; ++l) {
                        if (j == 0 && l != 1) continue;
                        add("Y" + std::to_string(j) + std::to_string(l) + "," + std::to_string(m),
                            [j, l, m](const Direction& d) { return vsh_coupled(j, l, m, d); });
                    }
                    break;
                case OrthoFamily::EmlVsh:
                    add("L" + jm, [j, m](const Direction& d) { return vsh(VshKind::Longitudinal, j, m, d); });
                    if (j >= 1) {
                        add("E" + jm, [j, m](const Direction& d) { return vsh(VshKind::Electric, j, m, d); });
                        add("M" + jm, [j, m](const Direction& d) { return vsh(VshKind::Magnetic, j, m, d); });
                    }
                    break;
                case OrthoFamily::HelicityVsh:
                    add("H0:" + jm, [j, m](const Direction& d) { return helicity_vsh(0, j, m, d); });
                    if (j >= 1)
                        for (int lam : {1, -1})
                            add("H" + std::to_string(lam) + ":" + jm,
                                [lam, j, m](const Direction& d) { return helicity_vsh(lam, j, m, d); });
                    break;
                case OrthoFamily::SphericalWaveHelicity:
                    if (j >= 1)
                        for (int lam : {1, -1})
                            add("psi" + std::to_string(lam) + ":" + jm,
                                [lam, j, m](const Direction& d) { return spherical_wave_helicity(j, m, lam, d); });
                    break;
            }
        }
    return out;
}

const char* family_name(OrthoFamily f) {
    switch (f) {
        case OrthoFamily::Scalar: return "scalar";
        case OrthoFamily::CoupledVsh: return "coupled_vsh";
        case OrthoFamily::EmlVsh: return "eml_vsh";
        case OrthoFamily::HelicityVsh: return "helicity_vsh";
        case OrthoFamily::SphericalWaveHelicity: return "spherical_wave_helicity";
    }
    return "?";
}

const char* fourier_name(FourierKind k) {
    switch (k) {
        case FourierKind::Scalar: return "scalar";
        case FourierKind::Coupled: return "coupled";
        case FourierKind::M: return "M";
        case FourierKind::E: return "E";
    }
    return "?";
}

}  // namespace

CheckReport check_orthonormality(OrthoFamily family, int l_max, double tolerance) {
    if (l_max < 0 || l_max > kMaxOrthoL) throw Error(ErrorCode::Domain, "orthonormality l_max out of range [0, 8]");
    const auto funcs = family_functions(family, l_max);
    const auto pts = sphere_quadrature(2 * l_max + 4).points();
    std::vector<std::vector<CartesianVector>> samples(funcs.size());
    for (std::size_t a = 0; a < funcs.size(); ++a) {
        samples[a].reserve(pts.size());
        for (const auto& p : pts) samples[a].push_back(funcs[a].f(p.dir));
    }
    double worst = 0.0;
    std::string where;
    for (std::size_t a = 0; a < funcs.size(); ++a)
        for (std::size_t b = a; b < funcs.size(); ++b) {
            cplx g{};
            for (std::size_t p = 0; p < pts.size(); ++p) g += pts[p].weight * inner(samples[a][p], samples[b][p]);
            const double r = std::abs(g - (a == b ? 1.0 : 0.0));
            if (r > worst) {
                worst = r;
                where = funcs[a].label + " vs " + funcs[b].label;
            }
        }
    return CheckReport::make(std::string("orthonormality.") + family_name(family), worst, tolerance,
                             "l_max=" + std::to_string(l_max) + " functions=" + std::to_string(funcs.size()) +
                                 (where.empty() ? "" : " worst " + where));
}

CheckReport check_vsh_fourier(int j, FourierKind kind, double kr, double tolerance) {
    if (j < 0 || j > 4) throw Error(ErrorCode::Domain, "Fourier check needs 0 <= j <= 4");
    if (kr < 0.0 || kr > 20.0) throw Error(ErrorCode::Domain, "Fourier check needs 0 <= kr <= 20");
    if ((kind == FourierKind::M || kind == FourierKind::E) && j < 1)
        throw Error(ErrorCode::Domain, "electric and magnetic harmonics need j >= 1");
    const auto pts = sphere_quadrature(kMaxSphereDegree).points();
    const auto probes = probe_directions();
    auto g = [kr](int l) { return 4.0 * pi * ipow(l) * spherical_bessel_j(l, kr); };
    double worst = 0.0;
    double peak = 0.0;
    for (int m = -j; m <= j; ++m) {
        std::vector<std::pair<std::function<CartesianVector(const Direction&)>, std::function<CartesianVector(const Direction&)>>> cases;
        switch (kind) {
            case FourierKind::Scalar:
                cases.push_back({[j, m](const Direction& d) { return CartesianVector{ycs(j, m, d), 0.0, 0.0}; },
                                 [&, j, m](const Direction& d) { return CartesianVector{g(j) * ycs(j, m, d), 0.0, 0.0}; }});
                break;
            case FourierKind::Coupled:
                for (int l = std::max(0, j - 1); l <= j + 1; ++l) {
                    if (j == 0 && l != 1) continue;
                    cases.push_back({[j, l, m](const Direction& d) { return vsh_coupled(j, l, m, d); },
                                     [&, j, l, m](const Direction& d) { return g(l) * vsh_coupled(j, l, m, d); }});
                }
                break;
            case FourierKind::M:
                cases.push_back({[j, m](const Direction& d) { return vsh(VshKind::Magnetic, j, m, d); },
                                 [&, j, m](const Direction& d) { return g(j) * vsh(VshKind::Magnetic, j, m, d); }});
                break;
            case FourierKind::E:
                cases.push_back({[j, m](const Direction& d) { return vsh(VshKind::Electric, j, m, d); },
                                 [&, j, m](const Direction& d) {
                                     const double s = 1.0 / std::sqrt(2.0 * j + 1.0);
                                     return (s * std::sqrt(static_cast<double>(j)) * g(j + 1)) * vsh_coupled(j, j + 1, m, d) +
                                            (s * std::sqrt(j + 1.0) * g(j - 1)) * vsh_coupled(j, j - 1, m, d);
                                 }});
                break;
        }
        for (const auto& [lhs_f, rhs_f] : cases) {
            std::vector<CartesianVector> samples;
            samples.reserve(pts.size());
            for (const auto& p : pts) samples.push_back(lhs_f(p.dir));
            for (const auto& r : probes) {
                const auto ru = r.unit();
                CartesianVector lhs;
                for (std::size_t q = 0; q < pts.size(); ++q) {
                    const auto ku = pts[q].dir.unit();
                    const double phase = kr * (ku[0] * ru[0] + ku[1] * ru[1] + ku[2] * ru[2]);
                    lhs += (pts[q].weight * std::polar(1.0, phase)) * samples[q];
                }
                const auto rhs = rhs_f(r);
                worst = std::max(worst, max_abs_diff(lhs, rhs));
                peak = std::max(peak, rhs.norm());
            }
        }
    }
    const double residual = worst / std::max(1.0, peak);
    return CheckReport::make(std::string("fourier.vsh.") + fourier_name(kind), residual, tolerance,
                             "j=" + std::to_string(j) + " kr=" + fmt(kr) + " peak=" + fmt(peak));
}

CheckReport check_plane_wave_expansion(double k, double r, const Direction& dir_k, const Direction& dir_r, int l_max,
                                       double tolerance) {
    if (l_max < 0 || l_max > kMaxBesselOrder) throw Error(ErrorCode::Domain, "plane-wave l_max out of range");
    const double kr = k * r;
    cplx sum{};
    for (int l = 0; l <= l_max; ++l) {
        cplx inner_sum{};
        for (int m = -l; m <= l; ++m) inner_sum += std::conj(ycs(l, m, dir_k)) * ycs(l, m, dir_r);
        sum += 4.0 * pi * ipow(l) * spherical_bessel_j(l, kr) * inner_sum;
    }
    const auto a = dir_k.unit();
    const auto b = dir_r.unit();
    const cplx exact = std::polar(1.0, kr * (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]));
    return CheckReport::make("plane_wave.expansion", std::abs(sum - exact), tolerance,
                             "kr=" + fmt(kr) + " l_max=" + std::to_string(l_max));
}

CheckReport check_bessel_integral_at(int two_nu, double alpha, double beta, bool same_root, double tolerance) {
    std::vector<double> x, w;
    gauss_legendre(256, 0.0, 1.0, x, w);
    double q = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        q += w[i] * x[i] * bessel_j_halfint(two_nu, alpha * x[i]) * bessel_j_halfint(two_nu, beta * x[i]);
    double expected = 0.0;
    if (same_root) {
        const double jn1 = bessel_j_halfint(two_nu + 2, alpha);
        expected = 0.5 * jn1 * jn1;
    }
    return CheckReport::make("bessel.integral", std::abs(q - expected), tolerance,
                             "nu=" + std::to_string(two_nu) + "/2 alpha=" + fmt(alpha) + " beta=" + fmt(beta) +
                                 " integral=" + fmt(q));
}

CheckReport check_bessel_integral(int two_nu, int alpha_idx, int beta_idx, double tolerance) {
    if (alpha_idx < 1 || beta_idx < 1) throw Error(ErrorCode::Domain, "zero indices start at 1");
    const auto zeros = bessel_halfint_zeros(two_nu, std::max(alpha_idx, beta_idx));
    return check_bessel_integral_at(two_nu, zeros[static_cast<std::size_t>(alpha_idx - 1)],
                                    zeros[static_cast<std::size_t>(beta_idx - 1)], alpha_idx == beta_idx, tolerance);
}

CheckReport check_bessel_recurrences(int l_max, double tolerance) {
    if (l_max < 0 || l_max > kMaxBesselOrder - 1) throw Error(ErrorCode::Domain, "recurrence l_max out of range");
    constexpr double h = 1e-5;
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double x = 0.5 + 49.5 * i / 200.0;
        for (int l = 0; l <= l_max; ++l) {
            const double d = (spherical_bessel_j(l, x + h) - spherical_bessel_j(l, x - h)) / (2.0 * h);
            const double jl = spherical_bessel_j(l, x);
            const double r1 = std::abs(d - (l / x * jl - spherical_bessel_j(l + 1, x)));
            worst = std::max(worst, r1);
            if (l >= 1) worst = std::max(worst, std::abs(d - (spherical_bessel_j(l - 1, x) - (l + 1) / x * jl)));
        }
    }
    return CheckReport::make("bessel.recurrence", worst, tolerance, "x in [0.5, 50], l <= " + std::to_string(l_max));
}

cplx VshProjection::coefficient(VshKind kind, int l, int m) const {
    for (const auto& c : coefficients)
        if (c.kind == kind && c.l == l && c.m == m) return c.value;
    return {};
}

VshProjection vsh_project(const VectorField& field, int l_max, double tolerance) {
    if (l_max < 0 || l_max > 30) throw Error(ErrorCode::Domain, "vsh_project l_max out of range [0, 30]");
    const auto pts = sphere_quadrature(std::min(2 * l_max + 4, kMaxSphereDegree)).points();
    std::vector<CartesianVector> samples;
    samples.reserve(pts.size());
    for (const auto& p : pts) samples.push_back(field(p.dir));
    VshProjection out;
    for (int l = 0; l <= l_max; ++l)
        for (int m = -l; m <= l; ++m)
            for (VshKind k : {VshKind::Longitudinal, VshKind::Electric, VshKind::Magnetic}) {
                if (l == 0 && k != VshKind::Longitudinal) continue;
                cplx c{};
                for (std::size_t q = 0; q < pts.size(); ++q) c += pts[q].weight * inner(vsh(k, l, m, pts[q].dir), samples[q]);
                out.coefficients.push_back({k, l, m, c});
            }
    auto probes = fibonacci_directions(25);
    probes.push_back({0.0, 0.0});
    double worst = 0.0;
    double peak = 0.0;
    for (const auto& d : probes) {
        CartesianVector sum;
        for (const auto& c : out.coefficients) sum += c.value * vsh(c.kind, c.l, c.m, d);
        const auto f = field(d);
        worst = std::max(worst, max_abs_diff(sum, f));
        peak = std::max(peak, f.norm());
    }
    out.reconstruction = CheckReport::make("vsh.completeness", worst / std::max(1.0, peak), tolerance,
                                           "l_max=" + std::to_string(l_max) + " probes=" + std::to_string(probes.size()));
    return out;
}

// ---------------------------------------------------------------------------
// default suite

namespace {

using Check = std::function<CheckReport(double tol, std::uint64_t seed)>;

CheckReport worst_of(const std::string& name, const std::vector<CheckReport>& parts, double tol) {
    double worst = 0.0;
    const CheckReport* w = nullptr;
    bool bad = false;
    for (const auto& p : parts) {
        if (!std::isfinite(p.max_residual)) {
            bad = true;
            w = &p;
            break;
        }
        if (w == nullptr || p.max_residual > worst) {
            worst = p.max_residual;
            w = &p;
        }
    }
    std::string details = std::to_string(parts.size()) + " cases";
    if (w != nullptr) details += ", worst: " + w->details;
    return CheckReport::make(name, bad ? std::nan("") : worst, tol, details);
}

const double kRefMagnetic[4][4] = {{4.49341, 7.72525, 10.9041, 17.2208},
                                   {5.76346, 12.3229, 15.5146, 18.689},
                                   {6.98793, 10.4171, 13.698, 20.1218},
                                   {8.18256, 11.7049, 15.0397, 18.3013}};
const double kRefElectric[4][4] = {{2.74371, 6.11676, 9.31662, 12.4859},
                                   {3.87024, 7.44309, 10.713, 13.9205},
                                   {4.97342, 8.72175, 12.0636, 15.3136},
                                   {6.06195, 9.96755, 13.3801, 16.6742}};

CheckReport suite_tables(double tol, std::uint64_t) {
    double worst = 0.0;
    for (int j = 1; j <= 4; ++j) {
        const auto mag = find_roots(Tau::Magnetic, j, 6);
        const auto ele = find_roots(Tau::Electric, j, 4);
        for (int n = 0; n < 4; ++n) {
            const double ref = kRefMagnetic[j - 1][n];
            double best = 1e300;
            for (double x : mag) best = std::min(best, std::abs(x - ref) / ref);
            worst = std::max(worst, best);
            worst = std::max(worst, std::abs(ele[static_cast<std::size_t>(n)] - kRefElectric[j - 1][n]) / kRefElectric[j - 1][n]);
        }
    }
    return CheckReport::make("modes.tables", worst, tol, "magnetic by membership, electric by position, j <= 4");
}

CheckReport suite_dual_condition(double tol, std::uint64_t) {
    int violations = 0;
    double min_gap = 1e300;
    for (int j = 1; j <= 6; ++j) {
        const auto e = find_roots(Tau::Electric, j, 8);
        const auto m = find_roots(Tau::Magnetic, j, 8);
        if (!(e[0] < m[0])) ++violations;
        for (double a : e)
            for (double b : m) min_gap = std::min(min_gap, std::abs(a - b));
    }
    if (!(min_gap > 1e-6)) ++violations;
    return CheckReport::make("modes.dual_condition", violations, tol,
                             "j <= 6, 8 roots each, min |E-M| gap=" + fmt(min_gap));
}

CheckReport suite_boundary(double tol, std::uint64_t) {
    std::vector<CheckReport> parts;
    for (Tau t : {Tau::Electric, Tau::Magnetic})
        for (int j = 1; j <= 3; ++j)
            for (int n = 1; n <= 2; ++n) parts.push_back(boundary_residual(resolve_mode({t, j, j > 1 ? 1 : 0, n}), {}, 64, tol));
    return worst_of("modes.boundary", parts, tol);
}

CheckReport suite_energy(double tol, std::uint64_t) {
    double worst = 0.0;
    for (Tau t : {Tau::Electric, Tau::Magnetic})
        for (int j = 1; j <= 3; ++j)
            for (int n = 1; n <= 3; ++n) {
                const auto s = resolve_mode({t, j, 0, n});
                const auto e = mode_energy_quadrature(s);
                worst = std::max(worst, std::abs(e.from_potential / s.omega - 1.0));
            }
    return CheckReport::make("modes.energy", worst, tol, "j <= 3, n <= 3, radial GL 256");
}

CheckReport suite_equipartition(double tol, std::uint64_t) {
    double worst = 0.0;
    for (Tau t : {Tau::Electric, Tau::Magnetic})
        for (int j = 1; j <= 2; ++j)
            for (int n = 1; n <= 2; ++n) {
                const auto s = resolve_mode({t, j, 1, n});
                const auto e = mode_energy_quadrature(s, {}, true);
                worst = std::max(worst, std::abs(e.magnetic / e.electric - 1.0));
            }
    return CheckReport::make("modes.equipartition", worst, tol, "j <= 2, n <= 2, full 3D quadrature");
}

CheckReport suite_parity(double tol, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 11);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const auto d = random_direction(rng);
        const auto a = d.antipode();
        for (int j = 0; j <= 4; ++j) {
            const double p = j % 2 == 0 ? 1.0 : -1.0;
            for (int m = -j; m <= j; ++m) {
                for (auto conv : {HarmonicConvention::LandauLifshitz, HarmonicConvention::CondonShortley})
                    worst = std::max(worst, std::abs(scalar_harmonic(j, m, a, conv) - p * scalar_harmonic(j, m, d, conv)));
                worst = std::max(worst, max_abs_diff(-1.0 * vsh(VshKind::Longitudinal, j, m, a), p * vsh(VshKind::Longitudinal, j, m, d)));
                if (j == 0) continue;
                worst = std::max(worst, max_abs_diff(-1.0 * vsh(VshKind::Electric, j, m, a), p * vsh(VshKind::Electric, j, m, d)));
                worst = std::max(worst, max_abs_diff(-1.0 * vsh(VshKind::Magnetic, j, m, a), -p * vsh(VshKind::Magnetic, j, m, d)));
            }
        }
    }
    return CheckReport::make("parity.vsh", worst, tol, "100 random directions, j <= 4");
}

CheckReport suite_helicity(double tol, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 13);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const auto d = random_direction(rng);
        for (int j = 1; j <= 4; ++j)
            for (int m = -j; m <= j; ++m) {
                const auto ye = vsh(VshKind::Electric, j, m, d);
                const auto ym = vsh(VshKind::Magnetic, j, m, d);
                worst = std::max(worst, max_abs_diff(helicity_apply(d, ye), I * ym));
                worst = std::max(worst, max_abs_diff(helicity_apply(d, ym), -I * ye));
                worst = std::max(worst, helicity_apply(d, helicity_vsh(0, j, m, d)).norm());
                for (int lam : {1, -1}) {
                    const auto h = helicity_vsh(lam, j, m, d);
                    worst = std::max(worst, max_abs_diff(helicity_apply(d, h), static_cast<double>(lam) * h));
                    worst = std::max(worst, max_abs_diff(helicity_apply(d, helicity_apply(d, h)), h));
                    const auto s = spherical_wave_helicity(j, m, lam, d);
                    worst = std::max(worst, max_abs_diff(helicity_apply(d, s), static_cast<double>(lam) * s));
                    worst = std::max(worst, std::abs(dot(to_vector(d.unit()), s)));
                }
            }
    }
    return CheckReport::make("helicity.eigen", worst, tol, "100 random directions, j <= 4");
}

CheckReport suite_shv(double tol, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 17);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const auto d = random_direction(rng);
        const auto n = to_vector(d.unit());
        for (int j = 1; j <= 4; ++j) {
            const double a = std::sqrt(j / (2.0 * j + 1.0));
            const double b = std::sqrt((j + 1.0) / (2.0 * j + 1.0));
            for (int m = -j; m <= j; ++m) {
                const auto yp = vsh_coupled(j, j + 1, m, d);
                const auto y0 = vsh_coupled(j, j, m, d);
                const auto ymn = vsh_coupled(j, j - 1, m, d);
                const auto ye_grad = vsh_gradient_form(VshKind::Electric, j, m, d);
                const auto ym_grad = vsh_gradient_form(VshKind::Magnetic, j, m, d);
                worst = std::max(worst, max_abs_diff(a * yp + b * ymn, ye_grad));
                worst = std::max(worst, max_abs_diff(a * ymn - b * yp, ycs(j, m, d) * n));
                worst = std::max(worst, max_abs_diff(y0, I * ym_grad));
                worst = std::max(worst, max_abs_diff(cross(n, vsh(VshKind::Electric, j, m, d)), vsh(VshKind::Magnetic, j, m, d)));
                worst = std::max(worst, max_abs_diff(-1.0 * cross(n, vsh(VshKind::Magnetic, j, m, d)), vsh(VshKind::Electric, j, m, d)));
                worst = std::max(worst, std::abs(dot(n, vsh(VshKind::Electric, j, m, d))));
                worst = std::max(worst, std::abs(dot(n, vsh(VshKind::Magnetic, j, m, d))));
            }
        }
    }
    return CheckReport::make("shv.identities", worst, tol, "100 random directions, j <= 4, against gradient forms");
}

CheckReport suite_recurrence(double tol, std::uint64_t) { return check_bessel_recurrences(10, tol); }

CheckReport suite_bessel_integral(double tol, std::uint64_t) {
    std::vector<CheckReport> parts;
    for (int two_nu : {1, 3, 5, 7})
        for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 3}, {3, 3}, {2, 5}}) parts.push_back(check_bessel_integral(two_nu, a, b, tol));
    return worst_of("bessel.integral", parts, tol);
}

CheckReport suite_plane_wave(double tol, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 19);
    std::vector<CheckReport> parts;
    for (int k = 0; k < 10; ++k) parts.push_back(check_plane_wave_expansion(1.0, 2.0, random_direction(rng), random_direction(rng), 20, tol));
    return worst_of("plane_wave.expansion", parts, tol);
}

CheckReport suite_fourier(double tol, std::uint64_t) {
    std::vector<CheckReport> parts;
    for (double kr : {0.0, 1.0, 2.5, 7.5})
        for (int j = 0; j <= 4; ++j)
            for (FourierKind k : {FourierKind::Scalar, FourierKind::Coupled, FourierKind::M, FourierKind::E}) {
                if (j == 0 && (k == FourierKind::M || k == FourierKind::E)) continue;
                parts.push_back(check_vsh_fourier(j, k, kr, tol));
            }
    return worst_of("fourier.vsh", parts, tol);
}

CheckReport suite_unitarity(double tol, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 23);
    double worst = 0.0;
    for (int j = 0; j <= 8; ++j)
        for (int k = 0; k < 5; ++k) {
            const auto a = random_angles(rng);
            const auto d = wigner_d(j, a);
            worst = std::max(worst, d.unitarity_residual());
            const auto id = wigner_d(j, a.inverse()) * d;
            worst = std::max(worst, id.max_abs_diff(wigner_d(j, {})));
        }
    return CheckReport::make("rotation.unitarity", worst, tol, "j <= 8, 5 random angle sets each");
}

CheckReport suite_golden(double tol, std::uint64_t) {
    const double s = 1.0 / std::sqrt(2.0);
    const double expected[3][3] = {{0.5, s, 0.5}, {-s, 0.0, s}, {0.5, -s, 0.5}};
    const auto d = wigner_d(1, {0.0, pi / 2, 0.0});
    double worst = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) worst = std::max(worst, std::abs(d(1 - a, 1 - b) - expected[a][b]));
    const auto v = rotate_spherical({-s, 0.0, s}, {0.0, pi / 2, 0.0});
    worst = std::max({worst, std::abs(v.c_plus), std::abs(v.c_zero - 1.0), std::abs(v.c_minus)});
    const auto c = to_cartesian(rotate_spherical(to_spherical({1.0, 0.0, 0.0}), {0.0, pi / 2, 0.0}));
    worst = std::max(worst, max_abs_diff(c, {0.0, 0.0, 1.0}));
    return CheckReport::make("rotation.golden", worst, tol, "d1(0, pi/2, 0) and the (1,0,0) -> (0,0,1) example");
}

CheckReport suite_transformation(double tol, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 29);
    std::normal_distribution<double> g;
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
        const auto ang = random_angles(rng);
        const auto R = cartesian_rotation_matrix(ang);
        auto back = [&](const Direction& dp) {  // R^T r'
            const auto u = dp.unit();
            return Direction::from_cartesian(R[0] * u[0] + R[3] * u[1] + R[6] * u[2], R[1] * u[0] + R[4] * u[1] + R[7] * u[2],
                                             R[2] * u[0] + R[5] * u[1] + R[8] * u[2]);
        };
        auto apply = [&](const CartesianVector& v) {
            return CartesianVector{R[0] * v.x + R[1] * v.y + R[2] * v.z, R[3] * v.x + R[4] * v.y + R[5] * v.z,
                                   R[6] * v.x + R[7] * v.y + R[8] * v.z};
        };
        for (int l = 0; l <= 4; ++l) {
            std::vector<cplx> c(static_cast<std::size_t>(2 * l + 1));
            for (auto& x : c) x = {g(rng), g(rng)};
            const auto cp = rotate_jm_coefficients(l, c, ang);
            for (int t = 0; t < 20; ++t) {
                const auto dp = random_direction(rng);
                const auto d = back(dp);
                cplx lhs{}, rhs{};
                for (int m = -l; m <= l; ++m) {
                    lhs += c[static_cast<std::size_t>(m + l)] * ycs(l, m, d);
                    rhs += cp[static_cast<std::size_t>(m + l)] * ycs(l, m, dp);
                }
                worst = std::max(worst, std::abs(lhs - rhs));
                if (l == 0) continue;
                for (int lam : {1, -1})
                    for (int m = -l; m <= l; ++m) {
                        const auto left = apply(spherical_wave_helicity(l, m, lam, d));
                        CartesianVector right;
                        const auto D = wigner_d(l, ang);
                        for (int mp = -l; mp <= l; ++mp) right += D(mp, m) * spherical_wave_helicity(l, mp, lam, dp);
                        worst = std::max(worst, max_abs_diff(left, right));
                    }
            }
        }
        const CartesianVector v{cplx(g(rng), g(rng)), cplx(g(rng), g(rng)), cplx(g(rng), g(rng))};
        worst = std::max(worst, max_abs_diff(to_cartesian(rotate_spherical(to_spherical(v), ang)), apply(v)));
    }
    return CheckReport::make("rotation.transformation", worst, tol,
                             "jm coefficients and spherical helicity waves, l <= 4, 5 random rotations");
}

CheckReport suite_completeness(double tol, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 31);
    std::normal_distribution<double> g;
    std::vector<VshCoefficient> truth;
    for (int l = 0; l <= 8; ++l)
        for (int m = -l; m <= l; ++m)
            for (VshKind k : {VshKind::Longitudinal, VshKind::Electric, VshKind::Magnetic}) {
                if (l == 0 && k != VshKind::Longitudinal) continue;
                truth.push_back({k, l, m, {g(rng), g(rng)}});
            }
    auto field = [&](const Direction& d) {
        CartesianVector s;
        for (const auto& c : truth) s += c.value * vsh(c.kind, c.l, c.m, d);
        return s;
    };
    const auto p = vsh_project(field, 8, tol);
    double worst = p.reconstruction.max_residual;
    for (const auto& c : truth) worst = std::max(worst, std::abs(p.coefficient(c.kind, c.l, c.m) - c.value));
    return CheckReport::make("vsh.completeness", worst, tol, "random band-limited field, l <= 8");
}

CheckReport suite_catalog(double tol, std::uint64_t) {
    const auto parts = enumerate_partitions();
    const auto cat = enumerate_catalog();
    std::vector<std::string> ids;
    for (const auto& e : cat) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    const auto dup = static_cast<double>(ids.size() - static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin()));
    const double residual = std::abs(static_cast<double>(parts.size()) - 10.0) + std::abs(static_cast<double>(cat.size()) - 40.0) + dup;
    return CheckReport::make("entangle.catalog", residual, tol,
                             std::to_string(parts.size()) + " partitions, " + std::to_string(cat.size()) + " entries");
}

/// Two distinct values for every field, usable in any partition.
void sample_labels(QuantumLabel& a1, QuantumLabel& a2, QuantumLabel& g1, QuantumLabel& g2) {
    a1 = {Tau::Electric, 1, 2, 0};
    a2 = {Tau::Magnetic, 2, 3, 1};
    g1 = {Tau::Electric, 3, 2, -1};
    g2 = {Tau::Magnetic, 1, 3, 1};
}

CheckReport suite_factorization(double tol, std::uint64_t) {
    std::vector<CheckReport> parts;
    QuantumLabel a1, a2, g1, g2;
    sample_labels(a1, a2, g1, g2);
    for (const auto& e : enumerate_catalog()) {
        const auto s = build_state(e.partition, e.bell, a1, a2, g1, g2);
        auto r = factorization_check(s, e.partition, e.bell, a1, a2, g1, g2, tol);
        r.max_residual = std::max(r.max_residual, std::abs(s.norm2() - 1.0));
        parts.push_back(r);
    }
    for (BellType b : {BellType::PsiMinus, BellType::PsiPlus, BellType::PhiPlus, BellType::PhiMinus})
        parts.push_back(helicity_factorization_check(build_helicity_state(b, 1, 2, 1, -1), b, 1, 2, 1, -1, tol));
    return worst_of("entangle.factorization", parts, tol);
}

CheckReport suite_degenerate(double tol, std::uint64_t) {
    QuantumLabel a1, a2, g1, g2;
    sample_labels(a1, a2, g1, g2);
    int failures = 0;
    for (const auto& p : enumerate_partitions()) {
        try {
            (void)build_state(p, BellType::PsiMinus, a1, a2, g1, g1);
            ++failures;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Degenerate) ++failures;
        }
    }
    return CheckReport::make("entangle.degenerate", failures, tol, "psi-minus with equal spectator labels is zero for all 10 partitions");
}

CheckReport suite_ratios(double tol, std::uint64_t) {
    double worst = std::abs(scaling_ratio(RatioKind::MOverE, 1, 1e-3) / (1e-6 / 6.0) - 1.0);
    worst = std::max(worst, std::abs(scaling_ratio(RatioKind::MStep, 1, 1e-3) / 4e-8 - 1.0));
    worst = std::max(worst, std::abs(scaling_ratio(RatioKind::EStep, 2, 1e-2) / (4.0 * 1e-4 / 105.0) - 1.0));
    for (RatioKind k : {RatioKind::MOverE, RatioKind::EStep, RatioKind::MStep})
        for (int j = 1; j <= 10; ++j)
            worst = std::max(worst, std::abs(scaling_ratio(k, j, 2e-3) / scaling_ratio(k, j, 1e-3) - 4.0) / 4.0);
    return CheckReport::make("ratios.scaling", worst, tol, "substitution values and factor-4 doubling, j <= 10");
}

struct SuiteEntry {
    const char* name;
    double tolerance;
    CheckReport (*run)(double, std::uint64_t);
};

const std::vector<SuiteEntry>& suite() {
    static const std::vector<SuiteEntry> s = {
        {"bessel.integral", 1e-9, suite_bessel_integral},
        {"bessel.recurrence", 1e-8, suite_recurrence},
        {"entangle.catalog", 0.5, suite_catalog},
        {"entangle.degenerate", 0.5, suite_degenerate},
        {"entangle.factorization", 1e-14, suite_factorization},
        {"fourier.vsh", 1e-9, suite_fourier},
        {"helicity.eigen", 1e-12, suite_helicity},
        {"modes.boundary", 1e-7, suite_boundary},
        {"modes.dual_condition", 0.5, suite_dual_condition},
        {"modes.energy", 1e-8, suite_energy},
        {"modes.equipartition", 1e-6, suite_equipartition},
        {"modes.tables", 5e-5, suite_tables},
        {"orthonormality.coupled_vsh", 1e-11, [](double t, std::uint64_t) { return check_orthonormality(OrthoFamily::CoupledVsh, 4, t); }},
        {"orthonormality.eml_vsh", 1e-11, [](double t, std::uint64_t) { return check_orthonormality(OrthoFamily::EmlVsh, 4, t); }},
        {"orthonormality.helicity_vsh", 1e-11, [](double t, std::uint64_t) { return check_orthonormality(OrthoFamily::HelicityVsh, 4, t); }},
        {"orthonormality.scalar", 1e-12, [](double t, std::uint64_t) { return check_orthonormality(OrthoFamily::Scalar, 6, t); }},
        {"orthonormality.spherical_wave_helicity", 1e-11,
         [](double t, std::uint64_t) { return check_orthonormality(OrthoFamily::SphericalWaveHelicity, 4, t); }},
        {"parity.vsh", 1e-12, suite_parity},
        {"plane_wave.expansion", 1e-10, suite_plane_wave},
        {"ratios.scaling", 1e-12, suite_ratios},
        {"rotation.golden", 1e-12, suite_golden},
        {"rotation.transformation", 1e-10, suite_transformation},
        {"rotation.unitarity", 1e-12, suite_unitarity},
        {"shv.identities", 1e-12, suite_shv},
        {"vsh.completeness", 1e-10, suite_completeness},
    };
    return s;
}

bool matches(const std::string& name, const std::string& key) {
    return name == key || (name.size() > key.size() && name.compare(0, key.size(), key) == 0 && name[key.size()] == '.');
}

}  // namespace

const std::map<std::string, double>& default_tolerances() {
    static const std::map<std::string, double> t = [] {
        std::map<std::string, double> m;
        for (const auto& e : suite()) m[e.name] = e.tolerance;
        return m;
    }();
    return t;
}

std::vector<std::string> suite_check_names() {
    std::vector<std::string> out;
    for (const auto& e : suite()) out.emplace_back(e.name);
    return out;
}

std::vector<CheckReport> run_suite(const SuiteOptions& options) {
    for (const auto& key : options.only) {
        if (std::none_of(suite().begin(), suite().end(), [&](const SuiteEntry& e) { return matches(e.name, key); }))
            throw Error(ErrorCode::InvalidArgument, "no check matches '" + key + "'");
    }
    for (const auto& [key, value] : options.tolerances) {
        if (std::none_of(suite().begin(), suite().end(), [&](const SuiteEntry& e) { return matches(e.name, key); }))
            throw Error(ErrorCode::InvalidArgument, "no check matches tolerance key '" + key + "'");
        if (!(value > 0.0) || !std::isfinite(value)) throw Error(ErrorCode::InvalidArgument, "tolerance must be finite and > 0");
    }
    std::vector<std::future<CheckReport>> jobs;
    for (const auto& e : suite()) {
        if (!options.only.empty() &&
            std::none_of(options.only.begin(), options.only.end(), [&](const std::string& k) { return matches(e.name, k); }))
            continue;
        double tol = e.tolerance;
        std::size_t best = 0;
        for (const auto& [key, value] : options.tolerances)
            if (matches(e.name, key) && key.size() >= best) {
                tol = value;
                best = key.size();
            }
        jobs.push_back(std::async(std::launch::async, [e, tol, seed = options.seed] {
            try {
                auto r = e.run(tol, seed);
                r.name = e.name;
                return r;
            } catch (const std::exception& ex) {
                return CheckReport::make(e.name, std::nan(""), tol, std::string("exception: ") + ex.what());
            }
        }));
    }
    std::vector<CheckReport> out;
    for (auto& j : jobs) out.push_back(j.get());
    std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
    return out;
}

}  // namespace sphcav
