#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sphcav/angular.hpp"
#include "sphcav/specfun.hpp"
#include "sphcav/verify.hpp"

using namespace sphcav;

namespace {

template <class F>
cplx integrate(const QuadratureRule& q, F f) {
    cplx s{};
    for (const auto& p : q.points()) s += p.weight * f(p.dir);
    return s;
}

/// Max |Gram - I| for oracle scalar harmonics l <= l_max at the given degree.
double scalar_gram_residual(int degree, int l_max) {
    const auto q = sphere_quadrature(degree);
    double worst = 0.0;
    for (int l = 0; l <= l_max; ++l)
        for (int m = -l; m <= l; ++m)
            for (int lp = 0; lp <= l_max; ++lp)
                for (int mp = -lp; mp <= lp; ++mp) {
                    const cplx g = integrate(q, [&](const Direction& d) {
                        return oracle::ylm_cs(l, m, d.theta, d.phi) * std::conj(oracle::ylm_cs(lp, mp, d.theta, d.phi));
                    });
                    worst = std::max(worst, std::abs(g - (l == lp && m == mp ? 1.0 : 0.0)));
                }
    return worst;
}

/// Residual of the scalar Fourier identity at the given degree.
double scalar_fourier_residual(int degree, double kr) {
    const auto q = sphere_quadrature(degree);
    const Direction rdir{0.7, 2.1};
    const auto rv = rdir.unit();
    double worst = 0.0;
    for (int l = 0; l <= 3; ++l)
        for (int m = -l; m <= l; ++m) {
            const cplx lhs = integrate(q, [&](const Direction& d) {
                const auto k = d.unit();
                const double phase = kr * (k[0] * rv[0] + k[1] * rv[1] + k[2] * rv[2]);
                return oracle::ylm_cs(l, m, d.theta, d.phi) * std::polar(1.0, phase);
            });
            const cplx rhs = 4.0 * pi * std::pow(cplx(0, 1), l) * std::sph_bessel(l, kr) * oracle::ylm_cs(l, m, rdir.theta, rdir.phi);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    return worst;
}

}  // namespace

TEST_CASE("sphere quadrature examples") {
    for (int d : {0, 4, 17, 64}) CHECK(sphere_quadrature(d).weight_sum() == doctest::Approx(4 * pi).epsilon(1e-13));
    const auto q = sphere_quadrature(8);
    auto y = [](int l, int m, const Direction& d) { return oracle::ylm_cs(l, m, d.theta, d.phi); };
    CHECK(std::abs(integrate(q, [&](const Direction& d) { return y(2, 1, d) * std::conj(y(2, 1, d)); }) - 1.0) < 1e-12);
    CHECK(std::abs(integrate(q, [&](const Direction& d) { return y(2, 1, d) * std::conj(y(3, 1, d)); })) < 1e-12);
    CHECK_THROWS_AS(sphere_quadrature(65), Error);
    CHECK_THROWS_AS(sphere_quadrature(-1), Error);
}

TEST_CASE("sphere quadrature is exact up to its degree") {
    for (int deg : {6, 10, 16}) CHECK(scalar_gram_residual(deg, deg / 2) < 1e-13);
    // and not beyond it
    CHECK(scalar_gram_residual(6, 5) > 1e-6);
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    std::vector<double> x, w;
    gauss_legendre(7, -0.5, 2.0, x, w);
    for (int p = 0; p <= 13; ++p) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], p);
        const double exact = (std::pow(2.0, p + 1) - std::pow(-0.5, p + 1)) / (p + 1);
        CHECK(s == doctest::Approx(exact).epsilon(1e-13));
    }
    CHECK_THROWS_AS(gauss_legendre(0, 0, 1, x, w), Error);
    const auto b = ball_quadrature(8, 16, 2.0);
    double vol = 0.0;
    for (std::size_t i = 0; i < b.radial_nodes.size(); ++i) vol += b.radial_weights[i] * b.radial_nodes[i] * b.radial_nodes[i];
    CHECK(vol * b.weight_sum() == doctest::Approx(4.0 / 3.0 * pi * 8.0).epsilon(1e-13));
}

TEST_CASE("fibonacci directions avoid the poles") {
    const auto d = fibonacci_directions(200);
    CHECK(d.size() == 200);
    for (const auto& x : d) {
        CHECK(x.theta > 0.0);
        CHECK(x.theta < pi);
    }
    CHECK_THROWS_AS(fibonacci_directions(0), Error);
}

TEST_CASE("doubling the quadrature degree never inflates a residual more than tenfold") {
    const double floor = 1e-15;
    for (int d : {4, 8, 16, 32}) {
        const double a = scalar_gram_residual(d, 4), b = scalar_gram_residual(2 * d, 4);
        CHECK_MESSAGE(b <= 10.0 * std::max(a, floor), "degree " << d << ": " << a << " -> " << b);
        for (double kr : {0.5, 3.0, 9.0}) {
            const double fa = scalar_fourier_residual(d, kr), fb = scalar_fourier_residual(2 * d, kr);
            CHECK_MESSAGE(fb <= 10.0 * std::max(fa, floor), "degree " << d << " kr " << kr << ": " << fa << " -> " << fb);
        }
    }
    CHECK(scalar_fourier_residual(64, 9.0) < 1e-12);
}

TEST_CASE("orthonormality families") {
    CHECK(check_orthonormality(OrthoFamily::EmlVsh, 4).pass);
    CHECK(check_orthonormality(OrthoFamily::HelicityVsh, 4).pass);
    CHECK(check_orthonormality(OrthoFamily::Scalar, 6, 1e-12).pass);
    CHECK(check_orthonormality(OrthoFamily::CoupledVsh, 8).pass);
    CHECK(check_orthonormality(OrthoFamily::SphericalWaveHelicity, 3).pass);
    CHECK_THROWS_AS(check_orthonormality(OrthoFamily::Scalar, 9), Error);
    const auto strict = check_orthonormality(OrthoFamily::Scalar, 6, 1e-30);
    CHECK_FALSE(strict.pass);
    CHECK(strict.max_residual > 0.0);
}

TEST_CASE("Fourier identities") {
    CHECK(check_vsh_fourier(0, FourierKind::Scalar, 1.0, 1e-10).pass);
    CHECK(check_vsh_fourier(1, FourierKind::M, 2.5, 1e-9).pass);
    CHECK(check_vsh_fourier(2, FourierKind::E, 0.0).pass);
    for (int j = 1; j <= 4; ++j)
        for (auto k : {FourierKind::Scalar, FourierKind::Coupled, FourierKind::M, FourierKind::E})
            for (double kr : {0.3, 4.0, 12.0}) CHECK(check_vsh_fourier(j, k, kr).pass);
    CHECK_THROWS_AS(check_vsh_fourier(5, FourierKind::Scalar, 1.0), Error);
    CHECK_THROWS_AS(check_vsh_fourier(1, FourierKind::Scalar, 21.0), Error);
    CHECK_THROWS_AS(check_vsh_fourier(0, FourierKind::E, 1.0), Error);
}

TEST_CASE("plane-wave expansion") {
    const Direction k{0.4, 1.3}, r{2.2, -0.8};
    const auto zero = check_plane_wave_expansion(3.0, 0.0, k, r, 0);
    CHECK(zero.max_residual < 1e-15);
    CHECK(zero.pass);
    CHECK(check_plane_wave_expansion(1.0, 2.0, k, r, 20).max_residual < 1e-10);
    const double r10 = check_plane_wave_expansion(1.0, 5.0, k, r, 10, 1.0).max_residual;
    const double r20 = check_plane_wave_expansion(1.0, 5.0, k, r, 20, 1.0).max_residual;
    CHECK(r20 * 1e3 <= r10);
    // independent oracle: the truncated series at kr = 2 against the exponential
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        const auto a = oracle::random_direction(rng), b = oracle::random_direction(rng);
        CHECK(check_plane_wave_expansion(0.8, 2.5, a, b, 20).pass);
    }
}

TEST_CASE("Bessel integral identity") {
    // independent oracle: Simpson on x J_nu(a x) J_nu(b x) with libstdc++ Bessel
    const double a = 4.493409457909064, b = 7.725251836937707;
    const double same = oracle::simpson([&](double x) { return x * std::pow(std::cyl_bessel_j(1.5, a * x), 2); }, 0, 1, 2000);
    CHECK(same == doctest::Approx(0.5 * std::pow(std::cyl_bessel_j(2.5, a), 2)).epsilon(1e-10));
    const double cross = oracle::simpson([&](double x) { return x * std::cyl_bessel_j(1.5, a * x) * std::cyl_bessel_j(1.5, b * x); }, 0, 1, 2000);
    CHECK(std::abs(cross) < 1e-10);

    CHECK(check_bessel_integral(3, 1, 1).pass);
    CHECK(check_bessel_integral(3, 1, 2).pass);
    for (int two_nu = 1; two_nu <= 11; two_nu += 2)
        for (int p = 1; p <= 4; ++p)
            for (int q = 1; q <= 4; ++q) CHECK(check_bessel_integral(two_nu, p, q).pass);
    CHECK(check_bessel_integral_at(1, pi, 2 * pi, false, 1e-10).pass);
    CHECK(check_bessel_integral_at(1, pi, pi, true, 1e-10).pass);
    CHECK_FALSE(check_bessel_integral_at(1, pi, 2 * pi, true).pass);
    CHECK_THROWS_AS(check_bessel_integral(3, 0, 1), Error);
    CHECK_THROWS_AS(check_bessel_integral(2, 1, 1), Error);
    CHECK(check_bessel_recurrences(10).pass);
}

TEST_CASE("vsh projection") {
    const auto single = vsh_project([](const Direction& d) { return vsh(VshKind::Magnetic, 2, 1, d); }, 4);
    CHECK(single.reconstruction.pass);
    for (const auto& c : single.coefficients) {
        const bool target = c.kind == VshKind::Magnetic && c.l == 2 && c.m == 1;
        CHECK(std::abs(c.value - (target ? 1.0 : 0.0)) < 1e-12);
    }
    CHECK(std::abs(single.coefficient(VshKind::Magnetic, 2, 1) - 1.0) < 1e-12);

    const auto radial = vsh_project([](const Direction& d) { return (1.0 / std::sqrt(4 * pi)) * to_vector(d.unit()); }, 3);
    CHECK(radial.reconstruction.pass);
    CHECK(std::abs(std::abs(radial.coefficient(VshKind::Longitudinal, 0, 0)) - 1.0) < 1e-12);
    for (const auto& c : radial.coefficients)
        if (!(c.kind == VshKind::Longitudinal && c.l == 0)) CHECK(std::abs(c.value) < 1e-12);

    std::mt19937_64 rng(99);
    std::normal_distribution<double> g;
    struct Term {
        VshKind kind;
        int l, m;
        cplx c;
    };
    std::vector<Term> terms;
    for (int l = 0; l <= 4; ++l)
        for (int m = -l; m <= l; ++m)
            for (VshKind k : {VshKind::Longitudinal, VshKind::Electric, VshKind::Magnetic})
                if (l > 0 || k == VshKind::Longitudinal) terms.push_back({k, l, m, {g(rng), g(rng)}});
    auto field = [&](const Direction& d) {
        CartesianVector v{};
        for (const auto& t : terms) v += t.c * vsh(t.kind, t.l, t.m, d);
        return v;
    };
    const auto p = vsh_project(field, 4);
    CHECK(p.reconstruction.pass);
    double worst = 0.0;
    for (const auto& t : terms) worst = std::max(worst, std::abs(p.coefficient(t.kind, t.l, t.m) - t.c));
    CHECK(worst < 1e-11);
    // band-limit violation shows up in the reconstruction residual
    const auto under = vsh_project(field, 2);
    CHECK_FALSE(under.reconstruction.pass);
}

TEST_CASE("suite control") {
    const auto names = suite_check_names();
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(names.size() == default_tolerances().size());
    const auto some = run_suite({{"rotation"}, {}, 1});
    REQUIRE(some.size() == 3);
    for (const auto& r : some) {
        CHECK(r.name.rfind("rotation.", 0) == 0);
        CHECK(r.pass);
    }
    const auto strict = run_suite({{"rotation.unitarity"}, {{"rotation.unitarity", 1e-30}}, 1});
    REQUIRE(strict.size() == 1);
    CHECK_FALSE(strict[0].pass);
    CHECK(strict[0].tolerance == 1e-30);
    CHECK_THROWS_AS(run_suite({{"nonexistent"}, {}, 1}), Error);
    CHECK_THROWS_AS(run_suite({{}, {{"nonexistent", 1e-3}}, 1}), Error);
    CHECK_THROWS_AS(run_suite({{}, {{"rotation", -1.0}}, 1}), Error);
    CHECK_THROWS_AS(run_suite({{"rot"}, {}, 1}), Error);
}

TEST_CASE("full suite passes and is ordered") {
    const auto all = run_suite();
    CHECK(all.size() == suite_check_names().size());
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].name < all[i].name);
    for (const auto& r : all) {
        CAPTURE(r.name);
        CHECK_MESSAGE(r.pass, r.details);
        CHECK(r.max_residual < r.tolerance);
    }
}
