#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sphcav/specfun.hpp"

using namespace sphcav;

TEST_CASE("spherical bessel examples") {
    CHECK(std::abs(spherical_bessel_j(0, pi)) < 1e-14);
    CHECK(std::abs(spherical_bessel_j(1, 4.49341)) < 1e-5);
    CHECK(spherical_bessel_j(2, 1.0) == doctest::Approx(oracle::sph_bessel_series(2, 1.0)).epsilon(1e-12));
    CHECK(spherical_bessel_j(0, 0.0) == 1.0);
    for (int l = 1; l <= 10; ++l) CHECK(spherical_bessel_j(l, 0.0) == 0.0);
}

TEST_CASE("spherical bessel matches libstdc++ to 1e-12 relative for l <= 20, x <= 100") {
    double worst = 0.0;
    for (int l = 0; l <= 20; ++l)
        for (double x = 0.05; x <= 100.0; x += 0.173) {
            const double ref = std::sph_bessel(l, x);
            if (std::abs(ref) < 1e-290) continue;
            // near zeros relative error is ill-conditioned; scale by the local envelope
            const double env = std::max(std::abs(ref), std::hypot(ref, std::sph_bessel(l + 1, x)));
            worst = std::max(worst, std::abs(spherical_bessel_j(l, x) - ref) / env);
        }
    CHECK(worst < 1e-12);
}

TEST_CASE("spherical bessel matches the ascending series for small arguments") {
    for (int l = 0; l <= 30; ++l)
        for (double x : {1e-6, 1e-3, 0.1, 0.5, 0.99, 2.0, 5.0}) {
            const double ref = oracle::sph_bessel_series(l, x, 60);
            CHECK(spherical_bessel_j(l, x) == doctest::Approx(ref).epsilon(1e-12).scale(0));
        }
}

TEST_CASE("spherical bessel domain errors") {
    CHECK_THROWS_AS(spherical_bessel_j(-1, 1.0), Error);
    CHECK_THROWS_AS(spherical_bessel_j(61, 1.0), Error);
    CHECK_THROWS_AS(spherical_bessel_j(2, -0.5), Error);
    CHECK_THROWS_AS(spherical_bessel_j(2, std::nan("")), Error);
    CHECK_NOTHROW(spherical_bessel_j(60, 30.0));
}

TEST_CASE("half-integer bessel") {
    CHECK(std::abs(bessel_j_halfint(1, pi)) < 1e-15);
    CHECK(std::abs(bessel_j_halfint(3, 4.49341)) < 1e-5);
    const double x = 4.49341;
    const double j2 = (3.0 / (x * x) - 1.0) * std::sin(x) / x - 3.0 * std::cos(x) / (x * x);
    CHECK(bessel_j_halfint(5, x) == doctest::Approx(std::sqrt(2.0 * x / pi) * j2).epsilon(1e-12));
    CHECK(bessel_j_halfint(5, x) == doctest::Approx(0.3674).epsilon(1e-3));
    for (int two_nu = 1; two_nu <= 41; two_nu += 2)
        for (double y : {0.3, 2.0, 11.0, 37.5})
            CHECK(bessel_j_halfint(two_nu, y) == doctest::Approx(std::cyl_bessel_j(two_nu / 2.0, y)).epsilon(1e-11));
    CHECK_THROWS_AS(bessel_j_halfint(4, 1.0), Error);
    CHECK_THROWS_AS(bessel_j_halfint(-1, 1.0), Error);
}

TEST_CASE("associated legendre matches libstdc++") {
    for (int l = 0; l <= 12; ++l)
        for (int m = 0; m <= l; ++m)
            for (double x : {-0.97, -0.4, 0.0, 0.31, 0.88, 1.0})
                CHECK(assoc_legendre(l, m, x) == doctest::Approx(std::assoc_legendre(l, m, x)).epsilon(1e-12).scale(1.0));
}

TEST_CASE("scalar harmonic examples") {
    const Direction any{1.1, 2.3};
    CHECK(std::abs(scalar_harmonic(0, 0, any) - cplx(1.0 / std::sqrt(4.0 * pi), 0.0)) < 1e-15);
    const cplx y10 = scalar_harmonic(1, 0, {0.0, 0.0}, HarmonicConvention::LandauLifshitz);
    CHECK(std::abs(y10 - cplx(0.0, std::sqrt(3.0 / (4.0 * pi)))) < 1e-15);

    const double th = pi / 3.0, ph = pi / 4.0;
    // P_2^1(x) = -3 x sqrt(1 - x^2) with the Condon-Shortley phase
    const double c = std::cos(th);
    const double p21 = -3.0 * c * std::sqrt(1.0 - c * c);
    const double n21 = std::sqrt(5.0 / (4.0 * pi) / 6.0);
    const cplx ref = n21 * p21 * std::polar(1.0, ph);
    CHECK(std::abs(scalar_harmonic(2, 1, {th, ph}, HarmonicConvention::CondonShortley) - ref) < 1e-13);
    CHECK_THROWS_AS(scalar_harmonic(2, 3, any), Error);
}

TEST_CASE("scalar harmonic matches a libstdc++ Legendre oracle") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 40; ++k) {
        const auto d = oracle::random_direction(rng);
        for (int l = 0; l <= 8; ++l)
            for (int m = -l; m <= l; ++m)
                CHECK(std::abs(scalar_harmonic(l, m, d, HarmonicConvention::CondonShortley) -
                               oracle::ylm_cs(l, m, d.theta, d.phi)) < 1e-13);
    }
}

TEST_CASE("Landau-Lifshitz harmonics are i^l times Condon-Shortley") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 30; ++k) {
        const auto d = oracle::random_direction(rng);
        for (int l = 0; l <= 6; ++l) {
            const cplx il = std::pow(cplx(0, 1), l);
            for (int m = -l; m <= l; ++m) {
                const cplx ll = scalar_harmonic(l, m, d, HarmonicConvention::LandauLifshitz);
                const cplx cs = scalar_harmonic(l, m, d, HarmonicConvention::CondonShortley);
                CHECK(std::abs(ll - il * cs) < 1e-14);
                CHECK(std::abs(std::abs(ll) - std::abs(cs)) < 1e-15);
            }
        }
    }
}

TEST_CASE("scalar harmonic parity") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 30; ++k) {
        const auto d = oracle::random_direction(rng);
        for (int l = 0; l <= 6; ++l)
            for (int m = -l; m <= l; ++m)
                for (auto conv : {HarmonicConvention::LandauLifshitz, HarmonicConvention::CondonShortley}) {
                    const double p = l % 2 ? -1.0 : 1.0;
                    CHECK(std::abs(scalar_harmonic(l, m, d.antipode(), conv) - p * scalar_harmonic(l, m, d, conv)) < 1e-13);
                }
    }
}

TEST_CASE("small argument form") {
    CHECK(small_argument_j(0, 0.0, 0) == 1.0);
    CHECK(small_argument_j(1, 1e-3, 0) == doctest::Approx(1e-3 / 3.0).epsilon(1e-15));
    CHECK(small_argument_j(2, 1e-2, 0) == doctest::Approx(spherical_bessel_j(2, 1e-2)).epsilon(1e-4));
    // leading coefficient 2^{-1-j} sqrt(pi) / Gamma(j + 3/2)
    for (int j = 0; j <= 10; ++j) {
        const double coef = std::pow(2.0, -1.0 - j) * std::sqrt(pi) / std::tgamma(j + 1.5);
        CHECK(small_argument_j(j, 0.01, 0) == doctest::Approx(coef * std::pow(0.01, j)).epsilon(1e-13));
    }
}

TEST_CASE("small argument relative error is quadratic in x") {
    for (int j = 0; j <= 6; ++j) {
        const double e1 = std::abs(small_argument_j(j, 0.02, 0) / spherical_bessel_j(j, 0.02) - 1.0);
        const double e2 = std::abs(small_argument_j(j, 0.01, 0) / spherical_bessel_j(j, 0.01) - 1.0);
        CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(1e-3));
        const double c1 = std::abs(small_argument_j(j, 0.02, 1) / spherical_bessel_j(j, 0.02) - 1.0);
        const double c2 = std::abs(small_argument_j(j, 0.01, 1) / spherical_bessel_j(j, 0.01) - 1.0);
        CHECK(c1 / c2 == doctest::Approx(16.0).epsilon(1e-2));
    }
}

TEST_CASE("derivative recurrences") {
    double worst = 0.0;
    const double h = 1e-5;
    for (int l = 1; l <= 10; ++l)
        for (double x = 0.5; x <= 50.0; x += 0.37) {
            const double d = (spherical_bessel_j(l, x + h) - spherical_bessel_j(l, x - h)) / (2 * h);
            const double jl = spherical_bessel_j(l, x);
            worst = std::max(worst, std::abs(d - (l / x * jl - spherical_bessel_j(l + 1, x))));
            worst = std::max(worst, std::abs(d - (spherical_bessel_j(l - 1, x) - (l + 1) / x * jl)));
        }
    CHECK(worst < 1e-8);
}

TEST_CASE("half-integer bessel consistency with spherical bessel") {
    for (int l = 0; l <= 20; ++l)
        for (double x : {0.2, 1.7, 9.3, 24.0, 80.0}) {
            const double jl = spherical_bessel_j(l, x);
            CHECK(bessel_j_halfint(2 * l + 1, x) == doctest::Approx(std::sqrt(2.0 * x / pi) * jl).epsilon(1e-12).scale(0));
        }
}

TEST_CASE("double factorial") {
    CHECK(double_factorial(-1) == 1.0);
    CHECK(double_factorial(1) == 1.0);
    CHECK(double_factorial(7) == 105.0);
}
