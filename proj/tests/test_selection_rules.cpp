#include <doctest.h>

#include <cmath>

#include "sphcav/selection_rules.hpp"
#include "sphcav/specfun.hpp"

using namespace sphcav;

TEST_CASE("photon parity") {
    CHECK(photon_parity(Tau::Electric, 2) == 1);
    CHECK(photon_parity(Tau::Magnetic, 2) == -1);
    CHECK(photon_parity(Tau::Electric, 1) == -1);
    for (int j = 1; j <= 10; ++j) CHECK(photon_parity(Tau::Electric, j) == -photon_parity(Tau::Magnetic, j));
    CHECK_THROWS_AS(photon_parity(Tau::Electric, 0), Error);
}

TEST_CASE("transition examples") {
    CHECK(transition_allowed({1, -1, Tau::Electric, 1, 1e-3}));
    CHECK_FALSE(transition_allowed({1, 1, Tau::Electric, 1, 1e-3}));
    CHECK(transition_allowed({1, 1, Tau::Magnetic, 1, 1e-3}));
    CHECK_THROWS_AS(transition_allowed({2, 1, Tau::Magnetic, 1, 1e-3}), Error);
    CHECK_THROWS_AS(transition_allowed({1, 1, Tau::Magnetic, 1, 0.0}), Error);
}

TEST_CASE("exactly one of E_j and M_j connects any parity pair") {
    for (int pi : {-1, 1})
        for (int pf : {-1, 1})
            for (int j = 1; j <= 6; ++j)
                CHECK(transition_allowed({pi, pf, Tau::Electric, j, 1e-3}) != transition_allowed({pi, pf, Tau::Magnetic, j, 1e-3}));
}

TEST_CASE("scaling ratio examples") {
    CHECK(scaling_ratio(RatioKind::MOverE, 1, 1e-3) == doctest::Approx(1e-6 / 6.0).epsilon(1e-14));
    CHECK(scaling_ratio(RatioKind::MOverE, 1, 1e-3) == doctest::Approx(1.6667e-7).epsilon(1e-4));
    CHECK(scaling_ratio(RatioKind::MStep, 1, 1e-3) == doctest::Approx(4e-8).epsilon(1e-14));
    CHECK(scaling_ratio(RatioKind::EStep, 2, 1e-2) == doctest::Approx(4.0 * 1e-4 / 105.0).epsilon(1e-14));
    CHECK(scaling_ratio(RatioKind::EStep, 2, 1e-2) == doctest::Approx(3.8095e-6).epsilon(1e-4));
    CHECK_THROWS_AS(scaling_ratio(RatioKind::MStep, 0, 1e-3), Error);
    CHECK_THROWS_AS(scaling_ratio(RatioKind::MStep, 1, -1e-3), Error);
    CHECK(ka_outside_validity(0.2));
    CHECK_FALSE(ka_outside_validity(0.05));
}

TEST_CASE("ratios scale as (ka)^2 and decrease in j") {
    for (auto kind : {RatioKind::MOverE, RatioKind::EStep, RatioKind::MStep})
        for (double ka : {1e-4, 3e-3, 0.05}) {
            for (int j = 1; j <= 12; ++j)
                CHECK(scaling_ratio(kind, j, 2 * ka) / scaling_ratio(kind, j, ka) == doctest::Approx(4.0).epsilon(1e-14));
            for (int j = 2; j <= 12; ++j) CHECK(scaling_ratio(kind, j, ka) < scaling_ratio(kind, j - 1, ka));
        }
}

TEST_CASE("M over E matches the squared mode amplitudes to leading order") {
    for (int j = 1; j <= 6; ++j)
        for (double ka : {1e-3, 1e-2, 3e-2}) {
            auto amp = [&](auto f) { return f(j, ka) * f(j, ka) / ((j + 1.0) / (2 * j + 1.0) * f(j - 1, ka) * f(j - 1, ka)); };
            const double exact = amp([](int l, double x) { return spherical_bessel_j(l, x); });
            const double lead = amp([](int l, double x) { return small_argument_j(l, x, 0); });
            const double r = scaling_ratio(RatioKind::MOverE, j, ka);
            CHECK(lead == doctest::Approx(r).epsilon(1e-12));
            CHECK(std::abs(exact / r - 1.0) < ka * ka);
        }
}
