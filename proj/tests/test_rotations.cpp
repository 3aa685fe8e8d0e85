#include <doctest.h>

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sphcav/angular.hpp"
#include "sphcav/rotations.hpp"
#include "sphcav/specfun.hpp"

using namespace sphcav;

namespace {

using Mat3 = std::array<double, 9>;

/// Active reduced matrix <j m'| exp(-i beta J_y) |j m> by diagonalizing J_y.
Eigen::MatrixXd active_d_oracle(int j, double beta) {
    const int n = 2 * j + 1;
    Eigen::MatrixXcd jy = Eigen::MatrixXcd::Zero(n, n);
    // basis index k <-> m = j - k
    for (int k = 0; k + 1 < n; ++k) {
        const double m = j - k - 1;  // <m+1| J+ |m>
        const double c = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
        jy(k, k + 1) = cplx(0, -0.5 * c);
        jy(k + 1, k) = cplx(0, 0.5 * c);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(jy);
    Eigen::VectorXcd phase(n);
    for (int k = 0; k < n; ++k) phase(k) = std::polar(1.0, -beta * es.eigenvalues()(k));
    const Eigen::MatrixXcd u = es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
    return u.real();
}

Mat3 rz(double a) { return {std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1}; }
Mat3 ry(double b) { return {std::cos(b), 0, std::sin(b), 0, 1, 0, -std::sin(b), 0, std::cos(b)}; }
Mat3 mul(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) c[3 * i + k] += a[3 * i + j] * b[3 * j + k];
    return c;
}
Mat3 transpose(const Mat3& a) { return {a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]}; }

/// Passive matrix: the frame turns by alpha about z, beta about y', gamma about z''.
Mat3 passive_oracle(const EulerAngles& e) { return transpose(mul(mul(rz(e.alpha), ry(e.beta)), rz(e.gamma))); }

EulerAngles euler_from_passive(const Mat3& r) {
    const Mat3 m = transpose(r);
    const double beta = std::acos(std::clamp(m[8], -1.0, 1.0));
    return {std::atan2(m[5], m[2]), beta, std::atan2(m[7], -m[6])};
}

EulerAngles random_angles(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * pi), b(0.05, pi - 0.05);
    return {u(rng), b(rng), u(rng)};
}

CartesianVector turn(const Mat3& r, const CartesianVector& v) {
    return {r[0] * v.x + r[1] * v.y + r[2] * v.z, r[3] * v.x + r[4] * v.y + r[5] * v.z, r[6] * v.x + r[7] * v.y + r[8] * v.z};
}

Direction turn(const Mat3& r, const Direction& d) {
    const auto u = d.unit();
    return Direction::from_cartesian(r[0] * u[0] + r[1] * u[1] + r[2] * u[2], r[3] * u[0] + r[4] * u[1] + r[5] * u[2],
                                     r[6] * u[0] + r[7] * u[1] + r[8] * u[2]);
}

}  // namespace

TEST_CASE("d1 at beta = pi/2 entry for entry") {
    const double s = 1.0 / std::sqrt(2.0);
    const double expected[3][3] = {{0.5, s, 0.5}, {-s, 0.0, s}, {0.5, -s, 0.5}};
    const auto d = wigner_d(1, {0.0, pi / 2, 0.0});
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(std::abs(d(1 - a, 1 - b) - expected[a][b]) <= 1e-15);
}

TEST_CASE("reduced matrix is the transpose of the exponential of J_y") {
    for (int j = 0; j <= 8; ++j)
        for (double beta : {0.0, 0.3, 1.2, pi / 2, 2.9, pi}) {
            const auto ref = active_d_oracle(j, beta);
            for (int mp = -j; mp <= j; ++mp)
                for (int m = -j; m <= j; ++m)
                    CHECK(wigner_small_d(j, mp, m, beta) ==
                          doctest::Approx(ref(j - m, j - mp)).epsilon(1e-11).scale(1.0));
        }
}

TEST_CASE("reduced matrix symmetry under beta -> -beta") {
    for (int j = 0; j <= 6; ++j)
        for (int mp = -j; mp <= j; ++mp)
            for (int m = -j; m <= j; ++m)
                CHECK(wigner_small_d(j, mp, m, -0.7) == doctest::Approx(wigner_small_d(j, m, mp, 0.7)).scale(1.0).epsilon(1e-14));
}

TEST_CASE("D matrix phases and unitarity") {
    std::mt19937_64 rng(31);
    for (int j = 0; j <= 8; ++j) {
        const auto id = wigner_d(j, {0.0, 0.0, 0.0});
        for (int a = -j; a <= j; ++a)
            for (int b = -j; b <= j; ++b) CHECK(std::abs(id(a, b) - (a == b ? 1.0 : 0.0)) < 1e-15);
        for (int k = 0; k < 5; ++k) {
            const auto ang = random_angles(rng);
            const auto d = wigner_d(j, ang);
            CHECK(d.unitarity_residual() < 1e-12);
            CHECK((d * wigner_d(j, ang.inverse())).max_abs_diff(id) < 1e-13);
            for (int mp = -j; mp <= j; ++mp)
                for (int m = -j; m <= j; ++m) {
                    const cplx e = std::polar(1.0, mp * ang.gamma) * wigner_small_d(j, mp, m, ang.beta) *
                                   std::polar(1.0, m * ang.alpha);
                    CHECK(std::abs(d(mp, m) - e) < 1e-15);
                    CHECK(std::abs(wigner_d_element(j, mp, m, ang) - e) < 1e-15);
                }
        }
    }
    CHECK_THROWS_AS(wigner_d(21, {}), Error);
    CHECK_THROWS_AS(wigner_d(-1, {}), Error);
}

TEST_CASE("cartesian rotation matrix matches explicit products") {
    std::mt19937_64 rng(37);
    for (int k = 0; k < 20; ++k) {
        const auto ang = random_angles(rng);
        const auto r = cartesian_rotation_matrix(ang);
        const auto ref = passive_oracle(ang);
        for (int i = 0; i < 9; ++i) CHECK(r[i] == doctest::Approx(ref[i]).scale(1.0).epsilon(1e-15));
    }
}

TEST_CASE("rotating spherical components") {
    const double s = 1.0 / std::sqrt(2.0);
    const auto v = rotate_spherical({-s, 0.0, s}, {0.0, pi / 2, 0.0});
    CHECK(std::abs(v.c_plus) < 1e-15);
    CHECK(std::abs(v.c_zero - 1.0) < 1e-15);
    CHECK(std::abs(v.c_minus) < 1e-15);
    const auto c = to_cartesian(rotate_spherical(to_spherical({1.0, 0.0, 0.0}), {0.0, pi / 2, 0.0}));
    CHECK(max_abs_diff(c, {0.0, 0.0, 1.0}) < 1e-12);

    std::mt19937_64 rng(41);
    std::normal_distribution<double> g;
    for (int k = 0; k < 30; ++k) {
        const auto ang = random_angles(rng);
        const CartesianVector x{cplx(g(rng), g(rng)), cplx(g(rng), g(rng)), cplx(g(rng), g(rng))};
        const auto sx = to_spherical(x);
        const auto rot = rotate_spherical(sx, ang);
        CHECK(rot.norm2() == doctest::Approx(sx.norm2()).epsilon(1e-13));
        CHECK(max_abs_diff(to_cartesian(rot), turn(passive_oracle(ang), x)) < 1e-13);
        const auto same = rotate_spherical(sx, {0.0, 0.0, 0.0});
        CHECK(std::abs(same.c_plus - sx.c_plus) + std::abs(same.c_zero - sx.c_zero) + std::abs(same.c_minus - sx.c_minus) < 1e-15);
    }
}

TEST_CASE("rotated jm coefficients describe the same function in the new frame") {
    std::mt19937_64 rng(43);
    std::normal_distribution<double> g;
    for (int k = 0; k < 5; ++k) {
        const auto ang = random_angles(rng);
        const auto rt = transpose(passive_oracle(ang));
        for (int l = 0; l <= 4; ++l) {
            std::vector<cplx> c(2 * l + 1);
            for (auto& x : c) x = {g(rng), g(rng)};
            const auto cp = rotate_jm_coefficients(l, c, ang);
            double n0 = 0.0, n1 = 0.0;
            for (std::size_t i = 0; i < c.size(); ++i) {
                n0 += std::norm(c[i]);
                n1 += std::norm(cp[i]);
            }
            CHECK(n1 == doctest::Approx(n0).epsilon(1e-13));
            for (int t = 0; t < 20; ++t) {
                const auto dp = oracle::random_direction(rng);
                const auto d = turn(rt, dp);
                cplx lhs{}, rhs{};
                for (int m = -l; m <= l; ++m) {
                    lhs += c[m + l] * oracle::ylm_cs(l, m, d.theta, d.phi);
                    rhs += cp[m + l] * oracle::ylm_cs(l, m, dp.theta, dp.phi);
                }
                CHECK(std::abs(lhs - rhs) < 1e-10);
            }
        }
    }
    const std::vector<cplx> one{cplx(0.3, -0.2)};
    CHECK(std::abs(rotate_jm_coefficients(0, one, random_angles(rng))[0] - one[0]) == 0.0);
    CHECK_THROWS_AS(rotate_jm_coefficients(2, std::vector<cplx>(4), {}), Error);
}

TEST_CASE("composition of rotations") {
    std::mt19937_64 rng(47);
    std::normal_distribution<double> g;
    for (int k = 0; k < 10; ++k) {
        const auto a = random_angles(rng), b = random_angles(rng);
        const auto ab = euler_from_passive(mul(passive_oracle(b), passive_oracle(a)));
        for (int j = 1; j <= 4; ++j) {
            CHECK((wigner_d(j, b) * wigner_d(j, a)).max_abs_diff(wigner_d(j, ab)) < 1e-11);
            std::vector<cplx> c(2 * j + 1);
            for (auto& x : c) x = {g(rng), g(rng)};
            const auto two = rotate_jm_coefficients(j, rotate_jm_coefficients(j, c, a), b);
            const auto one = rotate_jm_coefficients(j, c, ab);
            for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::abs(two[i] - one[i]) < 1e-11);
        }
    }
}

TEST_CASE("helicity polarization vectors") {
    std::mt19937_64 rng(53);
    for (int k = 0; k < 30; ++k) {
        const auto d = oracle::random_direction(rng);
        for (int lam : {1, -1}) {
            const auto e = helicity_polarization(lam, d);
            CHECK(e.norm2() == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(std::abs(dot(to_vector(d.unit()), e)) < 1e-14);
            CHECK(max_abs_diff(helicity_apply(d, e), static_cast<double>(lam) * e) < 1e-14);
        }
        CHECK(std::abs(inner(helicity_polarization(1, d), helicity_polarization(-1, d))) < 1e-14);
    }
    CHECK(max_abs_diff(helicity_polarization(1, {0.0, 0.0}), spherical_basis_vector(1)) < 1e-15);
}

TEST_CASE("rotated plane-wave helicity states stay helicity eigenstates") {
    std::mt19937_64 rng(59);
    for (int k = 0; k < 20; ++k) {
        const auto ang = random_angles(rng);
        const auto r = passive_oracle(ang);
        const auto d = oracle::random_direction(rng);
        const auto dp = turn(r, d);
        for (int lam : {1, -1}) {
            const auto e = to_cartesian(rotate_spherical(to_spherical(helicity_polarization(lam, d)), ang));
            CHECK(max_abs_diff(helicity_apply(dp, e), static_cast<double>(lam) * e) < 1e-13);
            CHECK(std::abs(std::abs(inner(helicity_polarization(lam, dp), e)) - 1.0) < 1e-13);
        }
    }
}

TEST_CASE("spherical wave helicity functions") {
    std::mt19937_64 rng(61);
    for (int k = 0; k < 30; ++k) {
        const auto d = oracle::random_direction(rng);
        for (int j = 1; j <= 4; ++j)
            for (int m = -j; m <= j; ++m)
                for (int lam : {1, -1}) {
                    const auto s = spherical_wave_helicity(j, m, lam, d);
                    CHECK(max_abs_diff(helicity_apply(d, s), static_cast<double>(lam) * s) < 1e-12);
                    CHECK(std::abs(dot(to_vector(d.unit()), s)) < 1e-13);
                    const cplx expect = std::sqrt((2.0 * j + 1.0) / (4.0 * pi)) *
                                        wigner_d_element(j, lam, m, {d.phi, d.theta, 0.0});
                    CHECK(max_abs_diff(s, expect * helicity_polarization(lam, d)) < 1e-14);
                }
    }
    CHECK_THROWS_AS(spherical_wave_helicity(1, 0, 0, {1.0, 1.0}), Error);
}

TEST_CASE("spherical helicity waves transform with D under rotations") {
    std::mt19937_64 rng(67);
    for (int k = 0; k < 5; ++k) {
        const auto ang = random_angles(rng);
        const auto r = passive_oracle(ang);
        const auto rt = transpose(r);
        for (int t = 0; t < 10; ++t) {
            const auto dp = oracle::random_direction(rng);
            const auto d = turn(rt, dp);
            for (int j = 1; j <= 3; ++j) {
                const auto D = wigner_d(j, ang);
                for (int lam : {1, -1})
                    for (int m = -j; m <= j; ++m) {
                        const auto left = turn(r, spherical_wave_helicity(j, m, lam, d));
                        CartesianVector right;
                        for (int mp = -j; mp <= j; ++mp) right += D(mp, m) * spherical_wave_helicity(j, mp, lam, dp);
                        CHECK(max_abs_diff(left, right) < 1e-10);
                    }
            }
        }
    }
}

TEST_CASE("plane to spherical expansion coefficients") {
    const Direction z{0.0, 0.0};
    for (int j = 1; j <= 4; ++j)
        for (int m = -j; m <= j; ++m)
            for (int lam : {1, -1}) {
                const double expect = m == lam ? std::sqrt((2.0 * j + 1.0) / (4.0 * pi)) : 0.0;
                CHECK(std::abs(plane_to_spherical_coefficient(j, m, lam, z) - expect) < 1e-15);
            }
    std::mt19937_64 rng(71);
    for (int k = 0; k < 20; ++k) {
        const auto p = oracle::random_direction(rng);
        for (int j = 1; j <= 5; ++j)
            for (int lam : {1, -1}) {
                double s = 0.0;
                for (int m = -j; m <= j; ++m) s += std::norm(plane_to_spherical_coefficient(j, m, lam, p));
                CHECK(s == doctest::Approx((2.0 * j + 1.0) / (4.0 * pi)).epsilon(1e-13));
            }
    }
}

TEST_CASE("resummed plane-wave expansion concentrates at the momentum direction") {
    // sum_j sum_m c_jm psi_jm(k) has a peak at k = p whose weight grows like sum_j (2j+1)/4pi
    const Direction p{0.8, 1.9};
    for (int lam : {1, -1}) {
        double prev = 0.0;
        for (int jmax = 2; jmax <= 10; jmax += 2) {
            CartesianVector at_p, off;
            const Direction q{2.0, 4.5};
            for (int j = 1; j <= jmax; ++j)
                for (int m = -j; m <= j; ++m) {
                    const cplx c = plane_to_spherical_coefficient(j, m, lam, p);
                    at_p += c * spherical_wave_helicity(j, m, lam, p);
                    off += c * spherical_wave_helicity(j, m, lam, q);
                }
            double weight = 0.0;
            for (int j = 1; j <= jmax; ++j) weight += (2.0 * j + 1.0) / (4.0 * pi);
            CHECK(max_abs_diff(at_p, weight * helicity_polarization(lam, p)) < 1e-12);
            CHECK(at_p.norm() > prev);
            CHECK(off.norm() < 0.2 * at_p.norm());
            prev = at_p.norm();
        }
    }
}
