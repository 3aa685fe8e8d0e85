#include "sphcav/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace sphcav {

namespace {

void check_order(int l) {
    if (l < 0 || l > kMaxBesselOrder)
        throw Error(ErrorCode::Domain, "spherical Bessel order out of range [0, 60]: " + std::to_string(l));
}

/// Ascending series, used for x < 1 where the closed forms cancel.
double series_j(int l, double x) {
    const double h = -0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 60; ++k) {
        term *= h / (k * (l + k + 0.5));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return std::pow(x, l) / double_factorial(2 * l + 1) * sum;
}

double closed_j(int l, double x) {
    const double s = std::sin(x);
    const double c = std::cos(x);
    switch (l) {
        case 0: return s / x;
        case 1: return (s / x - c) / x;
        default: return ((3.0 / (x * x) - 1.0) * s - 3.0 * c / x) / x;
    }
}

/// Miller downward recurrence, normalized against j_0 or j_1.
double miller_j(int l, double x) {
    const int top = static_cast<int>(std::max<double>(l, x)) + 16 +
                    static_cast<int>(std::sqrt(40.0 * std::max<double>(l, x)));
    double fp1 = 0.0;
    double f = 1e-300;
    double fl = 0.0;
    double f0 = 0.0;
    double f1 = 0.0;
    for (int n = top; n >= 0; --n) {
        if (n == l) fl = f;
        if (n == 1) f1 = f;
        if (n == 0) {
            f0 = f;
            break;
        }
        const double fm1 = (2.0 * n + 1.0) / x * f - fp1;
        fp1 = f;
        f = fm1;
        if (std::abs(f) > 1e250) {
            f *= 1e-250;
            fp1 *= 1e-250;
            fl *= 1e-250;
            f1 *= 1e-250;
        }
    }
    const double j0 = std::sin(x) / x;
    const double j1 = (std::sin(x) / x - std::cos(x)) / x;
    return std::abs(j0) >= std::abs(j1) ? fl * (j0 / f0) : fl * (j1 / f1);
}

}  // namespace

double double_factorial(int n) {
    double r = 1.0;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

double spherical_bessel_j(int l, double x) {
    check_order(l);
    if (!std::isfinite(x) || x < 0.0) throw Error(ErrorCode::Domain, "spherical Bessel argument must be finite and >= 0");
    if (x == 0.0) return l == 0 ? 1.0 : 0.0;
    if (x < 1.0) return series_j(l, x);
    if (l <= 2) return closed_j(l, x);
    return miller_j(l, x);
}

double bessel_j_halfint(int two_nu, double x) {
    if (two_nu <= 0 || two_nu % 2 == 0)
        throw Error(ErrorCode::Domain, "bessel_j_halfint needs odd positive two_nu, got " + std::to_string(two_nu));
    if (x < 0.0) throw Error(ErrorCode::Domain, "bessel_j_halfint argument must be >= 0");
    if (x == 0.0) return 0.0;
    return std::sqrt(2.0 * x / pi) * spherical_bessel_j((two_nu - 1) / 2, x);
}

double assoc_legendre(int l, int m, double x) {
    if (m < 0 || m > l) throw Error(ErrorCode::Domain, "assoc_legendre needs 0 <= m <= l");
    const double s = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
    double pmm = 1.0;
    for (int k = 1; k <= m; ++k) pmm *= (2.0 * k - 1.0) * s;
    if (l == m) return pmm;
    double pm1 = x * (2.0 * m + 1.0) * pmm;
    if (l == m + 1) return pm1;
    double pl = 0.0;
    for (int n = m + 2; n <= l; ++n) {
        pl = (x * (2.0 * n - 1.0) * pm1 - (n + m - 1.0) * pmm) / (n - m);
        pmm = pm1;
        pm1 = pl;
    }
    return pl;
}

cplx scalar_harmonic(int l, int m, const Direction& dir, HarmonicConvention conv) {
    if (l < 0 || std::abs(m) > l)
        throw Error(ErrorCode::Domain, "scalar_harmonic needs |m| <= l, got l=" + std::to_string(l) + " m=" + std::to_string(m));
    const int am = std::abs(m);
    double ratio = 1.0;  // (l-|m|)!/(l+|m|)!
    for (int k = l - am + 1; k <= l + am; ++k) ratio /= k;
    double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * pi) * ratio);
    if (m > 0 && (m % 2) != 0) norm = -norm;
    const double p = assoc_legendre(l, am, std::cos(dir.theta));
    cplx y = norm * p * std::polar(1.0, m * dir.phi);
    if (conv == HarmonicConvention::LandauLifshitz) {
        static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        y *= ipow[l % 4];
    }
    return y;
}

double small_argument_j(int j, double x, int order) {
    if (j < 0) throw Error(ErrorCode::Domain, "small_argument_j needs j >= 0");
    if (x < 0.0) throw Error(ErrorCode::Domain, "small_argument_j needs x >= 0");
    if (order != 0 && order != 1) throw Error(ErrorCode::Domain, "small_argument_j order must be 0 or 1");
    // Gamma(j + 3/2) = (2j+1)!! sqrt(pi) / 2^{j+1}
    const double gamma = double_factorial(2 * j + 1) * std::sqrt(pi) / std::ldexp(1.0, j + 1);
    double v = std::pow(x, j) * std::ldexp(1.0, -1 - j) * std::sqrt(pi) / gamma;
    if (order == 1) v *= 1.0 - x * x / (2.0 * (2.0 * j + 3.0));
    return v;
}

}  // namespace sphcav
