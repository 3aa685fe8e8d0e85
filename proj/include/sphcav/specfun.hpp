#pragma once

#include "sphcav/types.hpp"

namespace sphcav {

enum class HarmonicConvention { LandauLifshitz, CondonShortley };

inline constexpr int kMaxBesselOrder = 60;

/// Spherical Bessel function j_l(x), 0 <= l <= 60, x >= 0.
double spherical_bessel_j(int l, double x);

/// J_nu(x) for half-integer nu = two_nu / 2 (two_nu odd and positive), x >= 0.
double bessel_j_halfint(int two_nu, double x);

/// Associated Legendre P_l^m(x) without the Condon-Shortley phase, 0 <= m <= l.
double assoc_legendre(int l, int m, double x);

/// Scalar spherical harmonic. LandauLifshitz = i^l * CondonShortley.
cplx scalar_harmonic(int l, int m, const Direction& dir,
                     HarmonicConvention conv = HarmonicConvention::LandauLifshitz);

/// Small-argument form of j_j(x): order 0 is x^j/(2j+1)!!, order 1 adds the x^2 correction.
double small_argument_j(int j, double x, int order = 0);

/// Odd double factorial (2k+1)!! as a double; (-1)!! = 1.
double double_factorial(int n);

}  // namespace sphcav
