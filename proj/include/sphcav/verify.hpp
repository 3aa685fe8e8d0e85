#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sphcav/angular.hpp"
#include "sphcav/quadrature.hpp"
#include "sphcav/report.hpp"

namespace sphcav {

enum class OrthoFamily { Scalar, CoupledVsh, EmlVsh, HelicityVsh, SphericalWaveHelicity };
enum class FourierKind { Scalar, Coupled, M, E };

inline constexpr int kMaxOrthoL = 8;

CheckReport check_orthonormality(OrthoFamily family, int l_max, double tolerance = 1e-11);

/// Angular quadrature of Y(k) exp(i k.r) against g_l(kr) Y(r), all m, 14 test directions.
CheckReport check_vsh_fourier(int j, FourierKind kind, double kr, double tolerance = 1e-9);

CheckReport check_plane_wave_expansion(double k, double r, const Direction& dir_k, const Direction& dir_r, int l_max,
                                       double tolerance = 1e-10);

/// int_0^1 x J_nu(alpha x) J_nu(beta x) dx for the alpha_idx-th and beta_idx-th zeros of J_nu.
CheckReport check_bessel_integral(int two_nu, int alpha_idx, int beta_idx, double tolerance = 1e-9);

/// Same identity with explicit zeros; same_root selects the alpha == beta branch.
CheckReport check_bessel_integral_at(int two_nu, double alpha, double beta, bool same_root, double tolerance = 1e-9);

/// Central-difference check of both derivative recurrences on x in [0.5, 50], l <= l_max.
CheckReport check_bessel_recurrences(int l_max, double tolerance = 1e-8);

struct VshCoefficient {
    VshKind kind{VshKind::Longitudinal};
    int l{0};
    int m{0};
    cplx value{};
};

struct VshProjection {
    std::vector<VshCoefficient> coefficients;  ///< ordered by l, m, then L, E, M
    CheckReport reconstruction;

    [[nodiscard]] cplx coefficient(VshKind kind, int l, int m) const;
};

using VectorField = std::function<CartesianVector(const Direction&)>;

/// Projects a sampled tangential-plus-radial field onto {Y^L, Y^E, Y^M} up to l_max and resums.
VshProjection vsh_project(const VectorField& field, int l_max, double tolerance = 1e-10);

struct SuiteOptions {
    std::vector<std::string> only;              ///< name prefixes; empty runs everything
    std::map<std::string, double> tolerances;   ///< overrides by name or prefix
    std::uint64_t seed{20240607};
};

/// Centralized default tolerance per suite check.
const std::map<std::string, double>& default_tolerances();

std::vector<std::string> suite_check_names();

/// Runs the selected checks (in parallel) and returns reports sorted by name.
std::vector<CheckReport> run_suite(const SuiteOptions& options = {});

}  // namespace sphcav
