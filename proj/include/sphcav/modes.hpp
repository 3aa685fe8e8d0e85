#pragma once

#include <array>
#include <compare>
#include <map>
#include <vector>

#include "sphcav/report.hpp"
#include "sphcav/types.hpp"

namespace sphcav {

enum class Tau { Electric, Magnetic };

struct CavityConfig {
    double radius{1.0};
    double c{1.0};
    double hbar{1.0};
    double epsilon0{1.0};

    void validate() const;
};

inline constexpr int kMaxRootCount = 64;

struct ModeIndex {
    Tau tau{Tau::Electric};
    int j{1};
    int m{0};
    int n{1};

    auto operator<=>(const ModeIndex&) const = default;
};

struct ModeSpec {
    ModeIndex index;
    double x_root{0.0};
    double omega{0.0};
    double norm_const{0.0};
    int degeneracy{0};
};

struct FieldSample {
    double r{0.0};
    Direction dir;
    CartesianVector A, E, B;
};

/// J_{j+1/2}(x).
double magnetic_root_equation(int j, double x);
/// j J_{j+3/2}(x) - (j+1) J_{j-1/2}(x).
double electric_root_equation(int j, double x);
double root_equation(Tau tau, int j, double x);

/// First `count` positive roots of the mode condition, ascending.
std::vector<double> find_roots(Tau tau, int j, int count);

/// First `count` positive zeros of J_nu, nu = two_nu/2.
std::vector<double> bessel_halfint_zeros(int two_nu, int count);

double normalization_constant(Tau tau, int j, double x_root, const CavityConfig& config = {});

/// Constant from the closed-form radial energy integral; valid for both tau.
double energy_normalization_constant(Tau tau, int j, double x_root, const CavityConfig& config = {});

/// Root lookup for (tau, j, n) plus normalization; m is carried through.
ModeSpec resolve_mode(const ModeIndex& index, const CavityConfig& config = {});

FieldSample mode_field(const ModeSpec& spec, double r, const Direction& dir, const CavityConfig& config = {});

/// Vector potential at a Cartesian point, no range check.
CartesianVector vector_potential_at(const ModeSpec& spec, const std::array<double, 3>& p, const CavityConfig& config);

/// curl A at a Cartesian point by central differences with one Richardson step.
CartesianVector magnetic_field_at(const ModeSpec& spec, const std::array<double, 3>& p, const CavityConfig& config);

CheckReport boundary_residual(const ModeSpec& spec, const CavityConfig& config = {}, int n_dirs = 64,
                              double tolerance = 1e-7);

/// All (tau, j, n) with j <= j_max, n <= n_max sorted by omega; entries carry m = 0.
std::vector<ModeSpec> spectrum(int j_max, int n_max, const CavityConfig& config = {});

struct EnergyTotal {
    double energy{0.0};
    long long photon_number{0};
};

EnergyTotal hamiltonian_energy(const std::map<ModeIndex, int>& occupations, bool include_zero_point,
                               const CavityConfig& config = {});

struct ModeEnergy {
    double from_potential{0.0};  ///< (1/2) omega^2 eps0 int |A|^2
    double electric{0.0};        ///< (1/4) eps0 int |E|^2
    double magnetic{0.0};        ///< (1/4) eps0 c^2 int |B|^2
};

/// Full 3D quadrature; the B part is skipped unless with_b is set.
ModeEnergy mode_energy_quadrature(const ModeSpec& spec, const CavityConfig& config = {}, bool with_b = false,
                                  int n_radial = 256);

}  // namespace sphcav
