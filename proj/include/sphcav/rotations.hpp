#pragma once

#include <array>
#include <vector>

#include "sphcav/types.hpp"

namespace sphcav {

/// ZYZ Euler angles of a passive rotation (frame rotated by alpha about z, beta about y', gamma about z'').
struct EulerAngles {
    double alpha{0.0};
    double beta{0.0};
    double gamma{0.0};

    [[nodiscard]] EulerAngles inverse() const { return {-gamma, -beta, -alpha}; }
};

inline constexpr int kMaxWignerJ = 20;

/// (2j+1) x (2j+1) matrix indexed by (m', m), each in [-j, j].
class WignerMatrix {
public:
    explicit WignerMatrix(int j);

    [[nodiscard]] int j() const { return j_; }
    [[nodiscard]] int dim() const { return 2 * j_ + 1; }
    [[nodiscard]] cplx operator()(int mp, int m) const { return data_[index(mp, m)]; }
    cplx& operator()(int mp, int m) { return data_[index(mp, m)]; }

    [[nodiscard]] WignerMatrix adjoint() const;
    [[nodiscard]] WignerMatrix operator*(const WignerMatrix& o) const;
    /// max |(D D^dagger)_{ab} - delta_ab|
    [[nodiscard]] double unitarity_residual() const;
    [[nodiscard]] double max_abs_diff(const WignerMatrix& o) const;

private:
    [[nodiscard]] std::size_t index(int mp, int m) const;

    int j_;
    std::vector<cplx> data_;
};

/// Reduced matrix d_{m'm}(beta) in the passive convention (transpose of the usual active one).
double wigner_small_d(int j, int mp, int m, double beta);

/// Single element D_{m'm} = e^{i m' gamma} d_{m'm}(beta) e^{i m alpha}.
cplx wigner_d_element(int j, int mp, int m, const EulerAngles& angles);

WignerMatrix wigner_d(int j, const EulerAngles& angles);

/// V'_sigma = sum_sigma' conj(D_{sigma sigma'}) V_sigma'.
SphericalComponents rotate_spherical(const SphericalComponents& v, const EulerAngles& angles);

/// Passive Cartesian rotation matrix, row-major; v' = R v.
std::array<double, 9> cartesian_rotation_matrix(const EulerAngles& angles);

/// c'_{m'} = sum_m D_{m'm} c_m, coefficients ordered m = -j .. j.
std::vector<cplx> rotate_jm_coefficients(int j, const std::vector<cplx>& coeffs, const EulerAngles& angles);

/// e^(lambda)(k): e_lambda actively rotated onto k.
CartesianVector helicity_polarization(int lambda, const Direction& k);

/// sqrt((2j+1)/4pi) D_{lambda m}(phi, theta, 0) e^(lambda)(dir).
CartesianVector spherical_wave_helicity(int j, int m, int lambda, const Direction& dir);

/// sqrt((2j+1)/4pi) conj(D_{lambda m}(phi_p, theta_p, 0)).
cplx plane_to_spherical_coefficient(int j, int m, int lambda, const Direction& p_dir);

}  // namespace sphcav
