#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace sphcav {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// Error categories shared by every module and mirrored by the C status codes.
enum class ErrorCode {
    Domain = 1,
    InvalidArgument,
    Convergence,
    Degenerate,
    Unresolvable,
    LengthMismatch,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Unit direction in spherical angles, theta in [0, pi], phi in [0, 2pi).
struct Direction {
    double theta{0.0};
    double phi{0.0};

    static Direction from_cartesian(double x, double y, double z);

    [[nodiscard]] std::array<double, 3> unit() const;
    [[nodiscard]] std::array<double, 3> theta_hat() const;
    [[nodiscard]] std::array<double, 3> phi_hat() const;
    [[nodiscard]] Direction antipode() const;
};

struct CartesianVector {
    cplx x{}, y{}, z{};

    CartesianVector& operator+=(const CartesianVector& o) { x += o.x; y += o.y; z += o.z; return *this; }
    CartesianVector& operator-=(const CartesianVector& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    CartesianVector& operator*=(cplx s) { x *= s; y *= s; z *= s; return *this; }

    [[nodiscard]] double norm2() const { return std::norm(x) + std::norm(y) + std::norm(z); }
    [[nodiscard]] double norm() const;
};

inline CartesianVector operator+(CartesianVector a, const CartesianVector& b) { return a += b; }
inline CartesianVector operator-(CartesianVector a, const CartesianVector& b) { return a -= b; }
inline CartesianVector operator*(cplx s, CartesianVector a) { return a *= s; }
inline CartesianVector operator*(CartesianVector a, cplx s) { return a *= s; }

/// Real-vector promotion.
CartesianVector to_vector(const std::array<double, 3>& v);

/// Bilinear dot product (no conjugation).
cplx dot(const CartesianVector& a, const CartesianVector& b);
/// Hermitian inner product, conjugate-linear in the first argument.
cplx inner(const CartesianVector& a, const CartesianVector& b);
CartesianVector cross(const CartesianVector& a, const CartesianVector& b);
/// max component modulus of a - b
double max_abs_diff(const CartesianVector& a, const CartesianVector& b);

/// Covariant spherical components (V_{+1}, V_0, V_{-1}).
struct SphericalComponents {
    cplx c_plus{}, c_zero{}, c_minus{};

    [[nodiscard]] double norm2() const { return std::norm(c_plus) + std::norm(c_zero) + std::norm(c_minus); }
    /// component by index mu in {+1, 0, -1}
    [[nodiscard]] cplx operator[](int mu) const;
    cplx& operator[](int mu);
};

SphericalComponents to_spherical(const CartesianVector& v);
CartesianVector to_cartesian(const SphericalComponents& s);

}  // namespace sphcav
