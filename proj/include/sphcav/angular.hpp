#pragma once

#include "sphcav/specfun.hpp"
#include "sphcav/types.hpp"

namespace sphcav {

enum class VshKind { Electric, Magnetic, Longitudinal };

/// Spherical unit vector e_mu, mu in {+1, 0, -1}.
CartesianVector spherical_basis_vector(int mu);

/// Spin-1 coupling coefficient <1, l; mu, m-mu | j m>. Zero outside the allowed range.
double cg_s1(int l, int j, int mu, int m);

/// Y_{jlm} = sum_mu <1,l;mu,m-mu|jm> e_mu Y_{l,m-mu}, Condon-Shortley scalars.
CartesianVector vsh_coupled(int j, int l, int m, const Direction& dir);

/// Y^E, Y^M = r x Y^E, Y^L = r Y_jm.
CartesianVector vsh(VshKind kind, int j, int m, const Direction& dir);

/// Y^E and Y^M from the gradient form. Undefined at the poles; used as a cross-check.
CartesianVector vsh_gradient_form(VshKind kind, int j, int m, const Direction& dir);

/// Helicity eigenfunctions Y^(+1), Y^(-1), Y^(0) = Y^L.
CartesianVector helicity_vsh(int lambda, int j, int m, const Direction& dir);

/// (S . n) v = i n x v.
CartesianVector helicity_apply(const Direction& axis, const CartesianVector& v);

}  // namespace sphcav
