#pragma once

#include "landau/types.hpp"

namespace landau {

/// Full:   a(z)  = |z|^(gamma+2) Pi(z)
/// CutOff: at(z) = <z>^gamma |z|^2 Pi(z), smooth, with a(z) >= at(z) in PSD order.
enum class KernelKind { Full, CutOff };

/// Pi(z) = I - zhat (x) zhat, the projector onto z-perp. Zero matrix at z = 0
/// by convention.
SymMat3 projection_matrix(const Vec3& z);

SymMat3 kernel_eval(KernelKind kind, double gamma, const Vec3& z);

/// Radius of the ball with the same volume as a grid cell of spacing h.
double equivalent_ball_radius(double h);

/// Mean of |z|^p over that ball; requires p > -3.
double ball_average_power(double p, double h);

/// Replacement value for the z = 0 cell in convolutions: the analytic ball
/// average of the radial factor times the isotropic mean (2/3) I of Pi. The
/// cut-off kernel is smooth with value 0 at the origin, so no replacement.
SymMat3 singular_cell_matrix(KernelKind kind, double gamma, double h);

/// Same rule for the scalar kernel |z|^gamma (used by the c-bar convolution);
/// requires gamma > -3.
double singular_cell_scalar(double gamma, double h);

}  // namespace landau
