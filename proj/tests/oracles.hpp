// Test-only oracles, independent of the transform/convolution implementation
// they check. Brute-force pair sums, continuum quadrature for isotropic
// coefficient values, and closed-form Gaussian identities.
#pragma once

#include <random>
#include <vector>

#include "landau/grid.hpp"
#include "landau/kernels.hpp"

namespace landau::oracles {

/// Raw discretized Maxwellian (no renormalization): mass (mu/pi)^{3/2} e^{-mu|v-m|^2}.
ScalarField discrete_maxwellian(const GridSpec& grid, double mu, Vec3 mean = {},
                                double mass = 1.0);

/// O(N^6) direct pairwise convolution h^3 sum_w kern(v-w) g(w), singular cell
/// by the same ball-average rule, no transforms.
SymMatrixField brute_force_a_bar(const ScalarField& g, KernelKind kind);

/// Same for the scalar kernel |z|^gamma (gamma > -3), including the factor
/// 2 (gamma + 3) of the zero-order coefficient.
ScalarField brute_force_c_bar(const ScalarField& g);

/// Kernel convolution evaluated at an arbitrary point (not necessarily a node).
SymMat3 brute_force_a_bar_at(const ScalarField& g, KernelKind kind, const Vec3& v0);

/// Gauss-Legendre nodes/weights on [a, b].
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};
Quadrature gauss_legendre(int n, double a, double b);

/// Continuum kernel convolution against an isotropic Maxwellian (mean 0) at a
/// point v0, by 2D high-order quadrature. Exact axisymmetric decomposition
/// A (I - vhat vhat^T) + B vhat vhat^T.
struct IsotropicConv {
    double transverse = 0.0;  // A
    double radial = 0.0;      // B
    SymMat3 matrix(const Vec3& v0) const;
};
IsotropicConv continuum_kernel_vs_maxwellian(KernelKind kind, double gamma, double mu,
                                             double mass, const Vec3& v0);

/// Continuum scalar convolution (|z|^gamma * M)(v0), gamma > -3.
double continuum_radial_gamma_vs_maxwellian(double gamma, double mu, double mass,
                                            const Vec3& v0);

/// Exact box-truncated Maxwellian moment: integral over [-L, L]^3 of
/// (1 + |v|^2)^p M dv for integer p >= 0, via 1D truncated-moment recurrences.
double box_moment(double L, double mu, double mass, int p);

/// Closed-form Gaussian identities (full space, mass 1, variance sigma^2 = 1/(2 mu)).
double gaussian_entropy(double mu);
double gaussian_kl_shifted(double mu, double offset);        // KL(M_m || M_0)
double gaussian_hellinger2_shifted(double mu, double offset); // int |sqrt f - sqrt g|^2

/// Seeded smooth random densities: Maxwellian times small random cosine modes,
/// normalized to unit mass.
ScalarField random_density(const GridSpec& grid, std::mt19937_64& rng, double mu = 0.5);

/// log2(coarse/fine): measured convergence order under halving.
double richardson_order(double err_coarse, double err_fine);

}  // namespace landau::oracles
