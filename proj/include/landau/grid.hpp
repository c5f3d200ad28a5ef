#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "landau/types.hpp"

namespace landau {

/// Uniform cell-centered velocity grid on [-L, L]^3.
///
/// Node coordinates are v_i = -L + (i + 1/2) h per axis, i in 0..N-1, so no
/// node sits at the origin. gamma travels with the grid because every kernel
/// and weight downstream depends on it.
struct GridSpec {
    double half_width = 0.0;   // L
    int points_per_axis = 0;   // N, even, >= 8
    double gamma = -3.0;       // interaction exponent, in [-3, 0)
    double spacing = 0.0;      // h = 2L/N

    double coord(int i) const { return -half_width + (i + 0.5) * spacing; }
    Vec3 node(int ix, int iy, int iz) const { return {coord(ix), coord(iy), coord(iz)}; }

    std::size_t size() const {
        const auto n = static_cast<std::size_t>(points_per_axis);
        return n * n * n;
    }
    std::size_t index(int ix, int iy, int iz) const {
        const auto n = static_cast<std::size_t>(points_per_axis);
        return (static_cast<std::size_t>(ix) * n + static_cast<std::size_t>(iy)) * n +
               static_cast<std::size_t>(iz);
    }
    std::array<int, 3> unindex(std::size_t idx) const {
        const int n = points_per_axis;
        const int iz = static_cast<int>(idx % n);
        const int iy = static_cast<int>((idx / n) % n);
        const int ix = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
        return {ix, iy, iz};
    }
    double cell_volume() const { return spacing * spacing * spacing; }

    friend bool operator==(const GridSpec& a, const GridSpec& b) {
        return a.half_width == b.half_width && a.points_per_axis == b.points_per_axis &&
               a.gamma == b.gamma;
    }
};

/// Validates L > 0, N even >= 8, gamma in [-3, 0).
GridSpec make_grid(double half_width, int points_per_axis, double gamma);

/// Nodal scalar values, row-major index (ix*N + iy)*N + iz.
struct ScalarField {
    GridSpec grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const GridSpec& g) : grid(g), values(g.size(), 0.0) {}

    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
    double& at(int ix, int iy, int iz) { return values[grid.index(ix, iy, iz)]; }
    double at(int ix, int iy, int iz) const { return values[grid.index(ix, iy, iz)]; }

    static ScalarField from_function(const GridSpec& g, const std::function<double(Vec3)>& fn);
    bool all_finite() const;
};

struct VectorField {
    GridSpec grid;
    std::vector<Vec3> values;

    VectorField() = default;
    explicit VectorField(const GridSpec& g) : grid(g), values(g.size()) {}
    Vec3& operator[](std::size_t i) { return values[i]; }
    const Vec3& operator[](std::size_t i) const { return values[i]; }
};

struct SymMatrixField {
    GridSpec grid;
    std::vector<SymMat3> values;

    SymMatrixField() = default;
    explicit SymMatrixField(const GridSpec& g) : grid(g), values(g.size()) {}
    SymMat3& operator[](std::size_t i) { return values[i]; }
    const SymMat3& operator[](std::size_t i) const { return values[i]; }
};

/// Conserved quantities plus entropy of a density.
struct DensityStats {
    double mass = 0.0;
    Vec3 momentum;
    double energy = 0.0;   // integral of f |v|^2
    double entropy = 0.0;  // integral of f ln f
    /// Mass fraction carried by the outermost cell layer; reported as the
    /// domain-truncation indicator.
    double tail_mass_fraction = 0.0;
};

/// Ghost-layer extension rule for derivative stencils at the box boundary.
///
/// GeometricDecay extrapolates |phi| log-linearly along each axis
/// (phi_ghost = phi_b^2 / phi_i when phi_b * phi_i > 0, else 0), matching the
/// solver's radial-exponential ghost policy for densities. LinearExtrapolate
/// (phi_ghost = 2 phi_b - phi_i) is its image under ln and is used for
/// log-fields and other signed fields.
enum class GhostRule { GeometricDecay, LinearExtrapolate };

/// <v>^k at every node.
ScalarField weight_field(const GridSpec& grid, double k);

/// Midpoint quadrature h^3 * sum(values), deterministic pairwise reduction.
double integrate(const ScalarField& f);

/// integrate(f * weight_field(k)).
double moment(const ScalarField& f, double k);

/// Second-order central differences; boundary layer closed by the ghost rule.
VectorField gradient(const ScalarField& f, GhostRule rule = GhostRule::GeometricDecay);
SymMatrixField hessian(const ScalarField& f, GhostRule rule = GhostRule::GeometricDecay);

DensityStats conserved_triple(const ScalarField& f);

/// Extended (N+2)^3 buffer with ghost layers filled by the rule; axis-by-axis
/// fill so edge and corner ghosts are defined. Shared by gradient/hessian and
/// by the solver's parabolic operator.
class ExtendedField {
  public:
    ExtendedField(const ScalarField& f, GhostRule rule);
    /// Indices in [-1, N].
    double at(int ix, int iy, int iz) const {
        return data_[(static_cast<std::size_t>(ix + 1) * np_ + (iy + 1)) * np_ + (iz + 1)];
    }

  private:
    std::size_t np_;  // N + 2
    std::vector<double> data_;
};

}  // namespace landau
