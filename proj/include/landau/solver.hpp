#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "landau/coefficients.hpp"
#include "landau/grid.hpp"

namespace landau {

struct SolverConfig {
    double T = 0.0;            // final time
    double t0 = 0.0;           // start time (checkpoint restarts)
    double cfl = 0.4;          // CFL safety factor in (0, 1]
    double dt_max = 0.0;       // 0 = no cap
    bool projection = true;    // conservative projection each step
    int cadence = 20;          // uniform samples in [0, T]
    std::vector<double> snapshot_times;
    bool htheorem_check = true;
    double entropy_step_slack = 1e-8;
    /// Conservation target; defaults to the stats of the initial state. Pass
    /// the original target when restarting from a checkpoint so the multiplier
    /// solves reproduce bit-exactly.
    std::optional<DensityStats> target;
};

struct StepReport {
    double t_after = 0.0;
    double dt = 0.0;
    double drift_mass = 0.0;       // pre-projection, relative to target mass
    Vec3 drift_momentum;           // pre-projection, absolute
    double drift_energy = 0.0;     // pre-projection, relative to target energy
    long clipped_cells = 0;
    double max_dt_g = 0.0;         // max |dg/dt| of the accepted step
    double projection_l1 = 0.0;    // L1 magnitude of the projection correction
};

struct TrajectorySample {
    double t = 0.0;
    ScalarField g;
    StepReport report;
};

struct Trajectory {
    GridSpec grid;
    DensityStats target;
    std::vector<TrajectorySample> samples;
    long total_steps = 0;
};

using Observer = std::function<void(double, const ScalarField&, const StepReport&)>;

/// a-bar : hess(g) + c-bar g with self-consistent coefficients.
ScalarField rhs(const ScalarField& g, ConvolutionEngine& engine,
                CoefficientPair* coeffs_out = nullptr);
ScalarField rhs(const ScalarField& g);

/// Same parabolic operator with frozen (externally supplied) coefficients.
ScalarField parabolic_apply(const ScalarField& u, const CoefficientPair& coeffs);

/// Explicit-diffusion stability bound: dt = cfl * h^2 / (6 max lambda_max(a-bar)).
double cfl_dt(const SymMatrixField& a_bar, double cfl_safety);

/// Multiplies f by alpha + beta . v + delta |v|^2, the five coefficients solved
/// from the mass/momentum/energy constraints via the f-weighted Gram system.
/// One re-solve after clipping; negatives after the second round are an error.
ScalarField conservative_projection(const ScalarField& f, const DensityStats& target);

/// One Heun step with per-stage coefficient refresh, then clip and projection.
/// Requires dt <= cfl_dt of the current coefficients.
std::pair<ScalarField, StepReport> step_once(const ScalarField& g, double dt,
                                             ConvolutionEngine& engine,
                                             const DensityStats& target,
                                             bool projection = true);

/// Advances g0 to T, landing exactly on sample times. Aborts (with the last
/// valid state intact in the trajectory) on NaN or an H-theorem violation.
Trajectory evolve(const ScalarField& g0, const SolverConfig& config, ConvolutionEngine& engine,
                  const Observer& observer = {});

/// Linear evolution under frozen coefficients (maximum-principle tests):
/// no clipping, no projection, no entropy check.
void evolve_frozen(const ScalarField& u0, const CoefficientPair& coeffs, double T,
                   double cfl_safety, const Observer& observer);

}  // namespace landau
