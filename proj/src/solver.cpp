#include "landau/solver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "landau/errors.hpp"
#include "landau/functionals.hpp"
#include "landau/parallel.hpp"

namespace landau {

namespace {

void check_finite(const ScalarField& f, double t, const char* where) {
    if (!f.all_finite()) {
        std::ostringstream msg;
        msg << "non-finite values in " << where << " at t = " << t;
        throw NumericalError(msg.str());
    }
}

long clip_negative(ScalarField& f) {
    long count = 0;
    for (double& v : f.values)
        if (v < 0.0) {
            v = 0.0;
            ++count;
        }
    return count;
}

struct GramSolve {
    std::array<double, 5> coeff;
};

GramSolve solve_gram(const ScalarField& f, const DensityStats& target) {
    const GridSpec& grid = f.grid;
    const int n = grid.points_per_axis;
    const std::size_t m = f.values.size();
    // Basis {1, vx, vy, vz, |v|^2}; entries of the f-weighted Gram matrix.
    std::array<std::vector<double>, 15> acc;
    for (auto& a : acc) a.assign(m, 0.0);
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz, ++idx) {
                const Vec3 v = grid.node(ix, iy, iz);
                const double fv = f.values[idx];
                const double q = norm2(v);
                const double phi[5] = {1.0, v.x, v.y, v.z, q};
                int slot = 0;
                for (int a = 0; a < 5; ++a)
                    for (int b = a; b < 5; ++b) acc[slot++][idx] = fv * phi[a] * phi[b];
            }
    const double vol = grid.cell_volume();
    Eigen::Matrix<double, 5, 5> G;
    int slot = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = a; b < 5; ++b) {
            const double value = vol * pairwise_sum(acc[slot++]);
            G(a, b) = value;
            G(b, a) = value;
        }
    Eigen::Matrix<double, 5, 1> t;
    t << target.mass, target.momentum.x, target.momentum.y, target.momentum.z, target.energy;
    Eigen::FullPivLU<Eigen::Matrix<double, 5, 5>> lu(G);
    if (!lu.isInvertible())
        throw NumericalError("conservative_projection: singular Gram system (degenerate density)");
    const Eigen::Matrix<double, 5, 1> c = lu.solve(t);
    GramSolve out;
    for (int k = 0; k < 5; ++k) out.coeff[k] = c(k);
    return out;
}

void apply_multiplier(ScalarField& f, const GramSolve& sol) {
    const GridSpec& grid = f.grid;
    const int n = grid.points_per_axis;
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz, ++idx) {
                const Vec3 v = grid.node(ix, iy, iz);
                const double mult = sol.coeff[0] + sol.coeff[1] * v.x + sol.coeff[2] * v.y +
                                    sol.coeff[3] * v.z + sol.coeff[4] * norm2(v);
                f.values[idx] *= mult;
            }
}

bool has_negative(const ScalarField& f) {
    for (double v : f.values)
        if (v < 0.0) return true;
    return false;
}

struct StepResult {
    ScalarField g;
    StepReport report;
};

/// Heun step reusing stage-1 coefficients (already assembled for the CFL bound).
StepResult heun_step(const ScalarField& g, double dt, const CoefficientPair& coeffs1,
                     ConvolutionEngine& engine, const DensityStats& target, bool projection,
                     double t_before) {
    const std::size_t m = g.values.size();
    const ScalarField k1 = parabolic_apply(g, coeffs1);
    check_finite(k1, t_before, "stage-1 rhs");

    ScalarField pred(g.grid);
    for (std::size_t i = 0; i < m; ++i) pred.values[i] = g.values[i] + dt * k1.values[i];
    long clipped = clip_negative(pred);

    const CoefficientPair coeffs2 = assemble_coefficients(pred, engine);
    const ScalarField k2 = parabolic_apply(pred, coeffs2);
    check_finite(k2, t_before, "stage-2 rhs");

    StepResult out{ScalarField(g.grid), {}};
    double max_dt_g = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double slope = 0.5 * (k1.values[i] + k2.values[i]);
        max_dt_g = std::max(max_dt_g, std::abs(slope));
        out.g.values[i] = g.values[i] + dt * slope;
    }
    clipped += clip_negative(out.g);
    check_finite(out.g, t_before, "step update");

    const DensityStats pre = conserved_triple(out.g);
    out.report.t_after = t_before + dt;
    out.report.dt = dt;
    out.report.clipped_cells = clipped;
    out.report.max_dt_g = max_dt_g;
    out.report.drift_mass = (pre.mass - target.mass) / target.mass;
    out.report.drift_momentum = pre.momentum - target.momentum;
    out.report.drift_energy = (pre.energy - target.energy) / target.energy;

    if (projection) {
        ScalarField projected = conservative_projection(out.g, target);
        std::vector<double> delta(m);
        for (std::size_t i = 0; i < m; ++i)
            delta[i] = std::abs(projected.values[i] - out.g.values[i]);
        out.report.projection_l1 = g.grid.cell_volume() * pairwise_sum(delta);
        out.g = std::move(projected);
    }
    return out;
}

}  // namespace

ScalarField parabolic_apply(const ScalarField& u, const CoefficientPair& coeffs) {
    const SymMatrixField hess_u = hessian(u, GhostRule::GeometricDecay);
    ScalarField out(u.grid);
    for (std::size_t i = 0; i < u.values.size(); ++i)
        out.values[i] = coeffs.a_bar.values[i].ddot(hess_u.values[i]) +
                        coeffs.c_bar.values[i] * u.values[i];
    return out;
}

ScalarField rhs(const ScalarField& g, ConvolutionEngine& engine, CoefficientPair* coeffs_out) {
    CoefficientPair coeffs = assemble_coefficients(g, engine);
    ScalarField out = parabolic_apply(g, coeffs);
    if (coeffs_out) *coeffs_out = std::move(coeffs);
    return out;
}

ScalarField rhs(const ScalarField& g) {
    ConvolutionEngine engine(g.grid);
    return rhs(g, engine);
}

double cfl_dt(const SymMatrixField& a_bar, double cfl_safety) {
    if (!(cfl_safety > 0.0 && cfl_safety <= 1.0))
        throw ConfigError("cfl_dt: safety factor must lie in (0, 1]");
    double max_lambda = 0.0;
    for (const SymMat3& m : a_bar.values)
        max_lambda = std::max(max_lambda, sym_max_eigenvalue(m));
    if (!(max_lambda > 0.0)) throw NumericalError("cfl_dt: degenerate (all-zero) coefficients");
    const double h = a_bar.grid.spacing;
    return cfl_safety * h * h / (6.0 * max_lambda);
}

ScalarField conservative_projection(const ScalarField& f, const DensityStats& target) {
    if (!(target.mass > 0.0)) throw ConfigError("conservative_projection: target mass must be > 0");
    ScalarField current = f;
    for (int round = 0; round < 2; ++round) {
        apply_multiplier(current, solve_gram(current, target));
        if (!has_negative(current)) return current;
        clip_negative(current);
    }
    throw NumericalError("conservative_projection: negatives persisted after two rounds");
}

std::pair<ScalarField, StepReport> step_once(const ScalarField& g, double dt,
                                             ConvolutionEngine& engine,
                                             const DensityStats& target, bool projection) {
    const CoefficientPair coeffs1 = assemble_coefficients(g, engine);
    const double dt_stable = cfl_dt(coeffs1.a_bar, 1.0);
    if (dt > dt_stable * (1.0 + 1e-9))
        throw ConfigError("step_once: dt exceeds the CFL bound");
    StepResult r = heun_step(g, dt, coeffs1, engine, target, projection, 0.0);
    return {std::move(r.g), r.report};
}

Trajectory evolve(const ScalarField& g0, const SolverConfig& config, ConvolutionEngine& engine,
                  const Observer& observer) {
    if (!(config.T >= config.t0)) throw ConfigError("evolve: T must be >= t0");
    if (config.cadence < 0) throw ConfigError("evolve: cadence must be >= 0");

    const double T = config.T;
    const double eps_t = 1e-12 * std::max(1.0, std::abs(T));
    std::vector<double> events;
    if (config.cadence > 0)
        for (int k = 0; k <= config.cadence; ++k)
            events.push_back(T * static_cast<double>(k) / config.cadence);
    for (double s : config.snapshot_times) events.push_back(s);
    events.push_back(T);
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end(),
                             [eps_t](double a, double b) { return std::abs(a - b) <= eps_t; }),
                 events.end());
    // keep only events strictly after t0 and at most T
    std::vector<double> upcoming;
    for (double e : events)
        if (e > config.t0 + eps_t && e <= T + eps_t) upcoming.push_back(std::min(e, T));

    Trajectory traj;
    traj.grid = g0.grid;
    traj.target = config.target ? *config.target : conserved_triple(g0);
    traj.samples.push_back({config.t0, g0, {}});
    traj.samples.back().report.t_after = config.t0;

    ScalarField g = g0;
    double t = config.t0;
    double entropy_prev = entropy(g);
    std::size_t next_event = 0;

    while (next_event < upcoming.size()) {
        const CoefficientPair coeffs1 = assemble_coefficients(g, engine);
        double dt = cfl_dt(coeffs1.a_bar, config.cfl);
        if (config.dt_max > 0.0) dt = std::min(dt, config.dt_max);
        const double event_time = upcoming[next_event];
        bool lands = false;
        if (t + dt >= event_time - eps_t) {
            dt = event_time - t;
            lands = true;
        }
        StepResult r = heun_step(g, dt, coeffs1, engine, traj.target, config.projection, t);
        g = std::move(r.g);
        t = lands ? event_time : t + dt;
        r.report.t_after = t;
        traj.total_steps += 1;

        if (config.htheorem_check) {
            const double entropy_now = entropy(g);
            const double slack = config.entropy_step_slack + 10.0 * r.report.projection_l1;
            if (entropy_now > entropy_prev + slack) {
                std::ostringstream msg;
                msg << "H-theorem violation at t = " << t << ": dH = "
                    << entropy_now - entropy_prev << " exceeds slack " << slack;
                throw NumericalError(msg.str());
            }
            entropy_prev = entropy_now;
        } else {
            entropy_prev = entropy(g);
        }

        if (observer) observer(t, g, r.report);
        if (lands) {
            traj.samples.push_back({t, g, r.report});
            ++next_event;
        }
    }
    return traj;
}

void evolve_frozen(const ScalarField& u0, const CoefficientPair& coeffs, double T,
                   double cfl_safety, const Observer& observer) {
    if (!(T >= 0.0)) throw ConfigError("evolve_frozen: T must be >= 0");
    const double dt_stable = cfl_dt(coeffs.a_bar, cfl_safety);
    ScalarField u = u0;
    double t = 0.0;
    const double eps_t = 1e-12 * std::max(1.0, T);
    while (t < T - eps_t) {
        const double dt = std::min(dt_stable, T - t);
        const ScalarField k1 = parabolic_apply(u, coeffs);
        ScalarField pred(u.grid);
        for (std::size_t i = 0; i < u.values.size(); ++i)
            pred.values[i] = u.values[i] + dt * k1.values[i];
        const ScalarField k2 = parabolic_apply(pred, coeffs);
        for (std::size_t i = 0; i < u.values.size(); ++i)
            u.values[i] += 0.5 * dt * (k1.values[i] + k2.values[i]);
        t = (T - t <= dt_stable) ? T : t + dt;
        check_finite(u, t, "frozen-coefficient step");
        StepReport rep;
        rep.t_after = t;
        rep.dt = dt;
        if (observer) observer(t, u, rep);
    }
}

}  // namespace landau
