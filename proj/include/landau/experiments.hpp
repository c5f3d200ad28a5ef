#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "landau/diagnostics.hpp"
#include "landau/functionals.hpp"
#include "landau/grid.hpp"
#include "landau/solver.hpp"

namespace landau {

/// Declarative initial data: Maxwellian(mu, mean, mass), a cosine-perturbed
/// Maxwellian, or a symmetric bimodal pair.
struct InitialSpec {
    enum class Type { Maxwellian, PerturbedMaxwellian, Bimodal };
    Type type = Type::Maxwellian;
    double mu = 0.5;
    Vec3 mean;
    double mass = 1.0;
    double amplitude = 0.1;  // perturbed: relative bump amplitude
    int mode = 1;            // perturbed: cosine mode along v1
    double separation = 1.5; // bimodal: centers at +-separation e1
    /// f0 only: project onto the conserved triple of g0 after construction.
    bool match_conserved_of_g0 = false;
};

ScalarField build_initial(const GridSpec& grid, const InitialSpec& spec);

/// rho = max(2 kappa, 2 kappa + 2 gamma + 4, 2 zeta, nu).
double auto_rho(double kappa, double nu, double zeta, double gamma);

struct ExperimentConfig {
    GridSpec grid;
    InitialSpec g0;
    std::optional<InitialSpec> f0;
    double T = 0.5;
    double cfl = 0.4;
    bool projection = true;
    std::uint64_t seed = 0;
    double kappa = 1.0, nu = 2.0, zeta = 1.0;
    double rho = 0.0;      // filled from auto_rho when rho_auto
    bool rho_auto = true;
    int cadence = 20;
    std::vector<double> snapshot_times;
    std::vector<std::string> experiments;
    std::string output_dir = "out";
    std::map<std::string, double> tolerances;  // overrides over default_tolerances()
    std::uint64_t config_hash = 0;
};

const std::map<std::string, double>& default_tolerances();
double tolerance(const ExperimentConfig& cfg, const std::string& name);

// ---------------------------------------------------------------------------

struct GronwallSample {
    double t = 0.0;
    double H = 0.0;          // relative entropy H(f_t | g_t)
    double K1 = 0.0, K3 = 0.0;
    double Mf = 0.0, Mg = 0.0;  // (rho - gamma)-th moments
    double c0_f = 0.0;          // coercivity of the cut-off kernel against f_t
    double intK = 0.0;          // trapezoid of K1^2 + K3^2 over [0, t]
};

struct GronwallReport {
    std::vector<GronwallSample> samples;
    double H0 = 0.0;
    double C_star = 0.0;              // smallest constant closing the envelope
    double C_budget = 0.0;            // 2x the stored reference calibration
    bool envelope_holds_fitted = false;
    bool envelope_holds_budget = false;
    bool monotone_after_first = false;
    std::uint64_t config_hash = 0;
};

/// Evolves f and g with the same scheme and fits the relative-entropy
/// envelope H(f_t|g_t) <= H0 exp(C int (K1^2 + K3^2)).
GronwallReport run_weak_strong(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------

struct EntropyIdentityWindow {
    double t_mid = 0.0;
    double slope = 0.0;            // finite-difference slope of H(f|g)
    double rhs_mid = 0.0;          // -G + B averaged over the window ends
    double residual = 0.0;         // slope - rhs_mid
    bool direction_ok = false;     // slope <= rhs_mid + tolerance
};

struct EntropyIdentityReport {
    std::vector<EntropyIdentityWindow> windows;
    double max_abs_residual = 0.0;
    bool all_directions_ok = false;
    std::uint64_t config_hash = 0;
};

/// Compares the slope of H(f_t|g_t) between consecutive paired samples with
/// -G + B at the window midpoint (trapezoid of the endpoint values).
EntropyIdentityReport check_entropy_identity(const std::vector<double>& times,
                                             const std::vector<ScalarField>& f_samples,
                                             const std::vector<ScalarField>& g_samples,
                                             double tol_abs, double tol_rel,
                                             const PairSumOptions& pair_opts);

struct EntropyIdentityRefinement {
    EntropyIdentityReport coarse;
    EntropyIdentityReport fine;   // h and sample window halved
    double residual_ratio = 0.0;  // coarse max residual / fine max residual
    std::uint64_t config_hash = 0;
};

EntropyIdentityRefinement run_entropy_identity(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------

struct MaxwellPropagationReport {
    std::vector<double> times;
    std::vector<MaxwellEnvelope> envelopes;
    double corridor_lo = 0.0, corridor_hi = 0.0;
    bool pass = false;
    std::uint64_t config_hash = 0;
};

MaxwellPropagationReport run_maxwellian_propagation(const ExperimentConfig& cfg);

struct MomentPropagationReport {
    std::vector<double> times;
    std::vector<double> moment_g;
    std::vector<double> moment_f;  // empty when no f0 configured
    double moment_order = 0.0;     // rho - gamma
    double growth_limit = 0.0;
    bool pass = false;
    std::uint64_t config_hash = 0;
};

MomentPropagationReport run_moment_propagation(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------

struct MaxPrincipleReport {
    double max_subsolution = 0.0;    // sup_t max_v of evolved (k psi0 - g)
    double max_supersolution = 0.0;  // sup_t max_v of evolved (g - K psi0)
    double max_sub_envelope = 0.0;   // sup_t max_v of k e^{omega- t} psi0 - g_lin(t)
    double max_super_envelope = 0.0; // sup_t max_v of g_lin(t) - K e^{omega+ t} psi0
    double control_max = 0.0;        // flipped-sign control stays positive
    double omega_minus = 0.0, omega_plus = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::uint64_t config_hash = 0;
};

/// Frozen-coefficient maximum-principle and sub/supersolution tests around the
/// reference density g0.
MaxPrincipleReport run_maximum_principle(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------

struct InterpolationCase {
    std::string field;
    std::string inequality;
    double required_C = 0.0;
};

struct InterpolationReport {
    std::vector<InterpolationCase> cases;  // worst C per (field, inequality)
    double C_star = 0.0;                   // corpus-wide smallest working constant
    double budget = 0.0;
    bool pass = false;
    std::uint64_t config_hash = 0;
};

/// Gradient/Hoelder interpolation inequalities scanned over an analytic corpus
/// on [-L, L]^3 with a log grid of epsilon values.
InterpolationReport run_interpolation_suite(double half_width, double budget);

}  // namespace landau
