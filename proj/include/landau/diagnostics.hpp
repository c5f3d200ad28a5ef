#pragma once

#include <array>
#include <limits>

#include "landau/coefficients.hpp"
#include "landau/functionals.hpp"
#include "landau/solver.hpp"

namespace landau {

/// One time-sample of every monitored functional. Columns that a run does not
/// compute stay NaN and are written as the "nan" literal.
struct DiagnosticsRow {
    static constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
    double t = kNan;
    double mass = kNan, mom_x = kNan, mom_y = kNan, mom_z = kNan, energy = kNan;
    double entropy_v = kNan;
    double dissipation = kNan;
    double rel_entropy = kNan, good_term_v = kNan, bad_term_v = kNan;
    double K1 = kNan, K2 = kNan, K3 = kNan;
    double lambda_hat = kNan, Lambda_hat = kNan, c0_hat = kNan;
    double env_klo = kNan, env_Khi = kNan;
    double clip_count = kNan;

    static constexpr int kColumns = 20;
    static const char* header();
    std::array<double, kColumns> as_array() const;
    static DiagnosticsRow from_array(const std::array<double, kColumns>& a);
};

struct DiagnosticsContext {
    double kappa = 1.0, nu = 2.0, zeta = 1.0, rho = 2.0;
    double mu_envelope = 0.0;        // 0 disables the Maxwellian envelope columns
    PairSumOptions pair_opts;
    bool with_pair_functionals = true;   // dissipation (and good/bad when paired)
    bool with_coefficients = true;       // lambda/Lambda/c0 columns
    bool with_time_derivative = true;    // K2 via a fresh rhs evaluation
    ConvolutionEngine* engine = nullptr; // required when coefficients are on
};

/// Fills a row from the strong-side density g and (optionally) the weak-side
/// density f. Conventions: with f present, mass/momentum/energy/entropy/
/// dissipation and c0 describe f; K1..K3, ellipticity and the Maxwellian
/// envelope always describe g; rel_entropy/good/bad need both.
DiagnosticsRow compute_diagnostics(double t, const ScalarField& g, const ScalarField* f,
                                   const StepReport* last_step, const DiagnosticsContext& ctx);

}  // namespace landau
