#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "landau/grid.hpp"

namespace landau {

/// Relative threshold of the trusted region {f > tau * max f} inside which
/// log-derived quantities are evaluated; below it floating-point quotients are
/// noise. Reported alongside every envelope.
inline constexpr double kTrustedFraction = 1e-12;

/// h^3 * sum f ln f with 0 ln 0 = 0.
double entropy(const ScalarField& f);

/// Nonnegative-integrand form sum (phi ln phi - phi + 1) g over cells with
/// g > 0, phi = f/g. Returns +infinity when f > 0 meets g = 0; never negative.
double relative_entropy(const ScalarField& f, const ScalarField& g);

/// H(f|g) - integral |sqrt f - sqrt g|^2. Requires unit masses (1e-6).
double pinsker_gap(const ScalarField& f, const ScalarField& g);

/// integral |grad ln(f/g)|^2 <v>^gamma f over cells where f > 0 and g is
/// trusted, in the square-root pairing (see pair functionals below).
double weighted_relative_fisher(const ScalarField& f, const ScalarField& g);

/// O(N^6) pair-sum evaluation policy. Auto = full sums up to N = 24, the
/// deterministic low-discrepancy subsample estimator beyond.
struct PairSumOptions {
    enum class Mode { Auto, Full, Subsample };
    Mode mode = Mode::Auto;
    double sample_fraction = 0.01;  // fraction of unordered pairs when subsampling
    std::uint64_t seed = 0;
};

struct PairSumResult {
    double value = 0.0;
    double standard_error = 0.0;  // 0 for full sums
    std::uint64_t sampled_pairs = 0;
    bool subsampled = false;
};

/// Entropy dissipation D(f) >= 0: the weighted squared norm of the projected
/// pair gradient of sqrt(f f'). Pair gradients are log-paired: each node
/// carries (1/2) sqrt(f) grad ln f, which annihilates exactly on discrete
/// Maxwellians (the log field is quadratic, central differences are exact).
PairSumResult entropy_dissipation(const ScalarField& f, const PairSumOptions& opts = {});

/// Good term of the relative-entropy evolution, >= 0, zero at f = g.
PairSumResult good_term(const ScalarField& f, const ScalarField& g,
                        const PairSumOptions& opts = {});

/// Bad term (signed), in the unsymmetrized one-derivative-of-f form.
PairSumResult bad_term(const ScalarField& f, const ScalarField& g,
                       const PairSumOptions& opts = {});

/// D(f), G(f,g), B(f,g) in one pass over pairs (shared kernel evaluations).
struct PairFunctionals {
    PairSumResult dissipation;
    PairSumResult good;
    PairSumResult bad;
};
PairFunctionals pair_functionals(const ScalarField& f, const ScalarField& g,
                                 const PairSumOptions& opts = {});

/// Sampled sup of |phi(v) - phi(w)| / |v - w|^alpha over a deterministic
/// stride lattice restricted to |v|, |w| <= max_radius (infinity = whole box).
/// A lower bound of the true seminorm, reported as such.
double holder_seminorm(const ScalarField& phi, double alpha, double max_radius, int stride);
/// Matrix-field variant; differences measured in the operator norm.
double holder_seminorm(const SymMatrixField& phi, double alpha, double max_radius, int stride);

struct EnvelopeReport {
    double K1 = 0.0, K2 = 0.0, K3 = 0.0;
    double kappa = 0.0, nu = 0.0, zeta = 0.0;
    double tau = kTrustedFraction;
    std::array<int, 3> argmax_K1{}, argmax_K2{}, argmax_K3{};
    bool has_K2 = false;
};

/// K1 = max |grad ln g| / <v>^kappa, K3 = max ||hess ln g||_op / <v>^zeta over
/// the trusted region; K2 = max |dt ln g| / <v>^nu when dt_g is supplied.
EnvelopeReport log_derivative_envelopes(const ScalarField& g, double kappa, double nu,
                                        double zeta, const ScalarField* dt_g = nullptr);

struct MaxwellEnvelope {
    double mu = 0.0;
    double k_lo = 0.0;
    double K_hi = 0.0;
    double radius = 0.0;  // envelope taken over |v| <= radius
};

/// Sandwich constants k_lo = min g e^{mu |v|^2}, K_hi = max, over the
/// subdomain |v| <= radius_fraction * L.
MaxwellEnvelope maxwellian_envelope(const ScalarField& g, double mu,
                                    double radius_fraction = 0.8);

/// Weighted sqrt-gradient mass integral |grad sqrt f|^2 <v>^gamma, the left
/// side of the dissipation lower bound.
double sqrt_gradient_mass(const ScalarField& f);

/// Floored log field and trusted mask shared by the log-derived quantities.
struct LogField {
    ScalarField log_values;       // ln(max(f, tau * max f))
    std::vector<char> trusted;    // f > tau * max f
    double floor = 0.0;
    bool any_trusted = false;
};
LogField floored_log(const ScalarField& f);

/// (1/2) grad ln f per node, zeroed outside the trusted region: the
/// square-root-paired gradient entering every pair functional.
VectorField half_log_gradient(const ScalarField& f);

}  // namespace landau
