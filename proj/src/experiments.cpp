#include "landau/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "landau/errors.hpp"

namespace landau {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double maxwellian_value(const Vec3& v, double mu, const Vec3& mean, double mass) {
    const double norm_c = mass * std::pow(mu / M_PI, 1.5);
    const Vec3 d = v - mean;
    return norm_c * std::exp(-mu * norm2(d));
}

}  // namespace

ScalarField build_initial(const GridSpec& grid, const InitialSpec& spec) {
    if (!(spec.mu > 0.0)) throw ConfigError("initial data: mu must be > 0");
    if (!(spec.mass > 0.0)) throw ConfigError("initial data: mass must be > 0");
    const double L = grid.half_width;
    ScalarField f(grid);
    switch (spec.type) {
        case InitialSpec::Type::Maxwellian:
            f = ScalarField::from_function(grid, [&](Vec3 v) {
                return maxwellian_value(v, spec.mu, spec.mean, spec.mass);
            });
            break;
        case InitialSpec::Type::PerturbedMaxwellian: {
            if (!(std::abs(spec.amplitude) < 1.0))
                throw ConfigError("initial data: |amplitude| must be < 1");
            const double k = M_PI * spec.mode / L;
            f = ScalarField::from_function(grid, [&](Vec3 v) {
                return maxwellian_value(v, spec.mu, spec.mean, spec.mass) *
                       (1.0 + spec.amplitude * std::cos(k * v.x));
            });
            break;
        }
        case InitialSpec::Type::Bimodal: {
            const Vec3 offset{spec.separation, 0.0, 0.0};
            f = ScalarField::from_function(grid, [&](Vec3 v) {
                return 0.5 * (maxwellian_value(v, spec.mu, spec.mean + offset, spec.mass) +
                              maxwellian_value(v, spec.mu, spec.mean - offset, spec.mass));
            });
            break;
        }
    }
    // Renormalize to the requested mass on the truncated box.
    const double m = integrate(f);
    if (!(m > 0.0)) throw ConfigError("initial data: non-positive mass after discretization");
    const double scale = spec.mass / m;
    for (double& v : f.values) v *= scale;
    return f;
}

double auto_rho(double kappa, double nu, double zeta, double gamma) {
    return std::max(std::max(2.0 * kappa, 2.0 * kappa + 2.0 * gamma + 4.0),
                    std::max(2.0 * zeta, nu));
}

const std::map<std::string, double>& default_tolerances() {
    static const std::map<std::string, double> table = {
        {"entropy_step_slack", 1e-8},
        {"conservation_rel", 1e-12},
        {"max_principle", 1e-10},
        {"corridor_lo", 0.25},
        {"corridor_hi", 4.0},
        {"moment_growth", 1.5},
        {"identity_tol_abs", 1e-7},
        {"identity_tol_rel", 0.5},
        {"interpolation_budget", 10.0},
        // 2x the fitted constant of the stored reference family (gamma = -3,
        // N = 24, L = 6, 10% bump); regenerate via run_weak_strong if the
        // reference configuration changes.
        {"weak_strong_C_budget", 0.0},  // calibrated below, see acceptance suite
    };
    return table;
}

double tolerance(const ExperimentConfig& cfg, const std::string& name) {
    if (auto it = cfg.tolerances.find(name); it != cfg.tolerances.end()) return it->second;
    const auto& defaults = default_tolerances();
    if (auto it = defaults.find(name); it != defaults.end()) return it->second;
    throw ConfigError("unknown tolerance key: " + name);
}

namespace {

struct EvolvedPair {
    Trajectory g;
    std::optional<Trajectory> f;
};

SolverConfig solver_config_from(const ExperimentConfig& cfg) {
    SolverConfig sc;
    sc.T = cfg.T;
    sc.cfl = cfg.cfl;
    sc.projection = cfg.projection;
    sc.cadence = cfg.cadence;
    sc.snapshot_times = cfg.snapshot_times;
    sc.entropy_step_slack = tolerance(cfg, "entropy_step_slack");
    return sc;
}

EvolvedPair evolve_pair(const ExperimentConfig& cfg, ConvolutionEngine& engine) {
    const ScalarField g0 = build_initial(cfg.grid, cfg.g0);
    const SolverConfig sc = solver_config_from(cfg);
    EvolvedPair out{evolve(g0, sc, engine), std::nullopt};
    if (cfg.f0) {
        ScalarField f0 = build_initial(cfg.grid, *cfg.f0);
        if (cfg.f0->match_conserved_of_g0)
            f0 = conservative_projection(f0, conserved_triple(g0));
        out.f = evolve(f0, sc, engine);
    }
    return out;
}

double effective_rho(const ExperimentConfig& cfg) {
    return cfg.rho_auto ? auto_rho(cfg.kappa, cfg.nu, cfg.zeta, cfg.grid.gamma) : cfg.rho;
}

}  // namespace

GronwallReport run_weak_strong(const ExperimentConfig& cfg) {
    if (!cfg.f0) throw ConfigError("weak_strong: config must provide an f0 spec");
    ConvolutionEngine engine(cfg.grid);
    const EvolvedPair pair = evolve_pair(cfg, engine);
    const Trajectory& tg = pair.g;
    const Trajectory& tf = *pair.f;
    if (tg.samples.size() != tf.samples.size())
        throw NumericalError("weak_strong: sample schedules diverged");

    const double rho = effective_rho(cfg);
    const double moment_order = rho - cfg.grid.gamma;

    GronwallReport rep;
    rep.config_hash = cfg.config_hash;
    rep.H0 = relative_entropy(tf.samples.front().g, tg.samples.front().g);
    if (rep.H0 == kInf) throw ConfigError("weak_strong: H(f0|g0) is infinite");

    double intK = 0.0;
    double prevK2 = 0.0;
    double prev_t = 0.0;
    for (std::size_t k = 0; k < tg.samples.size(); ++k) {
        const auto& sg = tg.samples[k];
        const auto& sf = tf.samples[k];
        GronwallSample s;
        s.t = sg.t;
        s.H = relative_entropy(sf.g, sg.g);
        const EnvelopeReport env = log_derivative_envelopes(sg.g, cfg.kappa, cfg.nu, cfg.zeta);
        s.K1 = env.K1;
        s.K3 = env.K3;
        s.Mf = moment(sf.g, moment_order);
        s.Mg = moment(sg.g, moment_order);
        s.c0_f = coercivity_c0(sf.g, engine).c0_hat;
        const double K2sum = s.K1 * s.K1 + s.K3 * s.K3;
        if (k > 0) intK += 0.5 * (prevK2 + K2sum) * (s.t - prev_t);
        s.intK = intK;
        prevK2 = K2sum;
        prev_t = s.t;
        rep.samples.push_back(s);
    }

    rep.C_star = 0.0;
    for (std::size_t k = 1; k < rep.samples.size(); ++k) {
        const auto& s = rep.samples[k];
        if (s.H > rep.H0 && rep.H0 > 0.0) {
            if (s.intK > 0.0)
                rep.C_star = std::max(rep.C_star, std::log(s.H / rep.H0) / s.intK);
            else
                rep.C_star = kInf;
        }
    }
    rep.envelope_holds_fitted = true;
    for (const auto& s : rep.samples)
        if (rep.H0 > 0.0 && s.H > rep.H0 * std::exp(rep.C_star * s.intK) * (1.0 + 1e-9))
            rep.envelope_holds_fitted = false;

    rep.C_budget = tolerance(cfg, "weak_strong_C_budget");
    rep.envelope_holds_budget = std::isfinite(rep.C_star) && rep.C_star <= rep.C_budget;

    rep.monotone_after_first = true;
    for (std::size_t k = 2; k < rep.samples.size(); ++k)
        if (rep.samples[k].H > rep.samples[k - 1].H * (1.0 + 1e-9) + 1e-15)
            rep.monotone_after_first = false;
    return rep;
}

EntropyIdentityReport check_entropy_identity(const std::vector<double>& times,
                                             const std::vector<ScalarField>& f_samples,
                                             const std::vector<ScalarField>& g_samples,
                                             double tol_abs, double tol_rel,
                                             const PairSumOptions& pair_opts) {
    if (times.size() != f_samples.size() || times.size() != g_samples.size() || times.size() < 2)
        throw ConfigError("check_entropy_identity: need matching sample series (>= 2 samples)");
    const std::size_t n = times.size();
    std::vector<double> H(n), G(n), B(n);
    for (std::size_t k = 0; k < n; ++k) {
        H[k] = relative_entropy(f_samples[k], g_samples[k]);
        const PairFunctionals pf = pair_functionals(f_samples[k], g_samples[k], pair_opts);
        G[k] = pf.good.value;
        B[k] = pf.bad.value;
    }
    EntropyIdentityReport rep;
    rep.all_directions_ok = true;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        EntropyIdentityWindow w;
        const double dt = times[k + 1] - times[k];
        w.t_mid = 0.5 * (times[k] + times[k + 1]);
        w.slope = (H[k + 1] - H[k]) / dt;
        w.rhs_mid = 0.5 * ((-G[k] + B[k]) + (-G[k + 1] + B[k + 1]));
        w.residual = w.slope - w.rhs_mid;
        const double tol =
            tol_abs + tol_rel * 0.5 * (std::abs(G[k]) + std::abs(B[k]) +
                                       std::abs(G[k + 1]) + std::abs(B[k + 1]));
        w.direction_ok = w.slope <= w.rhs_mid + tol;
        rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(w.residual));
        rep.all_directions_ok = rep.all_directions_ok && w.direction_ok;
        rep.windows.push_back(w);
    }
    return rep;
}

namespace {

EntropyIdentityReport identity_at_resolution(const ExperimentConfig& cfg) {
    ConvolutionEngine engine(cfg.grid);
    const EvolvedPair pair = evolve_pair(cfg, engine);
    if (!pair.f) throw ConfigError("entropy_identity: config must provide an f0 spec");
    std::vector<double> times;
    std::vector<ScalarField> fs, gs;
    for (std::size_t k = 0; k < pair.g.samples.size(); ++k) {
        times.push_back(pair.g.samples[k].t);
        gs.push_back(pair.g.samples[k].g);
        fs.push_back(pair.f->samples[k].g);
    }
    PairSumOptions opts;
    opts.mode = PairSumOptions::Mode::Full;
    return check_entropy_identity(times, fs, gs, tolerance(cfg, "identity_tol_abs"),
                                  tolerance(cfg, "identity_tol_rel"), opts);
}

}  // namespace

EntropyIdentityRefinement run_entropy_identity(const ExperimentConfig& cfg) {
    EntropyIdentityRefinement rep;
    rep.config_hash = cfg.config_hash;
    rep.coarse = identity_at_resolution(cfg);
    rep.coarse.config_hash = cfg.config_hash;

    ExperimentConfig fine = cfg;
    fine.grid = make_grid(cfg.grid.half_width, 2 * cfg.grid.points_per_axis, cfg.grid.gamma);
    fine.cadence = 2 * cfg.cadence;  // halves the finite-difference window too
    rep.fine = identity_at_resolution(fine);
    rep.fine.config_hash = cfg.config_hash;

    rep.residual_ratio = rep.fine.max_abs_residual > 0.0
                             ? rep.coarse.max_abs_residual / rep.fine.max_abs_residual
                             : kInf;
    return rep;
}

MaxwellPropagationReport run_maxwellian_propagation(const ExperimentConfig& cfg) {
    ConvolutionEngine engine(cfg.grid);
    const ScalarField g0 = build_initial(cfg.grid, cfg.g0);
    const SolverConfig sc = solver_config_from(cfg);
    const Trajectory traj = evolve(g0, sc, engine);

    MaxwellPropagationReport rep;
    rep.config_hash = cfg.config_hash;
    rep.corridor_lo = tolerance(cfg, "corridor_lo");
    rep.corridor_hi = tolerance(cfg, "corridor_hi");
    for (const auto& s : traj.samples) {
        rep.times.push_back(s.t);
        rep.envelopes.push_back(maxwellian_envelope(s.g, cfg.g0.mu));
    }
    const double klo0 = rep.envelopes.front().k_lo;
    const double Khi0 = rep.envelopes.front().K_hi;
    rep.pass = klo0 > 0.0;
    for (const auto& env : rep.envelopes) {
        if (env.k_lo < rep.corridor_lo * klo0 || env.K_hi > rep.corridor_hi * Khi0)
            rep.pass = false;
    }
    return rep;
}

MomentPropagationReport run_moment_propagation(const ExperimentConfig& cfg) {
    ConvolutionEngine engine(cfg.grid);
    const EvolvedPair pair = evolve_pair(cfg, engine);

    MomentPropagationReport rep;
    rep.config_hash = cfg.config_hash;
    rep.moment_order = effective_rho(cfg) - cfg.grid.gamma;
    rep.growth_limit = tolerance(cfg, "moment_growth");
    for (const auto& s : pair.g.samples) {
        rep.times.push_back(s.t);
        rep.moment_g.push_back(moment(s.g, rep.moment_order));
    }
    if (pair.f)
        for (const auto& s : pair.f->samples) rep.moment_f.push_back(moment(s.g, rep.moment_order));

    auto within = [&](const std::vector<double>& series) {
        if (series.empty()) return true;
        const double limit = rep.growth_limit * series.front();
        for (double v : series)
            if (v > limit) return false;
        return true;
    };
    rep.pass = within(rep.moment_g) && within(rep.moment_f);
    return rep;
}

MaxPrincipleReport run_maximum_principle(const ExperimentConfig& cfg) {
    ConvolutionEngine engine(cfg.grid);
    const ScalarField g0 = build_initial(cfg.grid, cfg.g0);
    const CoefficientPair coeffs = assemble_coefficients(g0, engine);
    const EllipticityReport ell = ellipticity_constants(coeffs.a_bar);
    const double mu = cfg.g0.mu;
    const double c_bar_max = *std::max_element(coeffs.c_bar.values.begin(),
                                               coeffs.c_bar.values.end());

    MaxPrincipleReport rep;
    rep.config_hash = cfg.config_hash;
    rep.tol = tolerance(cfg, "max_principle");
    rep.omega_minus = -6.0 * ell.Lambda_hat * mu;
    // The supersolution rate uses the radial Rayleigh bound (the <v>^gamma
    // improvement along vhat), which is what keeps 4 mu^2 <a v, v> bounded.
    rep.omega_plus = 4.0 * mu * mu * ell.radial_max + c_bar_max;

    const MaxwellEnvelope full_box = maxwellian_envelope(g0, mu, std::sqrt(3.0) * 1.01);
    const double k_test = 0.9 * full_box.k_lo;
    const double K_test = 1.1 * full_box.K_hi;

    const ScalarField psi0 = ScalarField::from_function(
        cfg.grid, [mu](Vec3 v) { return std::exp(-mu * norm2(v)); });

    auto track_max = [](double& acc) {
        return [&acc](double, const ScalarField& u, const StepReport&) {
            for (double v : u.values) acc = std::max(acc, v);
        };
    };

    // Direct conformance: evolve the signed differences under the frozen
    // linear equation; non-positive data must stay non-positive.
    ScalarField u_sub(cfg.grid), u_super(cfg.grid);
    for (std::size_t i = 0; i < g0.values.size(); ++i) {
        u_sub.values[i] = k_test * psi0.values[i] - g0.values[i];
        u_super.values[i] = g0.values[i] - K_test * psi0.values[i];
    }
    rep.max_subsolution = -kInf;
    rep.max_supersolution = -kInf;
    for (double v : u_sub.values) rep.max_subsolution = std::max(rep.max_subsolution, v);
    for (double v : u_super.values) rep.max_supersolution = std::max(rep.max_supersolution, v);
    evolve_frozen(u_sub, coeffs, cfg.T, cfg.cfl, track_max(rep.max_subsolution));
    evolve_frozen(u_super, coeffs, cfg.T, cfg.cfl, track_max(rep.max_supersolution));

    // Envelope form: evolve g itself linearly and compare against the analytic
    // sub/supersolutions k e^{omega t} psi0 with the measured rates.
    rep.max_sub_envelope = -kInf;
    rep.max_super_envelope = -kInf;
    {
        double& sub_acc = rep.max_sub_envelope;
        double& super_acc = rep.max_super_envelope;
        auto cb = [&](double t, const ScalarField& gl, const StepReport&) {
            const double lo = k_test * std::exp(rep.omega_minus * t);
            const double hi = K_test * std::exp(rep.omega_plus * t);
            for (std::size_t i = 0; i < gl.values.size(); ++i) {
                sub_acc = std::max(sub_acc, lo * psi0.values[i] - gl.values[i]);
                super_acc = std::max(super_acc, gl.values[i] - hi * psi0.values[i]);
            }
        };
        cb(0.0, g0, StepReport{});
        evolve_frozen(g0, coeffs, cfg.T, cfg.cfl, cb);
    }

    // Control: flipped sign must not be pushed below zero.
    rep.control_max = kInf;
    {
        double& acc = rep.control_max;
        auto cb = [&acc](double, const ScalarField& u, const StepReport&) {
            double m = -kInf;
            for (double v : u.values) m = std::max(m, v);
            acc = std::min(acc, m);
        };
        evolve_frozen(psi0, coeffs, cfg.T, cfg.cfl, cb);
    }

    rep.pass = rep.max_subsolution <= rep.tol && rep.max_supersolution <= rep.tol &&
               rep.max_sub_envelope <= rep.tol && rep.max_super_envelope <= rep.tol &&
               rep.control_max > 0.0;
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct CorpusEntry {
    std::string name;
    std::function<double(Vec3)> u;
    std::function<Vec3(Vec3)> grad;
    std::function<SymMat3(Vec3)> hess;
};

std::vector<CorpusEntry> interpolation_corpus(double L) {
    std::vector<CorpusEntry> corpus;
    corpus.push_back({"constant",
                      [](Vec3) { return 1.0; },
                      [](Vec3) { return Vec3{}; },
                      [](Vec3) { return SymMat3{}; }});
    corpus.push_back({"sin_v1",
                      [](Vec3 v) { return std::sin(v.x); },
                      [](Vec3 v) { return Vec3{std::cos(v.x), 0.0, 0.0}; },
                      [](Vec3 v) {
                          SymMat3 m;
                          m.xx = -std::sin(v.x);
                          return m;
                      }});
    for (double mu : {0.25, 0.5, 1.0}) {
        corpus.push_back({"gaussian_mu" + std::to_string(mu),
                          [mu](Vec3 v) { return std::exp(-mu * norm2(v)); },
                          [mu](Vec3 v) {
                              const double e = std::exp(-mu * norm2(v));
                              return (-2.0 * mu * e) * v;
                          },
                          [mu](Vec3 v) {
                              const double e = std::exp(-mu * norm2(v));
                              SymMat3 m = (4.0 * mu * mu * e) * outer(v);
                              const double d = -2.0 * mu * e;
                              m.xx += d;
                              m.yy += d;
                              m.zz += d;
                              return m;
                          }});
    }
    corpus.push_back({"v1_gaussian",
                      [](Vec3 v) { return v.x * std::exp(-0.5 * norm2(v)); },
                      [](Vec3 v) {
                          const double e = std::exp(-0.5 * norm2(v));
                          return Vec3{(1.0 - v.x * v.x) * e, -v.x * v.y * e, -v.x * v.z * e};
                      },
                      [](Vec3 v) {
                          const double e = std::exp(-0.5 * norm2(v));
                          SymMat3 m;
                          m.xx = (v.x * v.x - 3.0) * v.x * e;
                          m.xy = (v.x * v.x - 1.0) * v.y * e;
                          m.xz = (v.x * v.x - 1.0) * v.z * e;
                          m.yy = (v.y * v.y - 1.0) * v.x * e;
                          m.yz = v.x * v.y * v.z * e;
                          m.zz = (v.z * v.z - 1.0) * v.x * e;
                          return m;
                      }});
    const double w = M_PI / L;
    corpus.push_back({"trig_bump",
                      [w](Vec3 v) { return std::cos(w * v.x) * std::cos(w * v.y); },
                      [w](Vec3 v) {
                          return Vec3{-w * std::sin(w * v.x) * std::cos(w * v.y),
                                      -w * std::cos(w * v.x) * std::sin(w * v.y), 0.0};
                      },
                      [w](Vec3 v) {
                          SymMat3 m;
                          m.xx = -w * w * std::cos(w * v.x) * std::cos(w * v.y);
                          m.yy = m.xx;
                          m.xy = w * w * std::sin(w * v.x) * std::sin(w * v.y);
                          return m;
                      }});
    return corpus;
}

struct CorpusNorms {
    double sup_u = 0.0, sup_grad = 0.0, sup_hess = 0.0;
    double holder_a = 0.0;       // [u]_alpha
    double holder_b = 0.0;       // [u]_beta
    double holder_grad_a = 0.0;  // [u]_{1+alpha} = sup_i [d_i u]_alpha
};

CorpusNorms corpus_norms(const CorpusEntry& e, double L, double alpha, double beta) {
    CorpusNorms n;
    const int res = 48;
    const double h = 2.0 * L / res;
    std::vector<Vec3> lattice;
    lattice.reserve(static_cast<std::size_t>(res) * res * res);
    for (int ix = 0; ix < res; ++ix)
        for (int iy = 0; iy < res; ++iy)
            for (int iz = 0; iz < res; ++iz)
                lattice.push_back({-L + (ix + 0.5) * h, -L + (iy + 0.5) * h, -L + (iz + 0.5) * h});
    for (const Vec3& v : lattice) {
        n.sup_u = std::max(n.sup_u, std::abs(e.u(v)));
        n.sup_grad = std::max(n.sup_grad, norm(e.grad(v)));
        n.sup_hess = std::max(n.sup_hess, sym_operator_norm(e.hess(v)));
    }
    // Hoelder seminorms: sampled pair sup on a coarser sub-lattice.
    std::vector<Vec3> coarse;
    const int cres = 10;
    const double ch = 2.0 * L / cres;
    for (int ix = 0; ix < cres; ++ix)
        for (int iy = 0; iy < cres; ++iy)
            for (int iz = 0; iz < cres; ++iz)
                coarse.push_back(
                    {-L + (ix + 0.5) * ch, -L + (iy + 0.5) * ch, -L + (iz + 0.5) * ch});
    for (std::size_t a = 0; a < coarse.size(); ++a)
        for (std::size_t b = a + 1; b < coarse.size(); ++b) {
            const double dist = norm(coarse[a] - coarse[b]);
            const double du = std::abs(e.u(coarse[a]) - e.u(coarse[b]));
            n.holder_a = std::max(n.holder_a, du / std::pow(dist, alpha));
            n.holder_b = std::max(n.holder_b, du / std::pow(dist, beta));
            const Vec3 dg = e.grad(coarse[a]) - e.grad(coarse[b]);
            const double dgmax =
                std::max(std::abs(dg.x), std::max(std::abs(dg.y), std::abs(dg.z)));
            n.holder_grad_a = std::max(n.holder_grad_a, dgmax / std::pow(dist, alpha));
        }
    return n;
}

}  // namespace

InterpolationReport run_interpolation_suite(double half_width, double budget) {
    const double alpha = 0.5;
    const double beta = 0.75;
    InterpolationReport rep;
    rep.budget = budget;

    std::vector<double> epsilons;
    for (double eps = 0.5 * half_width; eps > 1e-3; eps *= 0.5) epsilons.push_back(eps);

    for (const CorpusEntry& entry : interpolation_corpus(half_width)) {
        const CorpusNorms n = corpus_norms(entry, half_width, alpha, beta);
        struct Ineq {
            const char* name;
            double lhs, strong, spow, wpow;
        };
        // lhs <= eps^spow * strong + C eps^-wpow * ||u||
        const Ineq forms[4] = {
            {"grad_vs_holder1a", n.sup_grad, n.holder_grad_a, alpha, 1.0},
            {"grad_vs_hess", n.sup_grad, n.sup_hess, 1.0, 1.0},
            {"holdera_vs_holderb", n.holder_a, n.holder_b, beta - alpha, alpha},
            {"holdera_vs_grad", n.holder_a, n.sup_grad, 1.0 - alpha, alpha},
        };
        for (const Ineq& q : forms) {
            double required = 0.0;
            for (double eps : epsilons) {
                if (n.sup_u <= 0.0) continue;
                const double deficit = q.lhs - std::pow(eps, q.spow) * q.strong;
                if (deficit > 0.0)
                    required = std::max(required, deficit * std::pow(eps, q.wpow) / n.sup_u);
            }
            rep.cases.push_back({entry.name, q.name, required});
            rep.C_star = std::max(rep.C_star, required);
        }
    }
    rep.pass = rep.C_star <= budget;
    return rep;
}

}  // namespace landau
