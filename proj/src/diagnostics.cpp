#include "landau/diagnostics.hpp"

#include "landau/errors.hpp"

namespace landau {

const char* DiagnosticsRow::header() {
    return "t,mass,mom_x,mom_y,mom_z,energy,entropy,dissipation,rel_entropy,good_term,"
           "bad_term,K1,K2,K3,lambda_hat,Lambda_hat,c0_hat,env_klo,env_Khi,clip_count";
}

std::array<double, DiagnosticsRow::kColumns> DiagnosticsRow::as_array() const {
    return {t,    mass, mom_x, mom_y, mom_z,      energy,     entropy_v, dissipation,
            rel_entropy, good_term_v, bad_term_v, K1,         K2,        K3,
            lambda_hat,  Lambda_hat,  c0_hat,     env_klo,    env_Khi,   clip_count};
}

DiagnosticsRow DiagnosticsRow::from_array(const std::array<double, kColumns>& a) {
    DiagnosticsRow r;
    r.t = a[0];
    r.mass = a[1];
    r.mom_x = a[2];
    r.mom_y = a[3];
    r.mom_z = a[4];
    r.energy = a[5];
    r.entropy_v = a[6];
    r.dissipation = a[7];
    r.rel_entropy = a[8];
    r.good_term_v = a[9];
    r.bad_term_v = a[10];
    r.K1 = a[11];
    r.K2 = a[12];
    r.K3 = a[13];
    r.lambda_hat = a[14];
    r.Lambda_hat = a[15];
    r.c0_hat = a[16];
    r.env_klo = a[17];
    r.env_Khi = a[18];
    r.clip_count = a[19];
    return r;
}

DiagnosticsRow compute_diagnostics(double t, const ScalarField& g, const ScalarField* f,
                                   const StepReport* last_step, const DiagnosticsContext& ctx) {
    DiagnosticsRow row;
    row.t = t;
    const ScalarField& weak = f ? *f : g;

    const DensityStats stats = conserved_triple(weak);
    row.mass = stats.mass;
    row.mom_x = stats.momentum.x;
    row.mom_y = stats.momentum.y;
    row.mom_z = stats.momentum.z;
    row.energy = stats.energy;
    row.entropy_v = stats.entropy;

    if (f) {
        row.rel_entropy = relative_entropy(*f, g);
        if (ctx.with_pair_functionals) {
            const PairFunctionals pf = pair_functionals(*f, g, ctx.pair_opts);
            row.dissipation = pf.dissipation.value;
            row.good_term_v = pf.good.value;
            row.bad_term_v = pf.bad.value;
        }
    } else if (ctx.with_pair_functionals) {
        row.dissipation = entropy_dissipation(g, ctx.pair_opts).value;
    }

    ScalarField dt_g;
    const ScalarField* dt_ptr = nullptr;
    if (ctx.with_time_derivative) {
        if (!ctx.engine) throw ConfigError("compute_diagnostics: engine required for K2");
        dt_g = rhs(g, *ctx.engine);
        dt_ptr = &dt_g;
    }
    const EnvelopeReport env =
        log_derivative_envelopes(g, ctx.kappa, ctx.nu, ctx.zeta, dt_ptr);
    row.K1 = env.K1;
    row.K3 = env.K3;
    if (env.has_K2) row.K2 = env.K2;

    if (ctx.with_coefficients) {
        if (!ctx.engine) throw ConfigError("compute_diagnostics: engine required for coefficients");
        const SymMatrixField a_bar = coeff_a_bar(g, KernelKind::Full, *ctx.engine);
        const EllipticityReport ell = ellipticity_constants(a_bar);
        row.lambda_hat = ell.lambda_hat;
        row.Lambda_hat = ell.Lambda_hat;
        row.c0_hat = coercivity_c0(weak, *ctx.engine).c0_hat;
    }

    if (ctx.mu_envelope > 0.0) {
        const MaxwellEnvelope menv = maxwellian_envelope(g, ctx.mu_envelope);
        row.env_klo = menv.k_lo;
        row.env_Khi = menv.K_hi;
    }

    if (last_step) row.clip_count = static_cast<double>(last_step->clipped_cells);
    return row;
}

}  // namespace landau
