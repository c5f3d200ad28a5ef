#include "landau/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "landau/errors.hpp"
#include "landau/parallel.hpp"

namespace landau {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// r2 -> r2^e with fast paths for the exponents of gamma in {-2, -2.5, -3}.
struct RadialPow {
    double e = 0.0;
    int spec = 3;

    explicit RadialPow(double gamma) {
        e = 0.5 * (gamma + 2.0);
        if (e == 0.0) spec = 0;
        else if (e == -0.5) spec = 1;
        else if (e == -0.25) spec = 2;
        else spec = 3;
    }
    double operator()(double r2) const {
        switch (spec) {
            case 0: return 1.0;
            case 1: return 1.0 / std::sqrt(r2);
            case 2: return 1.0 / std::sqrt(std::sqrt(r2));
            default: return std::pow(r2, e);
        }
    }
};

struct PairData {
    std::vector<Vec3> coords;
    std::vector<double> f;
    std::vector<double> fmg;  // f - g
    std::vector<Vec3> pf;     // (1/2) grad ln f, zeroed untrusted
    std::vector<Vec3> pg;
    std::vector<Vec3> pd;     // pf - pg
    std::vector<Vec3> A;      // f * pd
    RadialPow kern;
    double prefactor;         // 4 h^6
};

std::vector<Vec3> node_coords(const GridSpec& g) {
    std::vector<Vec3> coords(g.size());
    const int n = g.points_per_axis;
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz) coords[idx++] = g.node(ix, iy, iz);
    return coords;
}

PairData make_pair_data(const ScalarField& f, const ScalarField* g) {
    if (g && !(g->grid == f.grid)) throw ConfigError("pair functionals: grid mismatch");
    PairData d{node_coords(f.grid), f.values, {}, {}, {}, {}, {}, RadialPow(f.grid.gamma), 0.0};
    const std::size_t m = f.values.size();
    const VectorField pf = half_log_gradient(f);
    d.pf = pf.values;
    if (g) {
        const VectorField pg = half_log_gradient(*g);
        d.pg = pg.values;
        d.fmg.resize(m);
        d.pd.resize(m);
        d.A.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            d.fmg[i] = f.values[i] - g->values[i];
            d.pd[i] = d.pf[i] - d.pg[i];
            d.A[i] = f.values[i] * d.pd[i];
        }
    } else {
        d.pg.assign(m, Vec3{});
        d.fmg.assign(m, 0.0);
        d.pd.assign(m, Vec3{});
        d.A.assign(m, Vec3{});
    }
    const double h3 = f.grid.cell_volume();
    d.prefactor = 4.0 * h3 * h3;
    return d;
}

struct Terms {
    double d = 0.0, g = 0.0, b = 0.0;
};

/// One unordered pair (both orientations of the bad term folded in).
template <bool WantD, bool WantG, bool WantB>
inline Terms pair_terms(const PairData& ctx, std::size_t i, std::size_t j) {
    Terms t;
    const Vec3 z = ctx.coords[i] - ctx.coords[j];
    const double r2 = norm2(z);
    const double k = ctx.kern(r2);
    const double inv = 1.0 / r2;
    const double ff = ctx.f[i] * ctx.f[j];
    if constexpr (WantD) {
        const Vec3 dp = ctx.pf[i] - ctx.pf[j];
        const Vec3 w = dp - (dot(z, dp) * inv) * z;
        t.d = ff * k * dot(w, w);
    }
    if constexpr (WantG) {
        const Vec3 dq = ctx.pd[i] - ctx.pd[j];
        const Vec3 w = dq - (dot(z, dq) * inv) * z;
        t.g = ff * k * dot(w, w);
    }
    if constexpr (WantB) {
        const Vec3 dpg = ctx.pg[i] - ctx.pg[j];
        const Vec3 w = dpg - (dot(z, dpg) * inv) * z;
        t.b = k * (dot(ctx.A[j], w) * ctx.fmg[i] - dot(ctx.A[i], w) * ctx.fmg[j]);
    }
    return t;
}

template <bool WantD, bool WantG, bool WantB>
Terms full_pair_sum(const PairData& ctx) {
    const std::size_t m = ctx.f.size();
    const std::size_t n_chunks = std::min<std::size_t>(192, m);
    struct Acc {
        double d = 0.0, g = 0.0, b = 0.0;
    };
    auto chunk_fn = [&](std::size_t c) {
        Acc a;
        for (std::size_t i = c; i < m; i += n_chunks) {
            if (ctx.f[i] == 0.0 && !WantB) continue;
            for (std::size_t j = i + 1; j < m; ++j) {
                const Terms t = pair_terms<WantD, WantG, WantB>(ctx, i, j);
                a.d += t.d;
                a.g += t.g;
                a.b += t.b;
            }
        }
        return a;
    };
    const std::vector<Acc> accs = map_chunks<Acc>(n_chunks, chunk_fn);
    std::vector<double> ds(n_chunks), gs(n_chunks), bs(n_chunks);
    for (std::size_t c = 0; c < n_chunks; ++c) {
        ds[c] = accs[c].d;
        gs[c] = accs[c].g;
        bs[c] = accs[c].b;
    }
    return {pairwise_sum(ds), pairwise_sum(gs), pairwise_sum(bs)};
}

/// Deterministic low-discrepancy (R2 sequence) pair sampling; estimates the
/// unordered-pair total and its standard error.
template <bool WantD, bool WantG, bool WantB>
void subsampled_pair_sum(const PairData& ctx, const PairSumOptions& opts, Terms& mean_total,
                         Terms& se_total, std::uint64_t& used) {
    const std::size_t m = ctx.f.size();
    const double total_pairs = 0.5 * static_cast<double>(m) * static_cast<double>(m - 1);
    std::uint64_t samples = static_cast<std::uint64_t>(opts.sample_fraction * total_pairs);
    samples = std::max<std::uint64_t>(samples, 10000);
    samples = std::min<std::uint64_t>(samples, static_cast<std::uint64_t>(total_pairs));

    constexpr double kA1 = 0.7548776662466927;  // 1/rho, rho the plastic constant
    constexpr double kA2 = 0.5698402909980532;  // 1/rho^2
    const double offset = static_cast<double>(1 + (opts.seed % 100003) * 31);

    const std::size_t n_chunks = 64;
    struct Acc {
        Terms sum, sumsq;
        std::uint64_t count = 0;
    };
    auto chunk_fn = [&](std::size_t c) {
        Acc a;
        for (std::uint64_t s = c; s < samples; s += n_chunks) {
            const double n = offset + static_cast<double>(s);
            double u = std::fmod(0.5 + n * kA1, 1.0);
            double v = std::fmod(0.5 + n * kA2, 1.0);
            std::size_t i = static_cast<std::size_t>(u * m);
            std::size_t j = static_cast<std::size_t>(v * m);
            if (i >= m) i = m - 1;
            if (j >= m) j = m - 1;
            if (i == j) continue;
            if (i > j) std::swap(i, j);
            const Terms t = pair_terms<WantD, WantG, WantB>(ctx, i, j);
            a.sum.d += t.d;
            a.sum.g += t.g;
            a.sum.b += t.b;
            a.sumsq.d += t.d * t.d;
            a.sumsq.g += t.g * t.g;
            a.sumsq.b += t.b * t.b;
            a.count += 1;
        }
        return a;
    };
    const std::vector<Acc> accs = map_chunks<Acc>(n_chunks, chunk_fn);
    Terms sum, sumsq;
    std::uint64_t count = 0;
    std::vector<double> cd(n_chunks), cg(n_chunks), cb(n_chunks);
    std::vector<double> qd(n_chunks), qg(n_chunks), qb(n_chunks);
    for (std::size_t c = 0; c < n_chunks; ++c) {
        cd[c] = accs[c].sum.d;
        cg[c] = accs[c].sum.g;
        cb[c] = accs[c].sum.b;
        qd[c] = accs[c].sumsq.d;
        qg[c] = accs[c].sumsq.g;
        qb[c] = accs[c].sumsq.b;
        count += accs[c].count;
    }
    sum = {pairwise_sum(cd), pairwise_sum(cg), pairwise_sum(cb)};
    sumsq = {pairwise_sum(qd), pairwise_sum(qg), pairwise_sum(qb)};
    used = count;
    const double nS = static_cast<double>(count);
    auto finish = [&](double s, double sq, double& mean_out, double& se_out) {
        const double mean = s / nS;
        const double var = std::max(0.0, (sq / nS - mean * mean)) * (nS / std::max(1.0, nS - 1));
        mean_out = mean * total_pairs;
        se_out = std::sqrt(var / nS) * total_pairs;
    };
    finish(sum.d, sumsq.d, mean_total.d, se_total.d);
    finish(sum.g, sumsq.g, mean_total.g, se_total.g);
    finish(sum.b, sumsq.b, mean_total.b, se_total.b);
}

bool use_full_sums(const GridSpec& g, const PairSumOptions& opts) {
    switch (opts.mode) {
        case PairSumOptions::Mode::Full: return true;
        case PairSumOptions::Mode::Subsample: return false;
        default: return g.points_per_axis <= 24;
    }
}

template <bool WantD, bool WantG, bool WantB>
PairFunctionals run_pair_sums(const ScalarField& f, const ScalarField* g,
                              const PairSumOptions& opts) {
    const PairData ctx = make_pair_data(f, g);
    PairFunctionals out;
    if (use_full_sums(f.grid, opts)) {
        const Terms t = full_pair_sum<WantD, WantG, WantB>(ctx);
        out.dissipation = {ctx.prefactor * t.d, 0.0, 0, false};
        out.good = {ctx.prefactor * t.g, 0.0, 0, false};
        out.bad = {ctx.prefactor * t.b, 0.0, 0, false};
    } else {
        Terms mean, se;
        std::uint64_t used = 0;
        subsampled_pair_sum<WantD, WantG, WantB>(ctx, opts, mean, se, used);
        out.dissipation = {ctx.prefactor * mean.d, ctx.prefactor * se.d, used, true};
        out.good = {ctx.prefactor * mean.g, ctx.prefactor * se.g, used, true};
        out.bad = {ctx.prefactor * mean.b, ctx.prefactor * se.b, used, true};
    }
    return out;
}

}  // namespace

double entropy(const ScalarField& f) {
    std::vector<double> terms(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double v = f.values[i];
        terms[i] = v > 0.0 ? v * std::log(v) : 0.0;
    }
    return f.grid.cell_volume() * pairwise_sum(terms);
}

double relative_entropy(const ScalarField& f, const ScalarField& g) {
    if (!(f.grid == g.grid)) throw ConfigError("relative_entropy: grid mismatch");
    std::vector<double> terms(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double fv = f.values[i];
        const double gv = g.values[i];
        if (gv > 0.0) {
            if (fv > 0.0) {
                const double phi = fv / gv;
                terms[i] = (phi * std::log(phi) - phi + 1.0) * gv;
            } else {
                terms[i] = gv;  // phi = 0: integrand is g
            }
        } else if (fv > 0.0) {
            return kInf;
        } else {
            terms[i] = 0.0;
        }
    }
    return f.grid.cell_volume() * pairwise_sum(terms);
}

double pinsker_gap(const ScalarField& f, const ScalarField& g) {
    if (!(f.grid == g.grid)) throw ConfigError("pinsker_gap: grid mismatch");
    const double mf = integrate(f);
    const double mg = integrate(g);
    if (std::abs(mf - 1.0) > 1e-6 || std::abs(mg - 1.0) > 1e-6)
        throw ConfigError("pinsker_gap: inputs must have unit mass within 1e-6");
    const double h = relative_entropy(f, g);
    if (h == kInf) return kInf;
    std::vector<double> terms(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double a = std::sqrt(std::max(0.0, f.values[i]));
        const double b = std::sqrt(std::max(0.0, g.values[i]));
        terms[i] = (a - b) * (a - b);
    }
    return h - f.grid.cell_volume() * pairwise_sum(terms);
}

LogField floored_log(const ScalarField& f) {
    LogField out;
    out.log_values = ScalarField(f.grid);
    out.trusted.assign(f.values.size(), 0);
    const double fmax = *std::max_element(f.values.begin(), f.values.end());
    if (!(fmax > 0.0)) {
        out.floor = 0.0;
        out.any_trusted = false;
        return out;
    }
    out.floor = kTrustedFraction * fmax;
    const double log_floor = std::log(out.floor);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double v = f.values[i];
        // True logs wherever f > 0 (so log-derived stencils are exact on
        // Maxwellians); the floor only replaces empty cells.
        out.log_values.values[i] = v > 0.0 ? std::log(v) : log_floor;
        if (v > out.floor) {
            out.trusted[i] = 1;
            out.any_trusted = true;
        }
    }
    return out;
}

VectorField half_log_gradient(const ScalarField& f) {
    const LogField lf = floored_log(f);
    VectorField out(f.grid);
    if (!lf.any_trusted) return out;
    const VectorField grad = gradient(lf.log_values, GhostRule::LinearExtrapolate);
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = lf.trusted[i] ? 0.5 * grad.values[i] : Vec3{};
    return out;
}

double weighted_relative_fisher(const ScalarField& f, const ScalarField& g) {
    if (!(f.grid == g.grid)) throw ConfigError("weighted_relative_fisher: grid mismatch");
    const LogField lg = floored_log(g);
    if (!lg.any_trusted) throw ConfigError("weighted_relative_fisher: empty trusted region");
    const VectorField pf = half_log_gradient(f);
    const VectorField pg = half_log_gradient(g);
    const GridSpec& grid = f.grid;
    const int n = grid.points_per_axis;
    std::vector<double> terms(f.values.size(), 0.0);
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz, ++idx) {
                if (!(f.values[idx] > 0.0) || !lg.trusted[idx]) continue;
                const Vec3 pd = pf.values[idx] - pg.values[idx];
                const double w = jbracket_pow(grid.node(ix, iy, iz), grid.gamma);
                terms[idx] = 4.0 * f.values[idx] * norm2(pd) * w;
            }
    return grid.cell_volume() * pairwise_sum(terms);
}

double sqrt_gradient_mass(const ScalarField& f) {
    const VectorField pf = half_log_gradient(f);
    const GridSpec& grid = f.grid;
    const int n = grid.points_per_axis;
    std::vector<double> terms(f.values.size(), 0.0);
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz, ++idx) {
                if (!(f.values[idx] > 0.0)) continue;
                const double w = jbracket_pow(grid.node(ix, iy, iz), grid.gamma);
                terms[idx] = f.values[idx] * norm2(pf.values[idx]) * w;
            }
    return grid.cell_volume() * pairwise_sum(terms);
}

PairSumResult entropy_dissipation(const ScalarField& f, const PairSumOptions& opts) {
    return run_pair_sums<true, false, false>(f, nullptr, opts).dissipation;
}

PairSumResult good_term(const ScalarField& f, const ScalarField& g, const PairSumOptions& opts) {
    return run_pair_sums<false, true, false>(f, &g, opts).good;
}

PairSumResult bad_term(const ScalarField& f, const ScalarField& g, const PairSumOptions& opts) {
    return run_pair_sums<false, false, true>(f, &g, opts).bad;
}

PairFunctionals pair_functionals(const ScalarField& f, const ScalarField& g,
                                 const PairSumOptions& opts) {
    return run_pair_sums<true, true, true>(f, &g, opts);
}

namespace {

template <typename ValueFn>
double holder_sup(const GridSpec& grid, double alpha, double max_radius, int stride,
                  ValueFn&& diff_norm) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("holder_seminorm: alpha in (0,1)");
    if (stride < 1) throw ConfigError("holder_seminorm: stride >= 1");
    const int n = grid.points_per_axis;
    std::vector<std::size_t> sel;
    std::vector<Vec3> pos;
    for (int ix = 0; ix < n; ix += stride)
        for (int iy = 0; iy < n; iy += stride)
            for (int iz = 0; iz < n; iz += stride) {
                const Vec3 v = grid.node(ix, iy, iz);
                if (norm(v) <= max_radius) {
                    sel.push_back(grid.index(ix, iy, iz));
                    pos.push_back(v);
                }
            }
    double sup = 0.0;
    for (std::size_t a = 0; a < sel.size(); ++a)
        for (std::size_t b = a + 1; b < sel.size(); ++b) {
            const double dist = norm(pos[a] - pos[b]);
            const double ratio = diff_norm(sel[a], sel[b]) / std::pow(dist, alpha);
            sup = std::max(sup, ratio);
        }
    return sup;
}

}  // namespace

double holder_seminorm(const ScalarField& phi, double alpha, double max_radius, int stride) {
    return holder_sup(phi.grid, alpha, max_radius, stride, [&](std::size_t a, std::size_t b) {
        return std::abs(phi.values[a] - phi.values[b]);
    });
}

double holder_seminorm(const SymMatrixField& phi, double alpha, double max_radius, int stride) {
    return holder_sup(phi.grid, alpha, max_radius, stride, [&](std::size_t a, std::size_t b) {
        return sym_operator_norm(phi.values[a] - phi.values[b]);
    });
}

EnvelopeReport log_derivative_envelopes(const ScalarField& g, double kappa, double nu,
                                        double zeta, const ScalarField* dt_g) {
    if (kappa < 0.0 || nu < 0.0 || zeta < 0.0)
        throw ConfigError("log_derivative_envelopes: exponents must be >= 0");
    const LogField lg = floored_log(g);
    if (!lg.any_trusted) throw ConfigError("log_derivative_envelopes: empty trusted region");
    EnvelopeReport rep;
    rep.kappa = kappa;
    rep.nu = nu;
    rep.zeta = zeta;

    const GridSpec& grid = g.grid;
    const int n = grid.points_per_axis;
    const VectorField grad = gradient(lg.log_values, GhostRule::LinearExtrapolate);
    const SymMatrixField hess = hessian(lg.log_values, GhostRule::LinearExtrapolate);
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz, ++idx) {
                if (!lg.trusted[idx]) continue;
                const Vec3 v = grid.node(ix, iy, iz);
                const double r1 = norm(grad.values[idx]) / jbracket_pow(v, kappa);
                if (r1 > rep.K1) {
                    rep.K1 = r1;
                    rep.argmax_K1 = {ix, iy, iz};
                }
                const double r3 = sym_operator_norm(hess.values[idx]) / jbracket_pow(v, zeta);
                if (r3 > rep.K3) {
                    rep.K3 = r3;
                    rep.argmax_K3 = {ix, iy, iz};
                }
                if (dt_g) {
                    const double r2 =
                        std::abs(dt_g->values[idx] / g.values[idx]) / jbracket_pow(v, nu);
                    if (r2 > rep.K2) {
                        rep.K2 = r2;
                        rep.argmax_K2 = {ix, iy, iz};
                    }
                }
            }
    rep.has_K2 = dt_g != nullptr;
    return rep;
}

MaxwellEnvelope maxwellian_envelope(const ScalarField& g, double mu, double radius_fraction) {
    if (!(mu > 0.0)) throw ConfigError("maxwellian_envelope: mu must be > 0");
    const GridSpec& grid = g.grid;
    const double radius = radius_fraction * grid.half_width;
    MaxwellEnvelope env;
    env.mu = mu;
    env.radius = radius;
    env.k_lo = kInf;
    env.K_hi = -kInf;
    const int n = grid.points_per_axis;
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz, ++idx) {
                const Vec3 v = grid.node(ix, iy, iz);
                if (norm(v) > radius) continue;
                const double ratio = g.values[idx] * std::exp(mu * norm2(v));
                env.k_lo = std::min(env.k_lo, ratio);
                env.K_hi = std::max(env.K_hi, ratio);
            }
    return env;
}

}  // namespace landau
