#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace landau::oracles {

ScalarField discrete_maxwellian(const GridSpec& grid, double mu, Vec3 mean, double mass) {
    const double c = mass * std::pow(mu / M_PI, 1.5);
    return ScalarField::from_function(
        grid, [&](Vec3 v) { return c * std::exp(-mu * norm2(v - mean)); });
}

SymMatrixField brute_force_a_bar(const ScalarField& g, KernelKind kind) {
    const GridSpec& grid = g.grid;
    const int n = grid.points_per_axis;
    const double h3 = grid.cell_volume();
    const SymMat3 singular = singular_cell_matrix(kind, grid.gamma, grid.spacing);
    SymMatrixField out(grid);
    std::size_t vi = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz, ++vi) {
                const Vec3 v = grid.node(ix, iy, iz);
                SymMat3 acc;
                std::size_t wi = 0;
                for (int jx = 0; jx < n; ++jx)
                    for (int jy = 0; jy < n; ++jy)
                        for (int jz = 0; jz < n; ++jz, ++wi) {
                            const double gw = g.values[wi];
                            if (gw == 0.0) continue;
                            SymMat3 k = (vi == wi)
                                            ? singular
                                            : kernel_eval(kind, grid.gamma,
                                                          v - grid.node(jx, jy, jz));
                            k *= gw;
                            acc += k;
                        }
                acc *= h3;
                out.values[vi] = acc;
            }
    return out;
}

ScalarField brute_force_c_bar(const ScalarField& g) {
    const GridSpec& grid = g.grid;
    const double gamma = grid.gamma;
    if (!(gamma > -3.0)) throw std::runtime_error("brute_force_c_bar: gamma must be > -3");
    const int n = grid.points_per_axis;
    const double h3 = grid.cell_volume();
    const double singular = singular_cell_scalar(gamma, grid.spacing);
    ScalarField out(grid);
    std::size_t vi = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz, ++vi) {
                const Vec3 v = grid.node(ix, iy, iz);
                double acc = 0.0;
                std::size_t wi = 0;
                for (int jx = 0; jx < n; ++jx)
                    for (int jy = 0; jy < n; ++jy)
                        for (int jz = 0; jz < n; ++jz, ++wi) {
                            const double gw = g.values[wi];
                            if (gw == 0.0) continue;
                            const double k =
                                (vi == wi)
                                    ? singular
                                    : std::pow(norm2(v - grid.node(jx, jy, jz)), 0.5 * gamma);
                            acc += k * gw;
                        }
                out.values[vi] = 2.0 * (gamma + 3.0) * acc * h3;
            }
    return out;
}

SymMat3 brute_force_a_bar_at(const ScalarField& g, KernelKind kind, const Vec3& v0) {
    const GridSpec& grid = g.grid;
    const int n = grid.points_per_axis;
    const double h3 = grid.cell_volume();
    SymMat3 acc;
    std::size_t wi = 0;
    for (int jx = 0; jx < n; ++jx)
        for (int jy = 0; jy < n; ++jy)
            for (int jz = 0; jz < n; ++jz, ++wi) {
                const Vec3 z = v0 - grid.node(jx, jy, jz);
                if (norm2(z) == 0.0) {
                    SymMat3 k = singular_cell_matrix(kind, grid.gamma, grid.spacing);
                    k *= g.values[wi];
                    acc += k;
                } else {
                    SymMat3 k = kernel_eval(kind, grid.gamma, z);
                    k *= g.values[wi];
                    acc += k;
                }
            }
    acc *= h3;
    return acc;
}

Quadrature gauss_legendre(int n, double a, double b) {
    Quadrature q;
    q.nodes.resize(n);
    q.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev initial guess.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        q.nodes[i] = 0.5 * (b - a) * x + 0.5 * (a + b);
        q.weights[i] = (b - a) / ((1.0 - x * x) * dp * dp);
    }
    return q;
}

SymMat3 IsotropicConv::matrix(const Vec3& v0) const {
    const double r2 = norm2(v0);
    SymMat3 m = transverse * SymMat3::identity();
    m += ((radial - transverse) / r2) * outer(v0);
    return m;
}

namespace {

/// 2D quadrature of int kern_r(|z|) P(u) M(|v0 - z|) dz over z in R^3, with
/// z = rho omega, u = omega . v0hat: the measure is 2 pi rho^2 drho du. The
/// substitution rho = q^2 removes the |z|-power kink at the origin.
template <typename RadialFn, typename AngularFn>
double axisym_integral(RadialFn&& kr, AngularFn&& pu, double mu, double mass, double r0) {
    const double reach = r0 + std::sqrt(60.0 / mu);  // e^{-60} tail cutoff
    const Quadrature qr = gauss_legendre(220, 0.0, std::sqrt(reach));
    const Quadrature qu = gauss_legendre(96, -1.0, 1.0);
    const double norm_c = mass * std::pow(mu / M_PI, 1.5);
    double total = 0.0;
    for (std::size_t a = 0; a < qr.nodes.size(); ++a) {
        const double q = qr.nodes[a];
        const double rho = q * q;
        const double radial = kr(rho) * 2.0 * q * rho * rho;  // rho^2 drho = 2 q^5 dq
        if (radial == 0.0) continue;
        double inner = 0.0;
        for (std::size_t b = 0; b < qu.nodes.size(); ++b) {
            const double u = qu.nodes[b];
            const double s2 = r0 * r0 + rho * rho - 2.0 * r0 * rho * u;
            inner += qu.weights[b] * pu(u) * std::exp(-mu * s2);
        }
        total += qr.weights[a] * radial * inner;
    }
    return 2.0 * M_PI * norm_c * total;
}

}  // namespace

IsotropicConv continuum_kernel_vs_maxwellian(KernelKind kind, double gamma, double mu,
                                             double mass, const Vec3& v0) {
    const double r0 = norm(v0);
    auto kr = [&](double rho) {
        return kind == KernelKind::Full ? std::pow(rho, gamma + 2.0)
                                        : std::pow(1.0 + rho * rho, 0.5 * gamma) * rho * rho;
    };
    const double b = axisym_integral(kr, [](double u) { return 1.0 - u * u; }, mu, mass, r0);
    const double half_trace = axisym_integral(kr, [](double) { return 1.0; }, mu, mass, r0);
    IsotropicConv out;
    out.radial = b;
    out.transverse = half_trace - 0.5 * b;  // 2A + B = 2 * half_trace
    return out;
}

double continuum_radial_gamma_vs_maxwellian(double gamma, double mu, double mass,
                                            const Vec3& v0) {
    const double r0 = norm(v0);
    return axisym_integral([&](double rho) { return std::pow(rho, gamma); },
                           [](double) { return 1.0; }, mu, mass, r0);
}

double box_moment(double L, double mu, double mass, int p) {
    const double sigma2 = 0.5 / mu;
    const double phi_L = std::exp(-L * L / (2.0 * sigma2)) / std::sqrt(2.0 * M_PI * sigma2);
    std::vector<double> m(p + 1);
    m[0] = std::erf(L / std::sqrt(2.0 * sigma2));
    for (int a = 1; a <= p; ++a)
        m[a] = sigma2 * ((2.0 * a - 1.0) * m[a - 1] - 2.0 * std::pow(L, 2 * a - 1) * phi_L);
    // (1 + x^2 + y^2 + z^2)^p expanded over 1D truncated moments.
    auto factorial = [](int k) {
        double f = 1.0;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    double total = 0.0;
    for (int a = 0; a <= p; ++a)
        for (int b = 0; a + b <= p; ++b)
            for (int c = 0; a + b + c <= p; ++c) {
                const int d = p - a - b - c;
                const double coeff = factorial(p) / (factorial(a) * factorial(b) *
                                                     factorial(c) * factorial(d));
                total += coeff * m[a] * m[b] * m[c];
            }
    return mass * total;
}

double gaussian_entropy(double mu) {
    const double sigma2 = 0.5 / mu;
    return -1.5 * (1.0 + std::log(2.0 * M_PI * sigma2));
}

double gaussian_kl_shifted(double mu, double offset) {
    const double sigma2 = 0.5 / mu;
    return offset * offset / (2.0 * sigma2);
}

double gaussian_hellinger2_shifted(double mu, double offset) {
    const double sigma2 = 0.5 / mu;
    return 2.0 * (1.0 - std::exp(-offset * offset / (8.0 * sigma2)));
}

ScalarField random_density(const GridSpec& grid, std::mt19937_64& rng, double mu) {
    std::uniform_real_distribution<double> amp(0.02, 0.15);
    std::uniform_int_distribution<int> mode(1, 3);
    std::uniform_int_distribution<int> axis(0, 2);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    struct Bump {
        double a, k, phi;
        int d;
    };
    std::vector<Bump> bumps;
    for (int b = 0; b < 3; ++b)
        bumps.push_back({amp(rng), M_PI * mode(rng) / grid.half_width, phase(rng), axis(rng)});
    ScalarField f = ScalarField::from_function(grid, [&](Vec3 v) {
        double factor = 1.0;
        for (const Bump& b : bumps) factor += b.a * std::cos(b.k * v[b.d] + b.phi);
        const double c = std::pow(mu / M_PI, 1.5);
        return c * std::exp(-mu * norm2(v)) * factor;
    });
    const double mass = integrate(f);
    for (double& v : f.values) v /= mass;
    return f;
}

double richardson_order(double err_coarse, double err_fine) {
    return std::log2(err_coarse / err_fine);
}

}  // namespace landau::oracles
