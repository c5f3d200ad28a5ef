#include "landau/kernels.hpp"

#include <cmath>

#include "landau/errors.hpp"

namespace landau {

SymMat3 projection_matrix(const Vec3& z) {
    const double r2 = norm2(z);
    if (r2 == 0.0) return {};
    SymMat3 m = SymMat3::identity();
    m -= (1.0 / r2) * outer(z);
    return m;
}

SymMat3 kernel_eval(KernelKind kind, double gamma, const Vec3& z) {
    const double r2 = norm2(z);
    if (r2 == 0.0) return {};
    // |z|^2 Pi(z) = |z|^2 I - z(x)z is polynomial; both kernels scale it.
    SymMat3 m = r2 * SymMat3::identity() - outer(z);
    const double scale = kind == KernelKind::Full
                             ? std::pow(r2, 0.5 * gamma)            // |z|^(gamma+2) / |z|^2
                             : std::pow(1.0 + r2, 0.5 * gamma);     // <z>^gamma
    m *= scale;
    return m;
}

double equivalent_ball_radius(double h) {
    return std::cbrt(3.0 / (4.0 * M_PI)) * h;
}

double ball_average_power(double p, double h) {
    if (!(p > -3.0)) throw ConfigError("ball_average_power: requires p > -3");
    const double rb = equivalent_ball_radius(h);
    return 3.0 * std::pow(rb, p) / (p + 3.0);
}

SymMat3 singular_cell_matrix(KernelKind kind, double gamma, double h) {
    if (kind == KernelKind::CutOff) return {};
    SymMat3 m = SymMat3::identity();
    m *= (2.0 / 3.0) * ball_average_power(gamma + 2.0, h);
    return m;
}

double singular_cell_scalar(double gamma, double h) {
    return ball_average_power(gamma, h);
}

}  // namespace landau
