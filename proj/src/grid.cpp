#include "landau/grid.hpp"

#include <cmath>
#include <sstream>

#include "landau/errors.hpp"
#include "landau/parallel.hpp"

namespace landau {

GridSpec make_grid(double half_width, int points_per_axis, double gamma) {
    std::ostringstream bad;
    if (!(half_width > 0.0)) bad << "half_width must be > 0 (got " << half_width << "); ";
    if (points_per_axis < 8) bad << "points_per_axis must be >= 8 (got " << points_per_axis << "); ";
    if (points_per_axis % 2 != 0) bad << "points_per_axis must be even (got " << points_per_axis << "); ";
    if (!(gamma >= -3.0 && gamma < 0.0)) bad << "gamma must lie in [-3, 0) (got " << gamma << "); ";
    if (!bad.str().empty()) throw ConfigError("make_grid: " + bad.str());
    GridSpec g;
    g.half_width = half_width;
    g.points_per_axis = points_per_axis;
    g.gamma = gamma;
    g.spacing = 2.0 * half_width / points_per_axis;
    return g;
}

ScalarField ScalarField::from_function(const GridSpec& g, const std::function<double(Vec3)>& fn) {
    ScalarField f(g);
    const int n = g.points_per_axis;
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz) f.values[idx++] = fn(g.node(ix, iy, iz));
    return f;
}

bool ScalarField::all_finite() const {
    for (double v : values)
        if (!std::isfinite(v)) return false;
    return true;
}

ScalarField weight_field(const GridSpec& grid, double k) {
    return ScalarField::from_function(grid, [k](Vec3 v) { return jbracket_pow(v, k); });
}

double integrate(const ScalarField& f) {
    return f.grid.cell_volume() * pairwise_sum(f.values);
}

double moment(const ScalarField& f, double k) {
    const GridSpec& g = f.grid;
    std::vector<double> prod(f.values.size());
    const int n = g.points_per_axis;
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz, ++idx)
                prod[idx] = f.values[idx] * jbracket_pow(g.node(ix, iy, iz), k);
    return g.cell_volume() * pairwise_sum(prod);
}

ExtendedField::ExtendedField(const ScalarField& f, GhostRule rule) {
    const int n = f.grid.points_per_axis;
    np_ = static_cast<std::size_t>(n + 2);
    data_.assign(np_ * np_ * np_, 0.0);

    auto ref = [&](int ix, int iy, int iz) -> double& {
        return data_[(static_cast<std::size_t>(ix + 1) * np_ + (iy + 1)) * np_ + (iz + 1)];
    };
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz) ref(ix, iy, iz) = f.at(ix, iy, iz);

    auto ghost = [rule](double boundary, double interior) -> double {
        if (rule == GhostRule::LinearExtrapolate) return 2.0 * boundary - interior;
        if (boundary * interior > 0.0) return boundary * boundary / interior;
        return 0.0;
    };

    // Axis-by-axis fill; later axes see the ghosts of earlier ones, which
    // defines edge and corner ghosts.
    for (int iy = 0; iy < n; ++iy)
        for (int iz = 0; iz < n; ++iz) {
            ref(-1, iy, iz) = ghost(ref(0, iy, iz), ref(1, iy, iz));
            ref(n, iy, iz) = ghost(ref(n - 1, iy, iz), ref(n - 2, iy, iz));
        }
    for (int ix = -1; ix <= n; ++ix)
        for (int iz = 0; iz < n; ++iz) {
            ref(ix, -1, iz) = ghost(ref(ix, 0, iz), ref(ix, 1, iz));
            ref(ix, n, iz) = ghost(ref(ix, n - 1, iz), ref(ix, n - 2, iz));
        }
    for (int ix = -1; ix <= n; ++ix)
        for (int iy = -1; iy <= n; ++iy) {
            ref(ix, iy, -1) = ghost(ref(ix, iy, 0), ref(ix, iy, 1));
            ref(ix, iy, n) = ghost(ref(ix, iy, n - 1), ref(ix, iy, n - 2));
        }
}

VectorField gradient(const ScalarField& f, GhostRule rule) {
    const GridSpec& g = f.grid;
    const int n = g.points_per_axis;
    const double inv2h = 1.0 / (2.0 * g.spacing);
    ExtendedField e(f, rule);
    VectorField out(g);
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz, ++idx) {
                out.values[idx] = {
                    (e.at(ix + 1, iy, iz) - e.at(ix - 1, iy, iz)) * inv2h,
                    (e.at(ix, iy + 1, iz) - e.at(ix, iy - 1, iz)) * inv2h,
                    (e.at(ix, iy, iz + 1) - e.at(ix, iy, iz - 1)) * inv2h,
                };
            }
    return out;
}

SymMatrixField hessian(const ScalarField& f, GhostRule rule) {
    const GridSpec& g = f.grid;
    const int n = g.points_per_axis;
    const double invh2 = 1.0 / (g.spacing * g.spacing);
    const double inv4h2 = 0.25 * invh2;
    ExtendedField e(f, rule);
    SymMatrixField out(g);
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz, ++idx) {
                const double c = e.at(ix, iy, iz);
                SymMat3 m;
                m.xx = (e.at(ix + 1, iy, iz) - 2.0 * c + e.at(ix - 1, iy, iz)) * invh2;
                m.yy = (e.at(ix, iy + 1, iz) - 2.0 * c + e.at(ix, iy - 1, iz)) * invh2;
                m.zz = (e.at(ix, iy, iz + 1) - 2.0 * c + e.at(ix, iy, iz - 1)) * invh2;
                m.xy = (e.at(ix + 1, iy + 1, iz) - e.at(ix + 1, iy - 1, iz) -
                        e.at(ix - 1, iy + 1, iz) + e.at(ix - 1, iy - 1, iz)) * inv4h2;
                m.xz = (e.at(ix + 1, iy, iz + 1) - e.at(ix + 1, iy, iz - 1) -
                        e.at(ix - 1, iy, iz + 1) + e.at(ix - 1, iy, iz - 1)) * inv4h2;
                m.yz = (e.at(ix, iy + 1, iz + 1) - e.at(ix, iy + 1, iz - 1) -
                        e.at(ix, iy - 1, iz + 1) + e.at(ix, iy - 1, iz - 1)) * inv4h2;
                out.values[idx] = m;
            }
    return out;
}

DensityStats conserved_triple(const ScalarField& f) {
    const GridSpec& g = f.grid;
    const int n = g.points_per_axis;
    const std::size_t m = f.values.size();
    std::vector<double> px(m), py(m), pz(m), en(m), ent(m), tail(m);
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz, ++idx) {
                const Vec3 v = g.node(ix, iy, iz);
                const double fv = f.values[idx];
                px[idx] = fv * v.x;
                py[idx] = fv * v.y;
                pz[idx] = fv * v.z;
                en[idx] = fv * norm2(v);
                ent[idx] = fv > 0.0 ? fv * std::log(fv) : 0.0;
                const bool boundary = ix == 0 || iy == 0 || iz == 0 || ix == n - 1 ||
                                      iy == n - 1 || iz == n - 1;
                tail[idx] = boundary ? fv : 0.0;
            }
    const double vol = g.cell_volume();
    DensityStats s;
    s.mass = vol * pairwise_sum(f.values);
    s.momentum = {vol * pairwise_sum(px), vol * pairwise_sum(py), vol * pairwise_sum(pz)};
    s.energy = vol * pairwise_sum(en);
    s.entropy = vol * pairwise_sum(ent);
    s.tail_mass_fraction = s.mass != 0.0 ? vol * pairwise_sum(tail) / s.mass : 0.0;
    return s;
}

}  // namespace landau
