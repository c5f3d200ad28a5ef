#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "landau/errors.hpp"
#include "landau/functionals.hpp"
#include "landau/grid.hpp"
#include "oracles.hpp"

using namespace landau;
namespace orc = landau::oracles;

TEST_CASE("make_grid validates and builds cell-centered nodes") {
    const GridSpec g = make_grid(4.0, 8, -3.0);
    CHECK(g.spacing == doctest::Approx(1.0));
    const Vec3 first = g.node(0, 0, 0);
    CHECK(first.x == doctest::Approx(-3.5));
    CHECK(first.y == doctest::Approx(-3.5));
    CHECK(first.z == doctest::Approx(-3.5));

    CHECK(make_grid(6.0, 24, -2.5).spacing == doctest::Approx(0.5));

    CHECK_THROWS_AS(make_grid(4.0, 7, -3.0), ConfigError);   // odd N
    CHECK_THROWS_AS(make_grid(0.0, 8, -3.0), ConfigError);   // L <= 0
    CHECK_THROWS_AS(make_grid(4.0, 6, -3.0), ConfigError);   // N < 8
    CHECK_THROWS_AS(make_grid(4.0, 8, 0.0), ConfigError);    // gamma out of range
    CHECK_THROWS_AS(make_grid(4.0, 8, -3.5), ConfigError);
}

TEST_CASE("weight fields") {
    const GridSpec g = make_grid(4.0, 8, -3.0);
    const ScalarField ones = weight_field(g, 0.0);
    for (double v : ones.values) CHECK(v == 1.0);

    CHECK(jbracket_pow(Vec3{1.0, 0.0, 0.0}, 2.0) == doctest::Approx(2.0));

    // node nearest the origin: (0.5, 0.5, 0.5), |v|^2 = 0.75
    const ScalarField w = weight_field(g, -3.0);
    CHECK(w.at(4, 4, 4) == doctest::Approx(std::pow(1.75, -1.5)));

    // multiplicativity within a few ulps
    const GridSpec g6 = make_grid(6.0, 16, -3.0);
    const ScalarField w1 = weight_field(g6, 2.0);
    const ScalarField w2 = weight_field(g6, -3.0);
    const ScalarField w12 = weight_field(g6, -1.0);
    for (std::size_t i = 0; i < w12.values.size(); ++i)
        CHECK(w1.values[i] * w2.values[i] ==
              doctest::Approx(w12.values[i]).epsilon(1e-13));
}

TEST_CASE("integrate: quadrature, linearity, monotonicity") {
    const GridSpec g = make_grid(4.0, 8, -3.0);
    ScalarField ones(g);
    for (double& v : ones.values) v = 1.0;
    CHECK(integrate(ones) == doctest::Approx(512.0).epsilon(1e-12));
    CHECK(integrate(ScalarField(g)) == 0.0);

    const GridSpec g32 = make_grid(6.0, 32, -3.0);
    const ScalarField m = orc::discrete_maxwellian(g32, 0.5);
    CHECK(integrate(m) == doctest::Approx(1.0).epsilon(1e-6));

    std::mt19937_64 rng(7);
    const ScalarField a = orc::random_density(g, rng);
    const ScalarField b = orc::random_density(g, rng);
    ScalarField sum(g);
    for (std::size_t i = 0; i < sum.values.size(); ++i)
        sum.values[i] = a.values[i] + b.values[i];
    CHECK(integrate(sum) == doctest::Approx(integrate(a) + integrate(b)).epsilon(1e-13));
    // monotone: a <= sum pointwise
    CHECK(integrate(a) <= integrate(sum));
}

TEST_CASE("moments against analytic and box-truncated oracles") {
    const GridSpec g = make_grid(6.0, 32, -3.0);
    const ScalarField m = orc::discrete_maxwellian(g, 0.5);
    CHECK(moment(m, 2.0) == doctest::Approx(4.0).epsilon(1e-4));
    CHECK(moment(m, 0.0) == integrate(m));

    const double oracle12 = orc::box_moment(6.0, 0.5, 1.0, 6);
    CHECK(std::isfinite(moment(m, 12.0)));
    CHECK(moment(m, 12.0) == doctest::Approx(oracle12).epsilon(1e-3));
}

TEST_CASE("gradient and hessian stencils") {
    const GridSpec g = make_grid(6.0, 16, -3.0);

    ScalarField constant(g);
    for (double& v : constant.values) v = 2.5;
    const VectorField gc = gradient(constant);
    for (const Vec3& v : gc.values) CHECK(norm(v) == doctest::Approx(0.0));

    // hessian of |v|^2 is 2 I at interior nodes, exactly
    const ScalarField q = ScalarField::from_function(g, [](Vec3 v) { return norm2(v); });
    const SymMatrixField hq = hessian(q, GhostRule::LinearExtrapolate);
    const int n = g.points_per_axis;
    for (int ix = 1; ix < n - 1; ++ix) {
        const SymMat3& m = hq.values[g.index(ix, n / 2, n / 2)];
        CHECK(m.xx == doctest::Approx(2.0).epsilon(1e-11));
        CHECK(m.yy == doctest::Approx(2.0).epsilon(1e-11));
        CHECK(m.zz == doctest::Approx(2.0).epsilon(1e-11));
        CHECK(m.xy == doctest::Approx(0.0));
    }

    // gradient of ln M is exact (quadratic log): compare at the node nearest (1,0,0)
    const GridSpec g24 = make_grid(6.0, 24, -3.0);
    const ScalarField m24 = orc::discrete_maxwellian(g24, 0.5);
    ScalarField logm(g24);
    for (std::size_t i = 0; i < logm.values.size(); ++i)
        logm.values[i] = std::log(m24.values[i]);
    const VectorField gl = gradient(logm, GhostRule::LinearExtrapolate);
    const int ixn = 14;  // coord(14) = 1.25, closest tick above 1
    const Vec3 node = g24.node(ixn, 12, 12);
    const Vec3 grad_here = gl.values[g24.index(ixn, 12, 12)];
    CHECK(grad_here.x == doctest::Approx(-node.x).epsilon(1e-11));
    CHECK(grad_here.y == doctest::Approx(-node.y).epsilon(1e-11));
}

TEST_CASE("Richardson factor ~4 for gradient of a smooth field") {
    const double w = M_PI / 6.0;
    auto test_field = [w](Vec3 v) { return std::sin(w * v.x) * std::exp(-norm2(v) / 8.0); };
    auto grad_x = [w](Vec3 v) {
        return (w * std::cos(w * v.x) - 0.25 * v.x * std::sin(w * v.x)) *
               std::exp(-norm2(v) / 8.0);
    };
    auto max_err = [&](int n) {
        const GridSpec g = make_grid(6.0, n, -3.0);
        const ScalarField f = ScalarField::from_function(g, test_field);
        const VectorField gf = gradient(f, GhostRule::LinearExtrapolate);
        double err = 0.0;
        for (int ix = 2; ix < n - 2; ++ix)
            for (int iy = 2; iy < n - 2; ++iy)
                for (int iz = 2; iz < n - 2; ++iz) {
                    const Vec3 v = g.node(ix, iy, iz);
                    err = std::max(err,
                                   std::abs(gf.values[g.index(ix, iy, iz)].x - grad_x(v)));
                }
        return err;
    };
    const double ratio = max_err(16) / max_err(32);
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
}

TEST_CASE("conserved_triple on Maxwellians") {
    const GridSpec g = make_grid(6.0, 32, -3.0);
    const DensityStats s = conserved_triple(orc::discrete_maxwellian(g, 0.5));
    CHECK(s.mass == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(s.momentum.x) < 1e-10);
    CHECK(s.energy == doctest::Approx(3.0).epsilon(1e-4));

    const DensityStats sh =
        conserved_triple(orc::discrete_maxwellian(g, 0.5, Vec3{0.5, 0.0, 0.0}));
    CHECK(sh.momentum.x == doctest::Approx(0.5).epsilon(1e-6));

    // conserved components are additive
    const ScalarField a = orc::discrete_maxwellian(g, 0.5);
    const ScalarField b = orc::discrete_maxwellian(g, 0.4, Vec3{0.3, 0.0, 0.0}, 2.0);
    ScalarField sum(g);
    for (std::size_t i = 0; i < sum.values.size(); ++i)
        sum.values[i] = a.values[i] + b.values[i];
    const DensityStats sa = conserved_triple(a), sb = conserved_triple(b),
                       ss = conserved_triple(sum);
    CHECK(ss.mass == doctest::Approx(sa.mass + sb.mass).epsilon(1e-12));
    CHECK(ss.energy == doctest::Approx(sa.energy + sb.energy).epsilon(1e-12));
    CHECK(ss.momentum.x == doctest::Approx(sa.momentum.x + sb.momentum.x).epsilon(1e-10));
}
