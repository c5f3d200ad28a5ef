#include "landau/types.hpp"

#include <Eigen/Dense>

namespace landau {

namespace {

Eigen::Matrix3d to_eigen(const SymMat3& m) {
    Eigen::Matrix3d e;
    e << m.xx, m.xy, m.xz,
         m.xy, m.yy, m.yz,
         m.xz, m.yz, m.zz;
    return e;
}

}  // namespace

std::array<double, 3> sym_eigenvalues(const SymMat3& m) {
    // Tridiagonal QL path: a hair slower than the closed-form 3x3 solver but
    // accurate to machine precision, which the 1e-12 eigenvalue tolerance needs.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es;
    es.compute(to_eigen(m), Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return {ev[0], ev[1], ev[2]};
}

double sym_min_eigenvalue(const SymMat3& m) { return sym_eigenvalues(m)[0]; }
double sym_max_eigenvalue(const SymMat3& m) { return sym_eigenvalues(m)[2]; }

double sym_operator_norm(const SymMat3& m) {
    const auto ev = sym_eigenvalues(m);
    return std::max(std::abs(ev[0]), std::abs(ev[2]));
}

Vec3 sym_min_eigenvector(const SymMat3& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es;
    es.compute(to_eigen(m));
    const auto v = es.eigenvectors().col(0);
    return {v[0], v[1], v[2]};
}

}  // namespace landau
