#pragma once

#include <array>
#include <cmath>

namespace landau {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return (&x)[i]; }
    double operator[](int i) const { return (&x)[i]; }

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend Vec3 operator*(double s, Vec3 a) { return a *= s; }
    friend Vec3 operator*(Vec3 a, double s) { return a *= s; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }

/// Symmetric 3x3 matrix, upper-triangle storage.
struct SymMat3 {
    double xx = 0.0, xy = 0.0, xz = 0.0, yy = 0.0, yz = 0.0, zz = 0.0;

    static SymMat3 identity() { return {1.0, 0.0, 0.0, 1.0, 0.0, 1.0}; }

    double trace() const { return xx + yy + zz; }

    Vec3 apply(const Vec3& v) const {
        return {xx * v.x + xy * v.y + xz * v.z,
                xy * v.x + yy * v.y + yz * v.z,
                xz * v.x + yz * v.y + zz * v.z};
    }

    /// <A v, v>
    double quad(const Vec3& v) const { return dot(apply(v), v); }

    /// A : B = sum_ij A_ij B_ij for symmetric B.
    double ddot(const SymMat3& b) const {
        return xx * b.xx + yy * b.yy + zz * b.zz + 2.0 * (xy * b.xy + xz * b.xz + yz * b.yz);
    }

    double frobenius() const {
        return std::sqrt(xx * xx + yy * yy + zz * zz + 2.0 * (xy * xy + xz * xz + yz * yz));
    }

    SymMat3& operator+=(const SymMat3& o) {
        xx += o.xx; xy += o.xy; xz += o.xz; yy += o.yy; yz += o.yz; zz += o.zz;
        return *this;
    }
    SymMat3& operator-=(const SymMat3& o) {
        xx -= o.xx; xy -= o.xy; xz -= o.xz; yy -= o.yy; yz -= o.yz; zz -= o.zz;
        return *this;
    }
    SymMat3& operator*=(double s) {
        xx *= s; xy *= s; xz *= s; yy *= s; yz *= s; zz *= s;
        return *this;
    }
    friend SymMat3 operator+(SymMat3 a, const SymMat3& b) { return a += b; }
    friend SymMat3 operator-(SymMat3 a, const SymMat3& b) { return a -= b; }
    friend SymMat3 operator*(double s, SymMat3 a) { return a *= s; }
};

/// Outer product v (x) v.
inline SymMat3 outer(const Vec3& v) {
    return {v.x * v.x, v.x * v.y, v.x * v.z, v.y * v.y, v.y * v.z, v.z * v.z};
}

/// Eigenvalues in ascending order.
std::array<double, 3> sym_eigenvalues(const SymMat3& m);
double sym_min_eigenvalue(const SymMat3& m);
double sym_max_eigenvalue(const SymMat3& m);
/// Operator (spectral) norm: max |eigenvalue|.
double sym_operator_norm(const SymMat3& m);
/// Unit eigenvector for the smallest eigenvalue.
Vec3 sym_min_eigenvector(const SymMat3& m);

/// Japanese bracket <v> = sqrt(1 + |v|^2).
inline double jbracket(const Vec3& v) { return std::sqrt(1.0 + norm2(v)); }
inline double jbracket_pow(const Vec3& v, double k) { return std::pow(1.0 + norm2(v), 0.5 * k); }

}  // namespace landau
