// oracles.hpp
// Test-only reference computations. They work directly with 4x4 complex
// matrices built from the Pauli matrices, and never call the quaternion
// product, QMat2 arithmetic or slash/unslash of the library.

#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "ds4/cmatrix.hpp"
#include "ds4/gamma.hpp"

namespace oracle {

using ds4::Complex;
using ds4::Mat2c;
using ds4::Mat4c;
using namespace std::complex_literals;

inline Mat2c pauli(int k) {
    switch (k) {
        case 1: return {{{0.0, 1.0}, {1.0, 0.0}}};
        case 2: return {{{0.0, -1.0i}, {1.0i, 0.0}}};
        default: return {{{1.0, 0.0}, {0.0, -1.0}}};
    }
}

inline Mat2c mul(const Mat2c& a, const Mat2c& b) {
    Mat2c r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

inline Mat2c scale(Complex s, const Mat2c& a) {
    Mat2c r = a;
    for (auto& row : r)
        for (auto& x : row) x *= s;
    return r;
}

inline Mat2c add(const Mat2c& a, const Mat2c& b) {
    Mat2c r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

inline double dist(const Mat2c& a, const Mat2c& b) {
    double m = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

/// e_k = (-1)^(k+1) i sigma_k.
inline Mat2c basis(int k) { return scale((k % 2 == 1 ? 1.0 : -1.0) * 1.0i, pauli(k)); }

/// s 1 + sum v_k e_k, assembled from Pauli matrices.
inline Mat2c quaternion_matrix(double s, const ds4::Vec3& v) {
    Mat2c r = {{{s, 0.0}, {0.0, s}}};
    for (int k = 1; k <= 3; ++k) r = add(r, scale(v[static_cast<std::size_t>(k - 1)], basis(k)));
    return r;
}

inline Mat4c blocks(const Mat2c& a, const Mat2c& b, const Mat2c& c, const Mat2c& d) {
    Mat4c r;
    const Mat2c* bl[2][2] = {{&a, &b}, {&c, &d}};
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) r(2 * bi + i, 2 * bj + j) = (*bl[bi][bj])[i][j];
    return r;
}

inline Mat2c zero2() { return {}; }
inline Mat2c one2() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }

/// gamma^0 = diag(1, -1), gamma^k = (-1)^(k+1) offdiag(i sigma_k, i sigma_k),
/// gamma^4 = offdiag(1, -1), straight from the Pauli matrices.
inline Mat4c gamma(int alpha) {
    if (alpha == 0) return blocks(one2(), zero2(), zero2(), scale(-1.0, one2()));
    if (alpha == 4) return blocks(zero2(), one2(), scale(-1.0, one2()), zero2());
    const Mat2c isk = scale((alpha % 2 == 1 ? 1.0 : -1.0) * 1.0i, pauli(alpha));
    return blocks(zero2(), isk, isk, zero2());
}

/// x^alpha gamma_alpha summed in the 4x4 picture.
inline Mat4c slash(const ds4::AmbientVector& x) {
    Mat4c r;
    for (int a = 0; a < 5; ++a) r = r + Complex{ds4::eta(a, a) * x[a]} * gamma(a);
    return r;
}

/// x^alpha = tr(gamma^alpha M)/4.
inline ds4::AmbientVector unslash(const Mat4c& m) {
    ds4::AmbientVector x;
    for (int a = 0; a < 5; ++a) x[a] = 0.25 * ds4::trace(gamma(a) * m).real();
    return x;
}

/// Generic 4x4 inverse by Gauss-Jordan, used to conjugate without the
/// pseudo-unitary closed form.
inline Mat4c inverse(Mat4c a) {
    Mat4c inv = Mat4c::identity();
    for (int c = 0; c < 4; ++c) {
        int p = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
        std::swap(a.e[p], a.e[c]);
        std::swap(inv.e[p], inv.e[c]);
        const Complex piv = a(c, c);
        for (int j = 0; j < 4; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == c) continue;
            const Complex f = a(r, c);
            for (int j = 0; j < 4; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// x' from g slash(x) g^-1, all in 4x4 complex arithmetic.
inline ds4::AmbientVector conjugate_action(const Mat4c& g, const ds4::AmbientVector& x) {
    return oracle::unslash(g * oracle::slash(x) * oracle::inverse(g));
}

/// Largest positive root E of the energy quartic, by bisection on E^2 in
/// long double: f(y) = y^2 + B y - C with B, C from (m, c, p, q, R).
inline long double quartic_energy_squared(double m, double c, const ds4::Vec3& p, const ds4::Vec3& q, double R) {
    const long double mc2 = static_cast<long double>(m) * c * c;
    const long double pp = static_cast<long double>(p[0]) * p[0] + static_cast<long double>(p[1]) * p[1] +
                           static_cast<long double>(p[2]) * p[2];
    const long double qq = static_cast<long double>(q[0]) * q[0] + static_cast<long double>(q[1]) * q[1] +
                           static_cast<long double>(q[2]) * q[2];
    const long double l0 = static_cast<long double>(q[1]) * p[2] - static_cast<long double>(q[2]) * p[1];
    const long double l1 = static_cast<long double>(q[2]) * p[0] - static_cast<long double>(q[0]) * p[2];
    const long double l2 = static_cast<long double>(q[0]) * p[1] - static_cast<long double>(q[1]) * p[0];
    const long double ll = l0 * l0 + l1 * l1 + l2 * l2;
    const long double rr = static_cast<long double>(R) * R;
    const long double b = -mc2 * mc2 - static_cast<long double>(c) * c * pp + mc2 * mc2 / rr * qq;
    const long double cc = mc2 * mc2 * c * c / rr * ll;
    auto f = [&](long double y) { return y * y + b * y - cc; };
    // f is negative at the vertex and increasing beyond it.
    long double lo = std::max(-b / 2, 0.0L), hi = std::max(1.0L, -b) + 1.0L;
    while (f(hi) < 0) hi *= 2;
    for (int it = 0; it < 400; ++it) {
        const long double mid = (lo + hi) / 2;
        if (mid == lo || mid == hi) break;
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace oracle
