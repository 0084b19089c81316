// qmat2.hpp
// 2x2 matrices with quaternion entries, the common carrier of group
// elements, algebra elements and slashed vectors.

#pragma once

#include <ostream>

#include "ds4/cmatrix.hpp"
#include "ds4/quaternion.hpp"

namespace ds4 {

/// Block matrix (a b; c d) over the quaternions.
struct QMat2 {
    Quaternion a, b, c, d;

    static constexpr QMat2 identity() { return {Quaternion::one(), {}, {}, Quaternion::one()}; }
    static constexpr QMat2 zero() { return {}; }
    static constexpr QMat2 diag(const Quaternion& x, const Quaternion& y) { return {x, {}, {}, y}; }
    static constexpr QMat2 offdiag(const Quaternion& x, const Quaternion& y) { return {{}, x, y, {}}; }

    constexpr bool operator==(const QMat2&) const = default;
};

constexpr QMat2 operator+(const QMat2& m, const QMat2& n) { return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d}; }
constexpr QMat2 operator-(const QMat2& m, const QMat2& n) { return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d}; }
constexpr QMat2 operator-(const QMat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }
constexpr QMat2 operator*(double k, const QMat2& m) { return {k * m.a, k * m.b, k * m.c, k * m.d}; }

constexpr QMat2 operator*(const QMat2& m, const QMat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

/// Transpose of the entrywise quaternionic conjugate.
constexpr QMat2 dagger(const QMat2& m) { return {conj(m.a), conj(m.c), conj(m.b), conj(m.d)}; }

constexpr QMat2 commutator(const QMat2& m, const QMat2& n) { return m * n - n * m; }

inline double max_abs(const QMat2& m) {
    return std::max({max_abs(m.a), max_abs(m.b), max_abs(m.c), max_abs(m.d)});
}

inline double distance(const QMat2& m, const QMat2& n) { return max_abs(m - n); }

inline std::ostream& operator<<(std::ostream& os, const QMat2& m) {
    return os << "[" << m.a << " " << m.b << " / " << m.c << " " << m.d << "]";
}

/// 4x4 complex picture: each quaternion block becomes its 2x2 embedding.
inline Mat4c embed4(const QMat2& m) {
    Mat4c r;
    const Mat2c blocks[2][2] = {{embed(m.a), embed(m.b)}, {embed(m.c), embed(m.d)}};
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) r(2 * bi + i, 2 * bj + j) = blocks[bi][bj][i][j];
    return r;
}

/// Inverse of embed4; tol is relative to max(1, max-abs entry).
inline QMat2 extract4(const Mat4c& m, double tol = 1e-10) {
    const double scaled = tol * std::max(1.0, max_abs(m));
    auto block = [&](int bi, int bj) {
        Mat2c b;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) b[i][j] = m(2 * bi + i, 2 * bj + j);
        return extract(b, scaled);
    };
    return {block(0, 0), block(0, 1), block(1, 0), block(1, 1)};
}

/// Determinant of the 4x4 complex embedding.
inline Complex det4(const QMat2& m) { return det(embed4(m)); }

}  // namespace ds4
