// cmatrix.hpp
// Fixed-size 4x4 complex matrices: the faithful picture of 2x2 quaternionic
// matrices. Only what the group and algebra checks need lives here.

#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "ds4/quaternion.hpp"

namespace ds4 {

struct Mat4c {
    std::array<std::array<Complex, 4>, 4> e{};

    static Mat4c identity() {
        Mat4c m;
        for (int i = 0; i < 4; ++i) m.e[i][i] = 1.0;
        return m;
    }

    Complex& operator()(int i, int j) { return e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const Complex& operator()(int i, int j) const {
        return e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

inline Mat4c operator*(const Mat4c& a, const Mat4c& b) {
    Mat4c r;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const Complex aik = a(i, k);
            for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

inline Mat4c operator+(const Mat4c& a, const Mat4c& b) {
    Mat4c r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

inline Mat4c operator-(const Mat4c& a, const Mat4c& b) {
    Mat4c r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

inline Mat4c operator*(Complex k, const Mat4c& a) {
    Mat4c r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = k * a(i, j);
    return r;
}

inline Mat4c adjoint(const Mat4c& a) {
    Mat4c r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

/// Pairwise sum, so four equal diagonal entries give exactly 4x.
inline Complex trace(const Mat4c& a) { return (a(0, 0) + a(1, 1)) + (a(2, 2) + a(3, 3)); }

inline double max_abs(const Mat4c& a) {
    double m = 0.0;
    for (const auto& row : a.e)
        for (const auto& x : row) m = std::max(m, std::abs(x));
    return m;
}

/// Max absolute row sum.
inline double norm_inf(const Mat4c& a) {
    double m = 0.0;
    for (const auto& row : a.e) {
        double s = 0.0;
        for (const auto& x : row) s += std::abs(x);
        m = std::max(m, s);
    }
    return m;
}

/// Determinant by Gaussian elimination with partial pivoting.
inline Complex det(Mat4c a) {
    Complex d = 1.0;
    for (int c = 0; c < 4; ++c) {
        int p = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
        if (a(p, c) == Complex{0.0}) return 0.0;
        if (p != c) {
            std::swap(a.e[static_cast<std::size_t>(p)], a.e[static_cast<std::size_t>(c)]);
            d = -d;
        }
        d *= a(c, c);
        for (int r = c + 1; r < 4; ++r) {
            const Complex f = a(r, c) / a(c, c);
            for (int j = c; j < 4; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return d;
}

/// Matrix exponential: scale so the inf-norm is at most 1/2, sum the
/// Taylor series to order 18, then square back. Order 18 at norm 1/2
/// leaves a truncation term below 1e-22.
inline Mat4c expm(const Mat4c& a) {
    int squarings = 0;
    const double n = norm_inf(a);
    if (n > 0.5) squarings = static_cast<int>(std::ceil(std::log2(n / 0.5)));
    const Mat4c scaled = Complex{std::ldexp(1.0, -squarings)} * a;

    Mat4c sum = Mat4c::identity();
    Mat4c term = Mat4c::identity();
    for (int k = 1; k <= 18; ++k) {
        term = Complex{1.0 / k} * (term * scaled);
        sum = sum + term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

}  // namespace ds4
