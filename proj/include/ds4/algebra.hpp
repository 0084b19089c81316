// algebra.hpp
// The Lie algebra sp(2,2): the R^10 coordinate chart
//   2 a^k X_k + 2 j^k Y_k + 2 d^0 X_0 + 2 d^k Z_k
//     = ((a+j).e, d^0 + d.e; d^0 - d.e, (-a+j).e),
// brackets, the integer 5x5 so(1,4) representation and the exponential map.

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "ds4/generators.hpp"
#include "ds4/group.hpp"

namespace ds4 {

/// Coordinates (a, j, d0, d) of an algebra element or of a point of the dual.
struct AlgebraCoords {
    Vec3 a{};
    Vec3 j{};
    double d0 = 0.0;
    Vec3 d{};

    std::array<double, 10> to_array() const {
        return {a[0], a[1], a[2], j[0], j[1], j[2], d0, d[0], d[1], d[2]};
    }
    static AlgebraCoords from_array(const std::array<double, 10>& c) {
        return {{c[0], c[1], c[2]}, {c[3], c[4], c[5]}, c[6], {c[7], c[8], c[9]}};
    }

    bool operator==(const AlgebraCoords&) const = default;
};

/// Distance of m from the algebra shape: pure-vector diagonal blocks and
/// lower-left block equal to the conjugate of the upper-right block.
inline double shape_defect(const QMat2& m) {
    return std::max({std::abs(m.a.s), std::abs(m.d.s), max_abs(m.c - conj(m.b))});
}

class AlgebraElement {
public:
    static constexpr double kShapeTolerance = 1e-12;

    AlgebraElement() = default;

    /// Throws std::domain_error when the shape defect exceeds
    /// tol * max(1, |m|).
    explicit AlgebraElement(const QMat2& m, double tol = kShapeTolerance) : m_(m) {
        if (!(shape_defect(m) <= tol * std::max(1.0, max_abs(m)))) {
            throw std::domain_error("matrix is not in sp(2,2)");
        }
    }

    static AlgebraElement from_coords(const AlgebraCoords& c) {
        AlgebraElement x;
        x.m_ = {Quaternion::pure(c.a + c.j), Quaternion{c.d0, c.d}, Quaternion{c.d0, -c.d},
                Quaternion::pure(c.j - c.a)};
        return x;
    }

    AlgebraCoords to_coords() const {
        AlgebraCoords c;
        c.a = 0.5 * (m_.a.v - m_.d.v);
        c.j = 0.5 * (m_.a.v + m_.d.v);
        c.d0 = m_.b.s;
        c.d = m_.b.v;
        return c;
    }

    const QMat2& matrix() const { return m_; }

    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
        return trusted(x.m_ + y.m_);
    }
    friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
        return trusted(x.m_ - y.m_);
    }
    friend AlgebraElement operator*(double k, const AlgebraElement& x) { return trusted(k * x.m_); }

private:
    static AlgebraElement trusted(const QMat2& m) {
        AlgebraElement x;
        x.m_ = m;
        return x;
    }

    QMat2 m_{};
};

inline AlgebraElement from_coords(const AlgebraCoords& c) { return AlgebraElement::from_coords(c); }
inline AlgebraCoords to_coords(const AlgebraElement& x) { return x.to_coords(); }

inline AlgebraElement generator(Generator g) { return AlgebraElement(generator_matrix(g)); }

inline AlgebraElement k_generator(int alpha, int beta) { return AlgebraElement(k_generator_matrix(alpha, beta)); }

/// XY - YX, re-certified as an algebra element.
inline AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
    try {
        return AlgebraElement(commutator(x.matrix(), y.matrix()));
    } catch (const std::domain_error&) {
        throw NumericalFault("bracket left sp(2,2)");
    }
}

/// Max-entry residual of the 45-pair table [K_ab, K_rd] = bracket_rhs in the
/// quaternionic representation.
inline double quaternion_bracket_table_residual() {
    double worst = 0.0;
    const auto pairs = index_pairs();
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t q = p + 1; q < pairs.size(); ++q) {
            const auto [a, b] = pairs[p];
            const auto [r, d] = pairs[q];
            const QMat2 lhs = commutator(k_generator_matrix(a, b), k_generator_matrix(r, d));
            worst = std::max(worst, distance(lhs, bracket_rhs(k_generator_matrix, a, b, r, d)));
        }
    return worst;
}

// 5x5 so(1,4) ------------------------------------------------------------------

/// 5x5 matrix; a distinct type so its operators are found by ADL.
template <class T>
struct Mat5 {
    std::array<std::array<T, 5>, 5> rows{};

    std::array<T, 5>& operator[](std::size_t i) { return rows[i]; }
    const std::array<T, 5>& operator[](std::size_t i) const { return rows[i]; }
    auto begin() const { return rows.begin(); }
    auto end() const { return rows.end(); }

    bool operator==(const Mat5&) const = default;
};

template <class T>
Mat5<T> operator*(const Mat5<T>& x, const Mat5<T>& y) {
    Mat5<T> r{};
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t k = 0; k < 5; ++k)
            for (std::size_t j = 0; j < 5; ++j) r[i][j] += x[i][k] * y[k][j];
    return r;
}

template <class T>
Mat5<T> operator+(const Mat5<T>& x, const Mat5<T>& y) {
    Mat5<T> r{};
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) r[i][j] = x[i][j] + y[i][j];
    return r;
}

template <class T>
Mat5<T> operator-(const Mat5<T>& x, const Mat5<T>& y) {
    Mat5<T> r{};
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) r[i][j] = x[i][j] - y[i][j];
    return r;
}

template <class T>
Mat5<T> operator-(const Mat5<T>& x) {
    return Mat5<T>{} - x;
}

template <class T>
Mat5<T> operator*(int k, const Mat5<T>& x) {
    Mat5<T> r{};
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) r[i][j] = static_cast<T>(k) * x[i][j];
    return r;
}

template <class T>
T max_abs(const Mat5<T>& x) {
    T m{};
    for (const auto& row : x)
        for (T v : row) m = std::max(m, v < T{} ? -v : v);
    return m;
}

using SO14Matrix = Mat5<int>;

/// (K_ab)^mu_nu = delta^mu_a eta_{b nu} - delta^mu_b eta_{a nu}. This is minus
/// the matrix of the vector field x_a d_b - x_b d_a, the sign for which
/// matrix commutators reproduce the vector-field structure constants.
inline SO14Matrix so14_matrix(int alpha, int beta) {
    check_index(alpha);
    check_index(beta);
    if (alpha == beta) throw std::invalid_argument("K_{alpha beta} needs distinct indices");
    SO14Matrix k{};
    for (int nu = 0; nu < 5; ++nu) {
        k[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(nu)] += eta(beta, nu);
        k[static_cast<std::size_t>(beta)][static_cast<std::size_t>(nu)] -= eta(alpha, nu);
    }
    return k;
}

/// eta K is antisymmetric.
inline bool is_eta_antisymmetric(const SO14Matrix& k) {
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const int lhs = eta(i, i) * k[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const int rhs = eta(j, j) * k[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (lhs != -rhs) return false;
        }
    return true;
}

/// Max-entry residual of the 45-pair table in the integer representation.
inline int so14_bracket_table_residual() {
    int worst = 0;
    const auto pairs = index_pairs();
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t q = p + 1; q < pairs.size(); ++q) {
            const auto [a, b] = pairs[p];
            const auto [r, d] = pairs[q];
            const SO14Matrix x = so14_matrix(a, b), y = so14_matrix(r, d);
            worst = std::max(worst, max_abs(x * y - y * x - bracket_rhs(so14_matrix, a, b, r, d)));
        }
    return worst;
}

/// Linear map induced on lower-index components x_a = eta_ab x^b by
/// x -> unslash([G, slash(x)]). On upper-index components the induced map
/// is eta K eta; lowering the index makes it K itself.
inline Mat5<double> induced_so14(const QMat2& g) {
    Mat5<double> upper{};
    for (int col = 0; col < 5; ++col) {
        AmbientVector basis;
        basis[col] = 1.0;
        const AmbientVector image = unslash(commutator(g, slash(basis)));
        for (int row = 0; row < 5; ++row) upper[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = image[row];
    }
    Mat5<double> lower{};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                eta(i, i) * eta(j, j) * upper[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return lower;
}

/// Proportionality between the quaternionic generators and so14_matrix
/// under induced_so14. Fixed once from the basis check; every pair gives +1.
inline constexpr double kHomomorphismConstant = 1.0;

/// max |induced_so14(K^q_ab) - c K_ab|.
inline double homomorphism_residual(int alpha, int beta) {
    const Mat5<double> induced = induced_so14(k_generator_matrix(alpha, beta));
    const SO14Matrix k = so14_matrix(alpha, beta);
    double worst = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            worst = std::max(worst, std::abs(induced[i][j] - kHomomorphismConstant * k[i][j]));
    return worst;
}

// Exponential ------------------------------------------------------------------

/// exp(t X), computed in the 4x4 complex embedding and certified as a group
/// member at 1e-10.
inline GroupElement exp(const AlgebraElement& x, double t = 1.0) {
    const Mat4c e = expm(Complex{t} * embed4(x.matrix()));
    QMat2 m;
    try {
        m = extract4(e);
    } catch (const std::domain_error&) {
        throw NumericalFault("matrix exponential left the quaternionic image");
    }
    return GroupElement(m, 1e-10);
}

}  // namespace ds4
