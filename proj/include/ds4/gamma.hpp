// gamma.hpp
// Gamma matrices of the 1+4 Clifford algebra in quaternionic block form,
// the slash map R^5 -> QMat2 and the ambient Minkowski geometry of the
// de Sitter hyperboloid x.x = -R^2.

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "ds4/qmat2.hpp"

namespace ds4 {

/// Metric diag(1,-1,-1,-1,-1).
constexpr int eta(int alpha, int beta) {
    if (alpha != beta) return 0;
    return alpha == 0 ? 1 : -1;
}

inline void check_index(int alpha) {
    if (alpha < 0 || alpha > 4) throw std::out_of_range("ambient index must be in 0..4");
}

/// Point of R^5 with components x^0..x^4 (length units).
struct AmbientVector {
    std::array<double, 5> x{};

    double& operator[](int i) { return x[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return x[static_cast<std::size_t>(i)]; }

    /// The quaternion (x^4, x^1, x^2, x^3) carried in the off-diagonal blocks.
    Quaternion spatial() const { return {x[4], {x[1], x[2], x[3]}}; }

    bool operator==(const AmbientVector&) const = default;
};

constexpr double minkowski_square(const AmbientVector& v) {
    return v.x[0] * v.x[0] - v.x[1] * v.x[1] - v.x[2] * v.x[2] - v.x[3] * v.x[3] - v.x[4] * v.x[4];
}

inline double max_abs(const AmbientVector& v) {
    double m = 0.0;
    for (double c : v.x) m = std::max(m, std::abs(c));
    return m;
}

inline double distance(const AmbientVector& a, const AmbientVector& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 5; ++i) m = std::max(m, std::abs(a.x[i] - b.x[i]));
    return m;
}

/// A point on the hyperboloid M_R, accepted when |x.x + R^2| <= 1e-9 R^2.
class DSPoint {
public:
    static constexpr double kRelTolerance = 1e-9;

    DSPoint(const AmbientVector& x, double radius) : x_(x), radius_(radius) {
        if (!(radius > 0.0)) throw std::domain_error("de Sitter radius must be positive");
        if (!(std::abs(minkowski_square(x) + radius * radius) <= kRelTolerance * radius * radius)) {
            throw std::domain_error("point is not on the de Sitter hyperboloid");
        }
    }

    /// x_o = (0, 0, 0, 0, R).
    static DSPoint origin(double radius) { return DSPoint(AmbientVector{{0.0, 0.0, 0.0, 0.0, radius}}, radius); }

    const AmbientVector& x() const { return x_; }
    double radius() const { return radius_; }

    /// |x.x + R^2| / R^2.
    double defect() const { return std::abs(minkowski_square(x_) + radius_ * radius_) / (radius_ * radius_); }

private:
    AmbientVector x_;
    double radius_;
};

/// Upper-index gamma^alpha: gamma^0 = diag(1, -1), gamma^k = offdiag(e_k, e_k),
/// gamma^4 = offdiag(1, -1).
inline QMat2 gamma(int alpha) {
    check_index(alpha);
    if (alpha == 0) return QMat2::diag(Quaternion::one(), -Quaternion::one());
    if (alpha == 4) return QMat2::offdiag(Quaternion::one(), -Quaternion::one());
    const Quaternion e = Quaternion::basis(alpha);
    return QMat2::offdiag(e, e);
}

/// gamma_alpha = eta_{alpha alpha} gamma^alpha.
inline QMat2 gamma_lower(int alpha) { return static_cast<double>(eta(alpha, alpha)) * gamma(alpha); }

inline QMat2 anticommutator(int alpha, int beta) {
    const QMat2 ga = gamma(alpha), gb = gamma(beta);
    return ga * gb + gb * ga;
}

/// dagger(gamma^alpha) == gamma^0 gamma^alpha gamma^0, compared exactly.
inline bool dagger_identity_check(int alpha) {
    const QMat2 g0 = gamma(0);
    return dagger(gamma(alpha)) == g0 * gamma(alpha) * g0;
}

/// x^alpha gamma_alpha = (x^0, -x; x*, -x^0) with x = (x^4, x^1, x^2, x^3).
inline QMat2 slash(const AmbientVector& v) {
    const Quaternion q = v.spatial();
    return {Quaternion{v[0]}, -q, conj(q), Quaternion{-v[0]}};
}

/// x^alpha = tr(gamma^alpha M) / 4, trace taken in the 4x4 complex embedding.
/// Rejects M farther than 1e-10 max(1, |M|) from the slash image.
inline AmbientVector unslash(const QMat2& m, double tol = 1e-10) {
    const double scale = std::max(1.0, max_abs(m));
    AmbientVector v;
    for (int alpha = 0; alpha < 5; ++alpha) {
        const Complex t = trace(embed4(gamma(alpha) * m));
        if (!(std::abs(t.imag()) <= 1e-12 * scale)) throw std::domain_error("slash trace is not real");
        v[alpha] = 0.25 * t.real();
    }
    if (!(distance(slash(v), m) <= tol * scale)) throw std::domain_error("matrix is not in the slash image");
    return v;
}

}  // namespace ds4
