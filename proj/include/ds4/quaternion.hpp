// quaternion.hpp
// Real quaternions in scalar-vector form, plus the 2x2 complex embedding
// e_k = (-1)^(k+1) i sigma_k used as the unambiguous matrix picture.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace ds4 {

using Vec3 = std::array<double, 3>;
using Complex = std::complex<double>;
using Mat2c = std::array<std::array<Complex, 2>, 2>;

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
constexpr Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
constexpr Vec3 operator*(double k, const Vec3& a) { return {k * a[0], k * a[1], k * a[2]}; }
constexpr Vec3 operator*(const Vec3& a, double k) { return k * a; }
constexpr Vec3 operator/(const Vec3& a, double k) { return {a[0] / k, a[1] / k, a[2] / k}; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline double max_abs(const Vec3& a) {
    return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
}

/// Real quaternion s + v.e with e_1 e_2 = e_3 (cyclic) and e_k^2 = -1.
struct Quaternion {
    double s = 0.0;
    Vec3 v{0.0, 0.0, 0.0};

    constexpr Quaternion() = default;
    constexpr Quaternion(double scalar, Vec3 vec) : s(scalar), v(vec) {}
    constexpr explicit Quaternion(double scalar) : s(scalar) {}

    static constexpr Quaternion one() { return Quaternion{1.0}; }
    static constexpr Quaternion zero() { return Quaternion{}; }
    static constexpr Quaternion pure(const Vec3& vec) { return {0.0, vec}; }

    /// Basis unit e_k, k in {1,2,3}.
    static Quaternion basis(int k) {
        if (k < 1 || k > 3) throw std::out_of_range("quaternion basis index must be 1, 2 or 3");
        Vec3 vec{0.0, 0.0, 0.0};
        vec[static_cast<std::size_t>(k - 1)] = 1.0;
        return pure(vec);
    }

    constexpr Quaternion conj() const { return {s, -v}; }
    constexpr double norm2() const { return s * s + dot(v, v); }
    double norm() const { return std::sqrt(norm2()); }

    constexpr bool operator==(const Quaternion&) const = default;
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) { return {a.s + b.s, a.v + b.v}; }
constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) { return {a.s - b.s, a.v - b.v}; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.s, -a.v}; }
constexpr Quaternion operator*(double k, const Quaternion& a) { return {k * a.s, k * a.v}; }
constexpr Quaternion operator*(const Quaternion& a, double k) { return k * a; }
constexpr Quaternion operator/(const Quaternion& a, double k) { return {a.s / k, a.v / k}; }

// (s1 s2 - v1.v2, s1 v2 + s2 v1 + v1 x v2)
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.s * b.s - dot(a.v, b.v), a.s * b.v + b.s * a.v + cross(a.v, b.v)};
}

constexpr Quaternion conj(const Quaternion& q) { return q.conj(); }
inline double norm(const Quaternion& q) { return q.norm(); }

inline double max_abs(const Quaternion& q) { return std::max(std::abs(q.s), max_abs(q.v)); }

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.s << "; " << q.v[0] << ", " << q.v[1] << ", " << q.v[2] << ")";
}

/// Quaternion of unit norm. Construction normalizes inputs within 1e-9 of
/// the unit sphere and rejects anything further away.
class UnitQuaternion {
public:
    static constexpr double kTolerance = 1e-9;

    UnitQuaternion() = default;

    explicit UnitQuaternion(const Quaternion& q) {
        const double n = q.norm();
        if (!(std::abs(n - 1.0) < kTolerance)) {
            throw std::domain_error("quaternion is not unit within 1e-9");
        }
        q_ = q / n;
    }

    /// (cos(angle/2), sin(angle/2) axis) for a unit axis.
    static UnitQuaternion from_axis_angle(const Vec3& axis, double angle) {
        const double n = norm(axis);
        if (!(std::abs(n - 1.0) < kTolerance)) throw std::domain_error("rotation axis must be a unit vector");
        return UnitQuaternion(Quaternion{std::cos(angle / 2), std::sin(angle / 2) * (axis / n)});
    }

    const Quaternion& value() const { return q_; }
    operator const Quaternion&() const { return q_; }  // NOLINT(google-explicit-constructor)

    double s() const { return q_.s; }
    const Vec3& v() const { return q_.v; }

    UnitQuaternion conj() const { return UnitQuaternion(q_.conj(), Trusted{}); }

    friend UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) {
        return UnitQuaternion(a.q_ * b.q_);
    }
    friend bool operator==(const UnitQuaternion& a, const UnitQuaternion& b) { return a.q_ == b.q_; }

private:
    struct Trusted {};
    UnitQuaternion(const Quaternion& q, Trusted) : q_(q) {}

    Quaternion q_ = Quaternion::one();
};

/// Unit pure-vector quaternion (boost direction).
inline Quaternion unit_pure(const Vec3& u) {
    const double n = norm(u);
    if (!(std::abs(n - 1.0) < UnitQuaternion::kTolerance)) {
        throw std::domain_error("boost direction must be a unit 3-vector");
    }
    return Quaternion::pure(u / n);
}

/// Canonical square root of a unit quaternion. For z = (cos t, sin t n),
/// t in [0, pi], returns (cos t/2, sin t/2 n). At z = -1 the axis is e_1.
inline UnitQuaternion sqrt_unit(const UnitQuaternion& z) {
    const double vn = norm(z.v());
    if (vn == 0.0) {
        if (z.s() > 0.0) return UnitQuaternion{};
        return UnitQuaternion(Quaternion::basis(1));
    }
    const double half = 0.5 * std::atan2(vn, z.s());
    return UnitQuaternion(Quaternion{std::cos(half), (std::sin(half) / vn) * z.v()});
}

// 2x2 complex embedding ------------------------------------------------------

/// embed(s + v.e) = s 1 + v1 (i sigma_1) - v2 (i sigma_2) + v3 (i sigma_3).
inline Mat2c embed(const Quaternion& q) {
    using namespace std::complex_literals;
    return {{{q.s + 1.0i * q.v[2], 1.0i * q.v[0] - q.v[1]},
             {1.0i * q.v[0] + q.v[1], q.s - 1.0i * q.v[2]}}};
}

/// Inverse of embed. Throws std::domain_error when m is farther than tol
/// (max-abs entrywise) from the quaternion image.
inline Quaternion extract(const Mat2c& m, double tol = 1e-10) {
    const Quaternion q{0.5 * (m[0][0] + m[1][1]).real(),
                       {0.5 * (m[0][1] + m[1][0]).imag(), 0.5 * (m[1][0] - m[0][1]).real(),
                        0.5 * (m[0][0] - m[1][1]).imag()}};
    const Mat2c back = embed(q);
    double err = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) err = std::max(err, std::abs(back[i][j] - m[i][j]));
    if (!(err <= tol)) throw std::domain_error("2x2 complex matrix is not in the quaternion image");
    return q;
}

}  // namespace ds4
