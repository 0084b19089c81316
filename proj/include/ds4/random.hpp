// random.hpp
// Seeded generators for quaternions, group members, algebra elements and
// hyperboloid points. Two independent member distributions: products of
// random decomposition factors and exponentials of random algebra elements.

#pragma once

#include <random>

#include "ds4/algebra.hpp"

namespace ds4 {

using Rng = std::mt19937_64;

inline UnitQuaternion random_unit_quaternion(Rng& rng) {
    std::normal_distribution<double> n;
    for (;;) {
        const Quaternion q{n(rng), {n(rng), n(rng), n(rng)}};
        const double len = q.norm();
        if (len > 1e-6) return UnitQuaternion(q / len);
    }
}

inline Vec3 random_unit_vector(Rng& rng) {
    std::normal_distribution<double> n;
    for (;;) {
        const Vec3 v{n(rng), n(rng), n(rng)};
        const double len = norm(v);
        if (len > 1e-6) return v / len;
    }
}

/// Uniform in the ball |p| <= radius.
inline Vec3 random_in_ball(Rng& rng, double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const Vec3 dir = random_unit_vector(rng);
    return (radius * std::cbrt(u(rng))) * dir;
}

inline Quaternion random_quaternion(Rng& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), {u(rng), u(rng), u(rng)}};
}

/// w, v uniform on S^3, psi uniform in [-psi_max, psi_max], phi uniform in
/// [0, phi_max], u uniform on S^2.
inline DecompositionFactors random_factors(Rng& rng, double psi_max = 2.0, double phi_max = 2.0) {
    DecompositionFactors f;
    f.w = random_unit_quaternion(rng);
    f.psi = std::uniform_real_distribution<double>(-psi_max, psi_max)(rng);
    f.v = random_unit_quaternion(rng);
    f.phi = std::uniform_real_distribution<double>(0.0, phi_max)(rng);
    f.u = random_unit_vector(rng);
    return f;
}

/// All ten coordinates uniform in [-scale, scale] on the generator basis.
inline AlgebraElement random_algebra_element(Rng& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    AlgebraElement x = u(rng) * generator(Generator::X1);
    for (std::size_t i = 1; i < kAllGenerators.size(); ++i) x = x + u(rng) * generator(kAllGenerators[i]);
    return x;
}

inline GroupElement random_member_from_factors(Rng& rng) { return reconstruct(random_factors(rng)); }

inline GroupElement random_member_from_exp(Rng& rng) { return exp(random_algebra_element(rng)); }

/// Alternates the two distributions by the parity of a fair coin.
inline GroupElement random_member(Rng& rng) {
    return std::bernoulli_distribution(0.5)(rng) ? random_member_from_factors(rng) : random_member_from_exp(rng);
}

/// (R sinh t, R cosh t * z) with t uniform in [-t_max, t_max], z uniform on S^3.
inline DSPoint random_ds_point(Rng& rng, double radius, double t_max = 2.0) {
    const double t = std::uniform_real_distribution<double>(-t_max, t_max)(rng);
    const Quaternion z = random_unit_quaternion(rng);
    const double r = radius * std::cosh(t);
    const AmbientVector x{{radius * std::sinh(t), r * z.v[0], r * z.v[1], r * z.v[2], r * z.s}};
    return DSPoint(x, radius);
}

}  // namespace ds4
