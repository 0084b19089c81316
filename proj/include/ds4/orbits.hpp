// orbits.hpp
// (Co-)adjoint orbits O(2 kappa X_0) of massive scalar systems, their
// conservation laws, the physical dimensionalization with kappa = m c^2,
// the flat (R -> infinity) contraction and the massless kappa -> 0 family.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ds4/algebra.hpp"
#include "ds4/group.hpp"
#include "ds4/random.hpp"

namespace ds4 {

/// Ad_g(X) = g X g^-1.
inline AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& x) {
    try {
        return AlgebraElement(g.matrix() * x.matrix() * inverse(g).matrix());
    } catch (const std::domain_error&) {
        throw NumericalFault("adjoint action left sp(2,2)");
    }
}

/// 2 kappa X_0 = kappa offdiag(1, 1).
inline AlgebraElement orbit_base_point(double kappa) {
    return from_coords(AlgebraCoords{{}, {}, kappa, {}});
}

/// Point X(z, p) of an orbit: z on S^3, momentum p, kappa >= 0.
struct OrbitPoint {
    UnitQuaternion z;
    Vec3 p{};
    double kappa = 0.0;

    /// p0 = sqrt(kappa^2 + |p|^2).
    double p0() const { return std::hypot(kappa, norm(p)); }
};

/// z = w^2, p = kappa sinh(phi) w u w*. Equals Ad_{T_st(w) T_bt(phi,u)}(2 kappa X_0).
inline OrbitPoint orbit_point_from_group(double kappa, const UnitQuaternion& w, double phi, const Vec3& u) {
    if (!(kappa >= 0.0)) throw std::domain_error("orbit parameter kappa must be non-negative");
    const Quaternion uq = unit_pure(u);
    OrbitPoint pt;
    pt.kappa = kappa;
    pt.z = w * w;
    pt.p = (kappa * std::sinh(phi)) * (w.value() * uq * conj(w.value())).v;
    return pt;
}

/// (p, p0 z; p0 z*, -z* p z).
inline AlgebraElement orbit_matrix(const UnitQuaternion& z, const Vec3& p, double kappa) {
    if (!(kappa >= 0.0)) throw std::domain_error("orbit parameter kappa must be non-negative");
    const double p0 = std::hypot(kappa, norm(p));
    const Quaternion zq = z.value();
    const Quaternion pq = Quaternion::pure(p);
    Quaternion lower = -(conj(zq) * pq * zq);
    lower.s = 0.0;  // exactly pure; round-off only
    return AlgebraElement(QMat2{pq, p0 * zq, p0 * conj(zq), lower});
}

inline AlgebraElement orbit_matrix(const OrbitPoint& pt) { return orbit_matrix(pt.z, pt.p, pt.kappa); }

/// kappa = 0 point; p must be nonzero.
inline OrbitPoint massless_orbit_point(const UnitQuaternion& z, const Vec3& p) {
    if (!(norm(p) > 0.0)) throw std::domain_error("massless orbit point needs nonzero momentum");
    return OrbitPoint{z, p, 0.0};
}

using CoadjointCoords = AlgebraCoords;

/// Reads (0, a+j), (d0, d), (d0, -d), (0, -a+j) off the blocks.
inline CoadjointCoords to_coadjoint_coords(const AlgebraElement& x) { return x.to_coords(); }

/// (d0)^2 + d.d - a.a - j.j, the kappa^2 of the orbit through c.
inline double orbit_invariant(const CoadjointCoords& c) {
    return c.d0 * c.d0 + dot(c.d, c.d) - dot(c.a, c.a) - dot(c.j, c.j);
}

struct ConservationResiduals {
    Vec3 r1{};
    double r2 = 0.0;
    /// d0 == 0: r1 holds the unscaled d0 j - d x a.
    bool degenerate = false;

    double max_residual() const { return std::max(max_abs(r1), std::abs(r2)); }
};

/// r1 = j - (d x a)/d0, r2 = kappa^2 - orbit_invariant(c). Off-orbit inputs
/// are reported, never rejected.
inline ConservationResiduals conservation_residuals(const CoadjointCoords& c, double kappa) {
    ConservationResiduals r;
    const Vec3 dxa = cross(c.d, c.a);
    if (c.d0 == 0.0) {
        r.degenerate = true;
        r.r1 = c.d0 * c.j - dxa;
    } else {
        r.r1 = c.j - dxa / c.d0;
    }
    r.r2 = kappa * kappa - orbit_invariant(c);
    return r;
}

// Physical units ---------------------------------------------------------------

struct PhysicalConstants {
    double m = 1.0;  // mass
    double c = 1.0;  // speed of light
    double R = 1.0;  // de Sitter radius

    double kappa() const { return m * c * c; }
};

struct PhysicalState {
    double E = 0.0;
    Vec3 p{};
    Vec3 q{};
    Vec3 l{};  // q x p
};

inline void check_constants(const PhysicalConstants& k) {
    if (!(k.m > 0.0 && k.c > 0.0 && k.R > 0.0)) throw std::domain_error("m, c and R must be positive");
}

/// Inverts a = kappa p/(m c), d0 = kappa E/(m c^2), d = kappa q/R with
/// kappa = m c^2: E = d0, p = a/c, q = d R/(m c^2).
inline PhysicalState physicalize(const CoadjointCoords& x, const PhysicalConstants& k) {
    check_constants(k);
    const double kappa = k.kappa();
    PhysicalState s;
    s.E = x.d0 * k.m * k.c * k.c / kappa;
    s.p = (k.m * k.c / kappa) * x.a;
    s.q = (k.R / kappa) * x.d;
    s.l = cross(s.q, s.p);
    return s;
}

/// E^4 + E^2 (-m^2c^4 - c^2 p.p + (m^2c^4/R^2) q.q) - (m^2c^6/R^2) l.l.
inline double energy_quartic_residual(const PhysicalState& s, const PhysicalConstants& k) {
    const double mc2 = k.m * k.c * k.c;
    const double e2 = s.E * s.E;
    const double r2 = k.R * k.R;
    return e2 * e2 + e2 * (-mc2 * mc2 - k.c * k.c * dot(s.p, s.p) + mc2 * mc2 / r2 * dot(s.q, s.q)) -
           mc2 * mc2 * k.c * k.c / r2 * dot(s.l, s.l);
}

struct ContractionRow {
    double R = 0.0;
    double E = 0.0;
    double mass_shell_defect = 0.0;  // E^2 - c^2 p.p - m^2 c^4
};

/// Positive-energy root of the quartic at radius R. With A = m^2c^4 + c^2 p.p,
/// eps = m^2c^4 q.q/R^2 and C = m^2c^6 l.l/R^2 the larger E^2 root is A + Delta,
/// Delta = 2(C - A eps)/(sqrt((A - eps)^2 + 4C) + A + eps).
inline ContractionRow contraction_point(double m, double c, const Vec3& p, const Vec3& q, double R) {
    check_constants({m, c, R});
    const double mc2 = m * c * c;
    const double a = mc2 * mc2 + c * c * dot(p, p);
    const double eps = mc2 * mc2 * dot(q, q) / (R * R);
    const Vec3 l = cross(q, p);
    const double cc = mc2 * mc2 * c * c * dot(l, l) / (R * R);
    const double root = std::sqrt((a - eps) * (a - eps) + 4.0 * cc);
    const double delta = 2.0 * (cc - a * eps) / (root + a + eps);
    const double e2 = a + delta;
    if (!(e2 > 0.0)) throw NumericalFault("energy quartic has no positive root");
    return {R, std::sqrt(e2), delta};
}

inline std::vector<ContractionRow> contraction_sweep(double m, double c, const Vec3& p, const Vec3& q,
                                                     const std::vector<double>& radii) {
    std::vector<ContractionRow> rows;
    rows.reserve(radii.size());
    double prev = 0.0;
    for (double r : radii) {
        if (!(r > prev)) throw std::invalid_argument("radii must be positive and increasing");
        prev = r;
        rows.push_back(contraction_point(m, c, p, q, r));
    }
    return rows;
}

/// steps radii spaced evenly in log R over [r_min, r_max].
inline std::vector<double> log_grid(double r_min, double r_max, int steps) {
    if (!(r_min > 0.0 && r_max > r_min && steps >= 2)) throw std::invalid_argument("invalid logarithmic grid");
    std::vector<double> out;
    const double lo = std::log10(r_min), hi = std::log10(r_max);
    for (int i = 0; i < steps; ++i) out.push_back(std::pow(10.0, lo + (hi - lo) * i / (steps - 1)));
    out.back() = r_max;
    out.front() = r_min;
    return out;
}

/// Least-squares slope of log|defect| against log R. Rows with zero defect
/// are skipped; NaN when fewer than two rows remain.
inline double log_log_slope(const std::vector<ContractionRow>& rows) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& row : rows) {
        if (row.mass_shell_defect == 0.0) continue;
        const double x = std::log(row.R), y = std::log(std::abs(row.mass_shell_defect));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) return std::nan("");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Sampling ---------------------------------------------------------------------

/// n draws with z uniform on S^3 and p uniform in |p| <= p_max (the
/// invariant measure d mu(z) d^3p truncated to a ball). kappa = 0 gives
/// massless points. Deterministic in seed.
inline std::vector<OrbitPoint> sample_orbit(double kappa, int n, double p_max, std::uint64_t seed) {
    if (!(kappa >= 0.0)) throw std::domain_error("orbit parameter kappa must be non-negative");
    if (n <= 0) throw std::invalid_argument("sample count must be positive");
    if (!(p_max > 0.0)) throw std::invalid_argument("momentum window p_max must be positive");
    Rng rng(seed);
    std::vector<OrbitPoint> out;
    out.reserve(static_cast<std::size_t>(n));
    while (out.size() < static_cast<std::size_t>(n)) {
        const UnitQuaternion z = random_unit_quaternion(rng);
        const Vec3 p = random_in_ball(rng, p_max);
        if (kappa == 0.0 && norm(p) == 0.0) continue;
        out.push_back(OrbitPoint{z, p, kappa});
    }
    return out;
}

}  // namespace ds4
