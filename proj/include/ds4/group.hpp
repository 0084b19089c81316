// group.hpp
// Sp(2,2) as 2x2 quaternionic matrices with det = 1 and g^dagger gamma^0 g
// = gamma^0: membership certification, the action on the hyperboloid, the
// four factor subgroups and the space-time-Lorentz decomposition
//   g = T_st(w) T_tt(psi) T_sr(v) T_bt(phi, u).

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ds4/gamma.hpp"
#include "ds4/generators.hpp"

namespace ds4 {

/// An internal consistency check failed; signals a numerical or logic fault,
/// never bad user input.
class NumericalFault : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MembershipReport {
    double det_defect = 0.0;               // |det4(m) - 1|
    double pseudo_unitarity_defect = 0.0;  // max |m^dagger gamma^0 m - gamma^0|
    double tol = 0.0;
    bool pass = false;

    double max_residual() const { return std::max(det_defect, pseudo_unitarity_defect); }
};

inline MembershipReport is_member(const QMat2& m, double tol = 1e-10) {
    MembershipReport r;
    r.det_defect = std::abs(det4(m) - Complex{1.0});
    const QMat2 g0 = gamma(0);
    r.pseudo_unitarity_defect = distance(dagger(m) * g0 * m, g0);
    r.tol = tol;
    r.pass = r.det_defect <= tol && r.pseudo_unitarity_defect <= tol;
    return r;
}

class NotAMember : public std::domain_error {
public:
    explicit NotAMember(const MembershipReport& report)
        : std::domain_error("matrix is not in Sp(2,2): det defect " + std::to_string(report.det_defect) +
                            ", pseudo-unitarity defect " + std::to_string(report.pseudo_unitarity_defect)),
          report_(report) {}

    const MembershipReport& report() const { return report_; }

private:
    MembershipReport report_;
};

class GroupElement {
public:
    GroupElement() = default;

    /// Certifies membership at tol; throws NotAMember otherwise.
    explicit GroupElement(const QMat2& m, double tol = 1e-10) : m_(m) {
        const MembershipReport r = is_member(m, tol);
        if (!r.pass) throw NotAMember(r);
    }

    /// Skips certification. Only for matrices that are members by
    /// construction (closed-form subgroup elements, products of members).
    static GroupElement trusted(const QMat2& m) {
        GroupElement g;
        g.m_ = m;
        return g;
    }

    static GroupElement identity() { return {}; }

    const QMat2& matrix() const { return m_; }

private:
    QMat2 m_ = QMat2::identity();
};

inline GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
    return GroupElement::trusted(g1.matrix() * g2.matrix());
}

inline GroupElement operator*(const GroupElement& g1, const GroupElement& g2) { return compose(g1, g2); }

/// g^-1 = gamma^0 g^dagger gamma^0, a consequence of pseudo-unitarity.
inline GroupElement inverse(const GroupElement& g) {
    const QMat2 g0 = gamma(0);
    return GroupElement::trusted(g0 * dagger(g.matrix()) * g0);
}

/// slash(x') = g slash(x) g^-1.
inline AmbientVector act(const GroupElement& g, const AmbientVector& x) {
    return unslash(g.matrix() * slash(x) * inverse(g).matrix());
}

inline DSPoint act(const GroupElement& g, const DSPoint& p) {
    AmbientVector moved;
    try {
        moved = act(g, p.x());
    } catch (const std::domain_error& e) {
        throw NumericalFault(std::string("group action left the slash image: ") + e.what());
    }
    return DSPoint(moved, p.radius());
}

// Factor subgroups -----------------------------------------------------------

/// Space translation diag(w, w*).
inline GroupElement t_space_translation(const UnitQuaternion& w) {
    return GroupElement::trusted(QMat2::diag(w, conj(w.value())));
}

/// Time translation (cosh psi/2, sinh psi/2; sinh psi/2, cosh psi/2).
inline GroupElement t_time_translation(double psi) {
    const Quaternion c{std::cosh(psi / 2)}, s{std::sinh(psi / 2)};
    return GroupElement::trusted({c, s, s, c});
}

/// Space rotation diag(v, v).
inline GroupElement t_space_rotation(const UnitQuaternion& v) { return GroupElement::trusted(QMat2::diag(v, v)); }

/// Boost (cosh phi/2, u sinh phi/2; -u sinh phi/2, cosh phi/2) along unit u.
inline GroupElement t_boost(double phi, const Vec3& u) {
    const Quaternion uq = unit_pure(u);
    const Quaternion c{std::cosh(phi / 2)};
    const Quaternion s = std::sinh(phi / 2) * uq;
    return GroupElement::trusted({c, s, -s, c});
}

// Decomposition ----------------------------------------------------------------

struct DecompositionFactors {
    UnitQuaternion w;
    double psi = 0.0;
    UnitQuaternion v;
    double phi = 0.0;
    Vec3 u{1.0, 0.0, 0.0};
};

inline GroupElement reconstruct(const DecompositionFactors& f) {
    return t_space_translation(f.w) * t_time_translation(f.psi) * t_space_rotation(f.v) * t_boost(f.phi, f.u);
}

/// Canonical section of the (nonunique) decomposition:
///  1. x = g.x_o fixes psi = asinh(x^0/R) and z = x/(R cosh psi) = w^2;
///     w is the canonical sqrt_unit branch.
///  2. L = T_tt(-psi) T_st(w*) g must fix x_o and have blocks a = d, b = -c.
///  3. a = v cosh(phi/2), b = v u sinh(phi/2) with phi >= 0; u = e_1 when
///     sinh(phi/2) <= 1e-12.
/// Throws NotAMember for inputs failing membership at 1e-10 and
/// NumericalFault when the stabilizer assertions fail at 1e-9.
inline DecompositionFactors decompose(const GroupElement& g, double member_tol = 1e-10) {
    if (const MembershipReport r = is_member(g.matrix(), member_tol); !r.pass) throw NotAMember(r);

    constexpr double kStabilizerTol = 1e-9;
    const DSPoint origin = DSPoint::origin(1.0);
    AmbientVector x;
    try {
        x = act(g, origin.x());
    } catch (const std::domain_error& e) {
        throw NumericalFault(std::string("group action left the slash image: ") + e.what());
    }

    DecompositionFactors f;
    f.psi = std::asinh(x[0]);
    const Quaternion zq = x.spatial() / std::sqrt(1.0 + x[0] * x[0]);
    try {
        f.w = sqrt_unit(UnitQuaternion(zq));
    } catch (const std::domain_error&) {
        throw NumericalFault("translation part is not a unit quaternion");
    }

    const QMat2 lorentz = (t_time_translation(-f.psi) * t_space_translation(f.w.conj()) * g).matrix();
    const double scale = std::max(1.0, max_abs(lorentz));
    const AmbientVector fixed = act(GroupElement::trusted(lorentz), origin.x());
    if (!(distance(fixed, origin.x()) <= kStabilizerTol * scale * scale)) {
        throw NumericalFault("Lorentz factor does not stabilize the origin");
    }
    if (!(max_abs(lorentz.a - lorentz.d) <= kStabilizerTol * scale &&
          max_abs(lorentz.b + lorentz.c) <= kStabilizerTol * scale)) {
        throw NumericalFault("Lorentz factor lacks the (a b; -b a) block structure");
    }

    const double ch = norm(lorentz.a);
    const double sh = norm(lorentz.b);
    if (!(std::abs(ch * ch - sh * sh - 1.0) <= kStabilizerTol * scale * scale)) {
        throw NumericalFault("Lorentz factor violates cosh^2 - sinh^2 = 1");
    }
    f.v = UnitQuaternion(lorentz.a / ch);
    if (sh > 1e-12) {
        f.phi = 2.0 * std::asinh(sh);
        const Vec3 dir = (conj(f.v.value()) * lorentz.b).v;
        f.u = dir / norm(dir);
    } else {
        f.phi = 0.0;
        f.u = {1.0, 0.0, 0.0};
    }
    return f;
}

// Discrete structure -----------------------------------------------------------

/// i(g) = gamma^0 gamma^4 g^dagger gamma^0 gamma^4. Order reversing and
/// involutive; fixes T_st and T_tt, sends T_sr(v) -> T_sr(v*) and
/// T_bt(phi, u) -> T_bt(-phi, u).
inline QMat2 involution(const QMat2& g) {
    const QMat2 j = gamma(0) * gamma(4);
    return j * dagger(g) * j;
}

struct MirrorSign {
    Generator generator;
    int sign;
};

/// Sign s with gamma^0 G (gamma^0)^-1 = s G for each generator.
inline std::array<MirrorSign, 10> mirror_generator_signs() {
    const QMat2 g0 = gamma(0);  // its own inverse
    std::array<MirrorSign, 10> out{};
    std::size_t i = 0;
    for (Generator gen : kAllGenerators) {
        const QMat2 m = generator_matrix(gen);
        const QMat2 image = g0 * m * g0;
        int sign = 0;
        if (distance(image, m) <= 1e-12) sign = 1;
        else if (distance(image, -m) <= 1e-12) sign = -1;
        else throw NumericalFault("Ad(gamma^0) image of " + std::string(name(gen)) + " is not +-G");
        out[i++] = {gen, sign};
    }
    return out;
}

}  // namespace ds4
