// json.hpp
// nlohmann/json forms of the value types, shared by the CLI and tests:
//   quaternion      {"s": f64, "v": [3]}
//   ambient vector  {"x": [5]},  de Sitter point {"x": [5], "R": f64}
//   group element   {"blocks": {"a": Q, "b": Q, "c": Q, "d": Q}}
//   factors         {"w": Q, "psi": f64, "v": Q, "phi": f64, "u": Q}
//   algebra element {"a": [3], "j": [3], "d0": f64, "d": [3]}
//   orbit point     {"z": Q, "p": [3], "kappa": f64}

#pragma once

#include <json.hpp>

#include "ds4/algebra.hpp"
#include "ds4/group.hpp"
#include "ds4/orbits.hpp"

namespace ds4 {

inline void to_json(nlohmann::json& j, const Quaternion& q) { j = {{"s", q.s}, {"v", q.v}}; }
inline void from_json(const nlohmann::json& j, Quaternion& q) {
    j.at("s").get_to(q.s);
    j.at("v").get_to(q.v);
}

inline void to_json(nlohmann::json& j, const UnitQuaternion& q) { j = q.value(); }
inline void from_json(const nlohmann::json& j, UnitQuaternion& q) { q = UnitQuaternion(j.get<Quaternion>()); }

inline void to_json(nlohmann::json& j, const AmbientVector& v) { j = {{"x", v.x}}; }
inline void from_json(const nlohmann::json& j, AmbientVector& v) { j.at("x").get_to(v.x); }

inline void to_json(nlohmann::json& j, const DSPoint& p) { j = {{"x", p.x().x}, {"R", p.radius()}}; }

inline nlohmann::json blocks_json(const QMat2& m) {
    return {{"blocks", {{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}}}};
}

/// Parses {"blocks": {...}} without certifying membership.
inline QMat2 parse_blocks(const nlohmann::json& j) {
    const auto& b = j.at("blocks");
    return {b.at("a").get<Quaternion>(), b.at("b").get<Quaternion>(), b.at("c").get<Quaternion>(),
            b.at("d").get<Quaternion>()};
}

inline void to_json(nlohmann::json& j, const GroupElement& g) { j = blocks_json(g.matrix()); }
inline void from_json(const nlohmann::json& j, GroupElement& g) { g = GroupElement(parse_blocks(j)); }

inline void to_json(nlohmann::json& j, const DecompositionFactors& f) {
    j = {{"w", f.w}, {"psi", f.psi}, {"v", f.v}, {"phi", f.phi}, {"u", Quaternion::pure(f.u)}};
}
inline void from_json(const nlohmann::json& j, DecompositionFactors& f) {
    f.w = j.at("w").get<UnitQuaternion>();
    j.at("psi").get_to(f.psi);
    f.v = j.at("v").get<UnitQuaternion>();
    j.at("phi").get_to(f.phi);
    const auto u = j.at("u").get<Quaternion>();
    if (u.s != 0.0) throw std::domain_error("boost direction must be a pure quaternion");
    f.u = unit_pure(u.v).v;
}

inline void to_json(nlohmann::json& j, const AlgebraCoords& c) {
    j = {{"a", c.a}, {"j", c.j}, {"d0", c.d0}, {"d", c.d}};
}
inline void from_json(const nlohmann::json& j, AlgebraCoords& c) {
    j.at("a").get_to(c.a);
    j.at("j").get_to(c.j);
    j.at("d0").get_to(c.d0);
    j.at("d").get_to(c.d);
}

inline void to_json(nlohmann::json& j, const AlgebraElement& x) { j = x.to_coords(); }
inline void from_json(const nlohmann::json& j, AlgebraElement& x) { x = from_coords(j.get<AlgebraCoords>()); }

inline void to_json(nlohmann::json& j, const OrbitPoint& p) { j = {{"z", p.z}, {"p", p.p}, {"kappa", p.kappa}}; }
inline void from_json(const nlohmann::json& j, OrbitPoint& p) {
    p.z = j.at("z").get<UnitQuaternion>();
    j.at("p").get_to(p.p);
    j.at("kappa").get_to(p.kappa);
}

inline void to_json(nlohmann::json& j, const MembershipReport& r) {
    j = {{"det_defect", r.det_defect},
         {"pseudo_unitarity_defect", r.pseudo_unitarity_defect},
         {"tol", r.tol},
         {"pass", r.pass}};
}

inline void to_json(nlohmann::json& j, const ConservationResiduals& r) {
    j = {{"r1", r.r1}, {"r2", r.r2}, {"degenerate", r.degenerate}};
}

template <class T>
nlohmann::json mat5_json(const Mat5<T>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m) rows.push_back(row);
    return rows;
}

}  // namespace ds4

namespace nlohmann {
template <>
struct adl_serializer<ds4::DSPoint> {
    static ds4::DSPoint from_json(const json& j) {
        return ds4::DSPoint(ds4::AmbientVector{j.at("x").get<std::array<double, 5>>()}, j.at("R").get<double>());
    }
    static void to_json(json& j, const ds4::DSPoint& p) { ds4::to_json(j, p); }
};
}  // namespace nlohmann
