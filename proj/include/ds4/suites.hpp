// suites.hpp
// Named invariant suites behind `ds4 check`. Each returns a RunReport whose
// pass flag is max_residual <= tol.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ds4/algebra.hpp"
#include "ds4/gamma.hpp"
#include "ds4/group.hpp"
#include "ds4/orbits.hpp"
#include "ds4/random.hpp"

namespace ds4 {

struct RunReport {
    std::string suite;
    int trials = 0;
    double max_residual = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;
    double tol = 0.0;

    bool operator==(const RunReport&) const = default;
};

inline void to_json(nlohmann::json& j, const RunReport& r) {
    j = {{"suite", r.suite}, {"trials", r.trials}, {"max_residual", r.max_residual},
         {"pass", r.pass},   {"seed", r.seed},     {"tol", r.tol}};
}
inline void from_json(const nlohmann::json& j, RunReport& r) {
    j.at("suite").get_to(r.suite);
    j.at("trials").get_to(r.trials);
    j.at("max_residual").get_to(r.max_residual);
    j.at("pass").get_to(r.pass);
    j.at("seed").get_to(r.seed);
    j.at("tol").get_to(r.tol);
}

struct SuiteDefaults {
    std::string_view name;
    int trials;
    double tol;
};

inline constexpr std::array<SuiteDefaults, 8> kSuites = {{
    {"clifford", 1, 0.0},
    {"membership", 10000, 1e-10},
    {"decomposition", 1000, 1e-9},
    {"brackets", 1, 1e-12},
    {"homomorphism", 100, 1e-12},
    {"orbits", 10000, 1e-9},
    {"contraction", 1, 0.05},
    {"mirror", 1000, 0.0},
}};

inline std::optional<SuiteDefaults> find_suite(std::string_view name) {
    for (const auto& s : kSuites)
        if (s.name == name) return s;
    return std::nullopt;
}

namespace suites {

/// 25 anticommutators against 2 eta 1 and the five dagger identities.
inline double clifford() {
    double worst = 0.0;
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
            const QMat2 expected = (2.0 * eta(a, b)) * QMat2::identity();
            worst = std::max(worst, max_abs(embed4(anticommutator(a, b)) - embed4(expected)));
        }
        const QMat2 g0 = gamma(0);
        worst = std::max(worst, distance(dagger(gamma(a)), g0 * gamma(a) * g0));
    }
    return worst;
}

/// Products of random member pairs, both distributions.
inline double membership(Rng& rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const GroupElement g = random_member(rng) * random_member(rng);
        worst = std::max(worst, is_member(g.matrix()).max_residual());
    }
    return worst;
}

/// |reconstruct(decompose(g)) - g|_max over random members.
inline double decomposition(Rng& rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const GroupElement g = random_member(rng);
        worst = std::max(worst, distance(reconstruct(decompose(g)).matrix(), g.matrix()));
    }
    return worst;
}

inline double brackets() {
    return std::max(quaternion_bracket_table_residual(), static_cast<double>(so14_bracket_table_residual()));
}

/// Basis pairs against so14_matrix, then intertwining
/// L([X, Y]) = [L(X), L(Y)] on random algebra elements.
inline double homomorphism(Rng& rng, int trials) {
    double worst = 0.0;
    for (const auto& [a, b] : index_pairs()) worst = std::max(worst, homomorphism_residual(a, b));
    for (int t = 0; t < trials; ++t) {
        const AlgebraElement x = random_algebra_element(rng), y = random_algebra_element(rng);
        const Mat5<double> lx = induced_so14(x.matrix()), ly = induced_so14(y.matrix());
        const Mat5<double> lhs = induced_so14(bracket(x, y).matrix());
        worst = std::max(worst, max_abs(lhs - (lx * ly - ly * lx)));
    }
    return worst;
}

/// Adjoint-transported base points for kappa in {0.1, 1, 10} and the
/// massless family; residuals scaled by 1/max(1, kappa^2).
inline double orbits(Rng& rng, int trials) {
    double worst = 0.0;
    constexpr std::array<double, 4> kappas = {0.1, 1.0, 10.0, 0.0};
    for (int t = 0; t < trials; ++t) {
        const double kappa = kappas[static_cast<std::size_t>(t) % kappas.size()];
        const AlgebraElement base = kappa > 0.0
                                        ? orbit_base_point(kappa)
                                        : orbit_matrix(massless_orbit_point(UnitQuaternion{}, random_unit_vector(rng)));
        const AlgebraElement moved = adjoint(random_member(rng), base);
        const ConservationResiduals r = conservation_residuals(to_coadjoint_coords(moved), kappa);
        worst = std::max(worst, r.max_residual() / std::max(1.0, kappa * kappa));
    }
    return worst;
}

/// Natural units, |p| = |q| = 1, p orthogonal to q, R over [10, 1e6].
inline std::vector<ContractionRow> reference_sweep(int steps = 11) {
    return contraction_sweep(1.0, 1.0, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, log_grid(10.0, 1e6, steps));
}

/// |slope + 2| of the reference sweep.
inline double contraction() {
    const double slope = log_log_slope(reference_sweep());
    return std::isnan(slope) ? std::numeric_limits<double>::infinity() : std::abs(slope + 2.0);
}

inline constexpr std::array<int, 10> kExpectedMirrorSigns = {1, 1, 1, -1, 1, 1, 1, -1, -1, -1};

/// act(gamma^0, (x^0, x)) against (x^0, -x) on random points, plus the
/// Ad(gamma^0) generator sign table.
inline double mirror(Rng& rng, int trials) {
    double worst = 0.0;
    const auto signs = mirror_generator_signs();
    for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i].sign != kExpectedMirrorSigns[i]) worst = 1.0;
    const GroupElement g0(gamma(0));
    for (int t = 0; t < trials; ++t) {
        const DSPoint p = random_ds_point(rng, 1.0 + 9.0 * std::uniform_real_distribution<double>()(rng));
        AmbientVector expected = p.x();
        for (int k = 1; k < 5; ++k) expected[k] = -expected[k];
        worst = std::max(worst, distance(act(g0, p).x(), expected));
    }
    return worst;
}

}  // namespace suites

/// Runs a named suite. trials/tol fall back to the suite defaults.
/// Throws std::invalid_argument for an unknown name.
inline RunReport run_suite(std::string_view name, std::optional<int> trials, std::uint64_t seed,
                           std::optional<double> tol) {
    const auto def = find_suite(name);
    if (!def) throw std::invalid_argument("unknown suite: " + std::string(name));
    RunReport r;
    r.suite = std::string(name);
    r.trials = trials.value_or(def->trials);
    r.seed = seed;
    r.tol = tol.value_or(def->tol);
    if (r.trials <= 0) throw std::invalid_argument("trials must be positive");
    Rng rng(seed);

    double worst = 0.0;
    if (name == "clifford") {
        for (int t = 0; t < r.trials; ++t) worst = std::max(worst, suites::clifford());
    } else if (name == "membership") {
        worst = suites::membership(rng, r.trials);
    } else if (name == "decomposition") {
        worst = suites::decomposition(rng, r.trials);
    } else if (name == "brackets") {
        for (int t = 0; t < r.trials; ++t) worst = std::max(worst, suites::brackets());
    } else if (name == "homomorphism") {
        worst = suites::homomorphism(rng, r.trials);
    } else if (name == "orbits") {
        worst = suites::orbits(rng, r.trials);
    } else if (name == "contraction") {
        for (int t = 0; t < r.trials; ++t) worst = std::max(worst, suites::contraction());
    } else {
        worst = suites::mirror(rng, r.trials);
    }
    r.max_residual = worst;
    r.pass = worst <= r.tol;
    return r;
}

}  // namespace ds4
