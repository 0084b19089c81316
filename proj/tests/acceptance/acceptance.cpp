// Acceptance run: nine criteria, one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "ds4/ds4.hpp"
#include "ds4/suites.hpp"
#include "oracles.hpp"

using namespace ds4;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

int failures = 0;

void criterion(int n, const char* title, double time_limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < time_limit_s;
    const bool ok = o.pass && in_time;
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s | %s | %.3fs (limit %gs)%s\n", ok ? "PASS" : "FAIL", n, title,
                o.detail.c_str(), secs, time_limit_s, in_time ? "" : " TIMEOUT");
    std::fflush(stdout);
}

AmbientVector flip_space(AmbientVector x) {
    for (int k = 1; k < 5; ++k) x[k] = -x[k];
    return x;
}

}  // namespace

int main() {
    criterion(1, "Clifford relations and dagger identities", 1.0, [] {
        double worst = 0.0;
        int dagger_ok = 0;
        for (int a = 0; a < 5; ++a) {
            for (int b = 0; b < 5; ++b) {
                const Mat4c rhs = Complex{2.0 * eta(a, b)} * Mat4c::identity();
                worst = std::max(worst, max_abs(embed4(anticommutator(a, b)) - rhs));
                worst = std::max(worst, max_abs(oracle::gamma(a) * oracle::gamma(b) + oracle::gamma(b) * oracle::gamma(a) - rhs));
            }
            worst = std::max(worst, max_abs(embed4(gamma(a)) - oracle::gamma(a)));
            if (dagger_identity_check(a) && max_abs(embed4(dagger(gamma(a))) - adjoint(oracle::gamma(a))) == 0.0)
                ++dagger_ok;
        }
        return Outcome{worst == 0.0 && dagger_ok == 5,
                       fmt("25 pairs, residual %.3g, dagger identities %g/5", worst, dagger_ok)};
    });

    criterion(2, "membership closure of 1e4 random products", 10.0, [] {
        Rng rng(1001);
        const double worst = suites::membership(rng, 10000);
        return Outcome{worst < 1e-10, fmt("max residual %.3g (tol 1e-10)", worst)};
    });

    criterion(3, "hyperboloid invariance on 1e4 (g, x) pairs", 10.0, [] {
        Rng rng(1002);
        std::uniform_real_distribution<double> log_r(-3.0, 6.0);
        double worst = 0.0;
        for (int t = 0; t < 10000; ++t) {
            const double r = std::pow(10.0, log_r(rng));
            const DSPoint x = random_ds_point(rng, r);
            const AmbientVector y = act(random_member(rng), x.x());
            worst = std::max(worst, std::abs(minkowski_square(y) + r * r) / (r * r));
        }
        return Outcome{worst < 1e-8, fmt("max |(gx)^2 + R^2|/R^2 %.3g (tol 1e-8)", worst)};
    });

    criterion(4, "bracket table in both representations", 1.0, [] {
        const double q = quaternion_bracket_table_residual();
        const int s = so14_bracket_table_residual();
        return Outcome{q < 1e-12 && s == 0, fmt("45 pairs, quaternionic %.3g (tol 1e-12), 5x5 integer %g", q, s)};
    });

    criterion(5, "decomposition round trip, 1e3 members plus degenerate cases", 5.0, [] {
        Rng rng(1005);
        const double random_worst = suites::decomposition(rng, 1000);
        const GroupElement cases[] = {
            GroupElement::identity(),
            t_time_translation(1.25),
            t_boost(1.7, {0.0, 0.6, 0.8}),
            t_space_translation(UnitQuaternion(Quaternion::basis(2))),
            t_space_translation(UnitQuaternion(Quaternion::basis(3))) * t_time_translation(-0.6) *
                t_space_rotation(UnitQuaternion(Quaternion{0.6, {0.0, 0.8, 0.0}})) * t_boost(0.9, {1.0, 0.0, 0.0}),
        };
        double special_worst = 0.0;
        for (const auto& g : cases)
            special_worst = std::max(special_worst, distance(reconstruct(decompose(g)).matrix(), g.matrix()));
        return Outcome{random_worst < 1e-9 && special_worst < 1e-9,
                       fmt("random %.3g, degenerate %.3g (tol 1e-9)", random_worst, special_worst)};
    });

    criterion(6, "orbit conservation, kappa in {0.1, 1, 10} and massless", 20.0, [] {
        Rng rng(1006);
        double worst = 0.0;
        for (double kappa : {0.1, 1.0, 10.0, 0.0}) {
            for (int t = 0; t < 10000; ++t) {
                const AlgebraElement base = kappa > 0.0 ? orbit_base_point(kappa)
                                                        : orbit_matrix(massless_orbit_point(
                                                              random_unit_quaternion(rng), random_unit_vector(rng)));
                const ConservationResiduals r =
                    conservation_residuals(to_coadjoint_coords(adjoint(random_member(rng), base)), kappa);
                worst = std::max(worst, r.max_residual() / std::max(1.0, kappa * kappa));
            }
        }
        return Outcome{worst < 1e-9, fmt("4 x 1e4 points, max scaled residual %.3g (tol 1e-9)", worst)};
    });

    criterion(7, "energy quartic on physicalized orbit samples", 5.0, [] {
        double worst = 0.0;
        const PhysicalConstants sets[] = {{1.0, 1.0, 1.0}, {1.0, 1.0, 100.0}, {2.5, 0.7, 3.0}, {0.3, 3.0, 1e4}};
        std::uint64_t seed = 1007;
        for (const auto& k : sets) {
            const double mc2 = k.kappa();
            for (const auto& pt : sample_orbit(mc2, 2500, 3.0 * mc2, seed++)) {
                const PhysicalState s = physicalize(to_coadjoint_coords(orbit_matrix(pt)), k);
                worst = std::max(worst, std::abs(energy_quartic_residual(s, k)) / std::pow(mc2, 4));
            }
        }
        return Outcome{worst < 1e-8, fmt("1e4 samples, max |residual|/(mc^2)^4 %.3g (tol 1e-8)", worst)};
    });

    criterion(8, "flat contraction of the mass shell", 5.0, [] {
        const auto rows = suites::reference_sweep();
        const double slope = log_log_slope(rows);
        const double last = std::abs(rows.back().mass_shell_defect);
        // long double bisection oracle at the far end
        const long double e2 = oracle::quartic_energy_squared(1.0, 1.0, {1, 0, 0}, {0, 1, 0}, 1e6);
        const double oracle_defect = static_cast<double>(std::abs(e2 - 2.0L));
        return Outcome{std::abs(slope + 2.0) <= 0.05 && last < 1e-11 && std::abs(last - oracle_defect) < 1e-13,
                       fmt("slope %.5f (-2 +/- 0.05), defect at R=1e6 %.3g (tol 1e-11)", slope, last)};
    });

    criterion(9, "mirror symmetry and generator sign table", 1.0, [] {
        Rng rng(1009);
        const GroupElement g0(gamma(0));
        int exact = 0;
        for (int t = 0; t < 1000; ++t) {
            const DSPoint p = random_ds_point(rng, std::pow(10.0, std::uniform_real_distribution<double>(-2, 4)(rng)));
            if (act(g0, p.x()) == flip_space(p.x())) ++exact;
        }
        const auto a = mirror_generator_signs(), b = mirror_generator_signs();
        int table_ok = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].sign == suites::kExpectedMirrorSigns[i] && a[i].sign == b[i].sign) ++table_ok;
        return Outcome{exact == 1000 && table_ok == 10,
                       fmt("exact on %g/1000 points, sign table %g/10", exact, table_ok)};
    });

    std::printf("%d of 9 criteria failed\n", failures);
    return failures;
}
