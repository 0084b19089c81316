// ds4 command-line tool.
//
//   ds4 check <suite> [--trials N] [--seed S] [--tol T]
//   ds4 decompose [--file F]          group element JSON -> factors JSON
//   ds4 reconstruct [--file F]        factors JSON -> group element JSON
//   ds4 orbit --kappa K --n N [--pmax P] [--seed S] [--coords|--matrix]
//   ds4 contract [--m M] [--c C] [--p x,y,z] [--q x,y,z] [--rmin A] [--rmax B] [--steps N] [--format csv|json]
//
// Exit codes: 0 pass, 1 suite failure, 2 usage/parse error, 3 certification
// failure. Results go to stdout (JSON, JSON lines or CSV); diagnostics to stderr.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ds4/ds4.hpp"
#include "ds4/json.hpp"
#include "ds4/suites.hpp"

namespace {

using nlohmann::json;

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kCertification = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("DS4_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("DS4_SEED is not an unsigned integer");
        }
    }
    return 1;
}

json read_json(const std::string& file) {
    std::string text;
    if (file.empty() || file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(file);
        if (!in) throw UsageError("cannot open " + file);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

ds4::Vec3 parse_vec3(const std::string& s) {
    ds4::Vec3 v{};
    std::stringstream ss(s);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 3) throw UsageError("expected three comma-separated components: " + s);
        try {
            std::size_t used = 0;
            v[static_cast<std::size_t>(i)] = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad vector component '" + item + "'");
        }
        ++i;
    }
    if (i != 3) throw UsageError("expected three comma-separated components: " + s);
    return v;
}

int cmd_check(const std::string& suite, const std::optional<int>& trials, std::uint64_t seed,
              const std::optional<double>& tol) {
    if (!ds4::find_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
    ds4::RunReport report;
    try {
        report = ds4::run_suite(suite, trials, seed, tol);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::exception& e) {
        std::cerr << "suite " << suite << " aborted: " << e.what() << "\n";
        report.suite = suite;
        report.trials = trials.value_or(ds4::find_suite(suite)->trials);
        report.seed = seed;
        report.tol = tol.value_or(ds4::find_suite(suite)->tol);
        report.max_residual = std::numeric_limits<double>::infinity();
        report.pass = false;
    }
    json j = report;
    if (!std::isfinite(report.max_residual)) j["max_residual"] = nullptr;
    std::cout << j.dump() << "\n";
    return report.pass ? kPass : kFail;
}

int cmd_decompose(const std::string& file) {
    const json in = read_json(file);
    ds4::QMat2 m;
    try {
        m = ds4::parse_blocks(in);
    } catch (const json::exception& e) {
        throw UsageError(std::string("expected {\"blocks\": {...}}: ") + e.what());
    }
    const ds4::MembershipReport membership = ds4::is_member(m, 1e-8);
    if (!membership.pass) {
        std::cerr << "input is not in Sp(2,2)\n";
        std::cout << json{{"membership", membership}}.dump() << "\n";
        return kCertification;
    }
    const ds4::GroupElement g = ds4::GroupElement::trusted(m);
    ds4::DecompositionFactors f;
    try {
        f = ds4::decompose(g, 1e-8);
    } catch (const ds4::NumericalFault& e) {
        std::cerr << "decomposition failed: " << e.what() << "\n";
        return kFail;
    }
    const double residual = ds4::distance(ds4::reconstruct(f).matrix(), m);
    std::cout << json{{"factors", f}, {"reconstruction_residual", residual}, {"membership", membership}}.dump()
              << "\n";
    return residual <= 1e-8 ? kPass : kFail;
}

int cmd_reconstruct(const std::string& file) {
    const json in = read_json(file);
    ds4::DecompositionFactors f;
    try {
        f = in.contains("factors") ? in.at("factors").get<ds4::DecompositionFactors>()
                                   : in.get<ds4::DecompositionFactors>();
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad factors: ") + e.what());
    }
    std::cout << json(ds4::reconstruct(f)).dump() << "\n";
    return kPass;
}

int cmd_orbit(double kappa, int n, std::optional<double> pmax, std::uint64_t seed, bool matrix) {
    if (!(kappa >= 0.0)) throw UsageError("--kappa must be non-negative");
    if (n <= 0) throw UsageError("--n must be positive");
    const double window = pmax.value_or(5.0 * kappa);
    if (!(window > 0.0)) throw UsageError("--pmax must be positive (kappa = 0 needs an explicit --pmax)");

    const auto points = ds4::sample_orbit(kappa, n, window, seed);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const ds4::OrbitPoint& pt = points[i];
        const ds4::AlgebraElement x = ds4::orbit_matrix(pt);
        const ds4::CoadjointCoords c = ds4::to_coadjoint_coords(x);
        json rec = {{"index", i}, {"z", pt.z}, {"p", pt.p}, {"kappa", pt.kappa}, {"p0", pt.p0()}};
        if (matrix) rec["matrix"] = ds4::blocks_json(x.matrix())["blocks"];
        else rec["coords"] = c;
        rec["residuals"] = ds4::conservation_residuals(c, kappa);
        std::cout << rec.dump() << "\n";
    }
    return kPass;
}

int cmd_contract(double m, double c, const std::string& p, const std::string& q, double r_min, double r_max,
                 int steps, const std::string& format) {
    if (!(m > 0.0 && c > 0.0)) throw UsageError("--m and --c must be positive");
    if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
    std::vector<double> grid;
    try {
        grid = ds4::log_grid(r_min, r_max, steps);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto rows = ds4::contraction_sweep(m, c, parse_vec3(p), parse_vec3(q), grid);
    const double slope = ds4::log_log_slope(rows);
    if (format == "json") {
        json out = {{"rows", json::array()}};
        for (const auto& row : rows)
            out["rows"].push_back({{"R", row.R}, {"E", row.E}, {"mass_shell_defect", row.mass_shell_defect}});
        out["slope"] = std::isnan(slope) ? json(nullptr) : json(slope);
        std::cout << out.dump() << "\n";
        return kPass;
    }
    std::cout << "R,E,mass_shell_defect\n";
    for (const auto& row : rows) std::cout << fmt(row.R) << "," << fmt(row.E) << "," << fmt(row.mass_shell_defect) << "\n";
    std::cout << "# slope=" << (std::isnan(slope) ? std::string("nan") : fmt(slope)) << "\n";
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"de Sitter group Sp(2,2): verification suites, decomposition, orbits, contraction"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<double> tol;
    std::string suite, file;

    auto* check = app.add_subcommand("check", "run a named verification suite");
    check->add_option("suite", suite, "clifford|membership|decomposition|brackets|homomorphism|orbits|contraction|mirror")
        ->required();
    check->add_option("--trials", trials, "number of trials");
    check->add_option("--seed", seed, "random seed (falls back to DS4_SEED)");
    check->add_option("--tol", tol, "pass threshold on max_residual");

    auto* decompose = app.add_subcommand("decompose", "space-time-Lorentz factors of a group element");
    decompose->add_option("--file", file, "input JSON (default stdin)");

    auto* reconstruct = app.add_subcommand("reconstruct", "group element from decomposition factors");
    reconstruct->add_option("--file", file, "input JSON (default stdin)");

    double kappa = 1.0;
    int n = 1;
    std::optional<double> pmax;
    bool as_matrix = false, as_coords = false;
    auto* orbit = app.add_subcommand("orbit", "sample points of the orbit O(2 kappa X0)");
    orbit->add_option("--kappa", kappa, "orbit parameter (0 = massless)");
    orbit->add_option("--n", n, "number of samples");
    orbit->add_option("--pmax", pmax, "momentum window radius (default 5 kappa)");
    orbit->add_option("--seed", seed, "random seed (falls back to DS4_SEED)");
    auto* coords_flag = orbit->add_flag("--coords", as_coords, "emit coadjoint coordinates (default)");
    orbit->add_flag("--matrix", as_matrix, "emit quaternionic blocks instead of coordinates")->excludes(coords_flag);

    double mass = 1.0, light = 1.0, r_min = 10.0, r_max = 1e6;
    int steps = 11;
    std::string p = "1,0,0", q = "0,1,0", format = "csv";
    auto* contract = app.add_subcommand("contract", "mass-shell defect of the energy quartic as R grows");
    contract->add_option("--m", mass, "mass");
    contract->add_option("--c", light, "speed of light");
    contract->add_option("--p", p, "momentum x,y,z");
    contract->add_option("--q", q, "position x,y,z");
    contract->add_option("--rmin", r_min, "smallest radius");
    contract->add_option("--rmax", r_max, "largest radius");
    contract->add_option("--steps", steps, "grid points (>= 2, logarithmic)");
    contract->add_option("--format", format, "csv or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*check) return cmd_check(suite, trials, resolve_seed(seed), tol);
        if (*decompose) return cmd_decompose(file);
        if (*reconstruct) return cmd_reconstruct(file);
        if (*orbit) return cmd_orbit(kappa, n, pmax, resolve_seed(seed), as_matrix);
        if (*contract) return cmd_contract(mass, light, p, q, r_min, r_max, steps, format);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ds4::NotAMember& e) {
        std::cerr << e.what() << "\n";
        return kCertification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
