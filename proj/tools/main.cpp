#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "json_out.hpp"
#include "serialize.hpp"
#include "tgraph/tgraph.hpp"

namespace fs = std::filesystem;
using namespace tgraph;
using tgraph::cli::fmt17;
using tgraph::cli::Json;

namespace {

enum Exit { kOk = 0, kClaimFailure = 1, kUsage = 2, kNumeric = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Global {
    int threads = 0;
    std::string format;  // empty: csv for curves, json otherwise
    double tol = 0.0;
};

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string csv_row(const std::vector<double>& vals) {
    std::string s;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) s += ',';
        s += fmt17(vals[i]);
    }
    return s + "\n";
}

Json envelope(const std::string& kind, const Global& g, Json config) {
    Json j;
    j["schema"] = cli::kSchemaId;
    j["kind"] = kind;
    config["format"] = g.format;
    config["tolerance"] = default_tolerance();
    j["config"] = std::move(config);
    return j;
}

// ---- solve

struct SolveOpts {
    double p = 0.0, lambda = 1.0, ell = 0.0;
    int samples = 200;
    std::string out = ".";
    bool profiles = true;
};

std::string profile_csv(const BoundState& s, int samples) {
    std::string text = "edge,x,u,du\n";
    for (Edge e : {Edge::e1, Edge::e2, Edge::e3}) {
        const EdgeProfile prof = reconstruct_edge(s, e, samples);
        for (std::size_t i = 0; i < prof.xs.size(); ++i)
            text += to_string(e) + "," + fmt17(prof.xs[i]) + "," + fmt17(prof.us[i]) + "," + fmt17(prof.dus[i]) + "\n";
    }
    return text;
}

int run_solve(const SolveOpts& o, const Global& g) {
    const Params params{o.p, o.lambda, o.ell};
    params.validate();
    const SolutionSet set = enumerate(params);
    std::vector<BoundState> states{set.type_a};
    states.insert(states.end(), set.type_c.begin(), set.type_c.end());

    const fs::path dir(o.out);
    Json doc = envelope("solutions", g, Json{{"p", o.p}, {"lambda", o.lambda}, {"ell", o.ell}, {"samples", o.samples}});
    doc["params"] = cli::to_json(params);
    doc["ell_star"] = ell_star(o.p, o.lambda);
    doc["counts"] = Json{{"A", set.counts.A}, {"B", set.counts.B}, {"C", set.counts.C}};
    Json arr = Json::array();
    std::string summary =
        "index,kind,z,y,half_orbits,orientation,level,mass,lp_norm_p,grad_sq,energy,action,sup,verified\n";
    for (std::size_t i = 0; i < states.size(); ++i) {
        const BoundState& s = states[i];
        const Observables ob = observables(s);
        const VerifyReport vr = verify_state(s, 1e-6);
        char name[32];
        std::snprintf(name, sizeof name, "state_%02zu.csv", i);
        Json js;
        js["index"] = i;
        js["state"] = cli::to_json(s);
        js["observables"] = cli::to_json(ob);
        js["verification"] = cli::to_json(vr);
        if (o.profiles) js["profile_file"] = name;
        arr.push_back(js);
        std::string row = csv_row({s.z, s.y});
        row.pop_back();
        std::string tail = csv_row({s.level, ob.mass, ob.lp_norm_p, ob.grad_sq, ob.energy, ob.action, ob.sup});
        tail.pop_back();
        summary += std::to_string(i) + "," + to_string(s.kind) + "," + row + "," + std::to_string(s.half_orbits) + "," +
                   std::to_string(s.orientation) + "," + tail + "," + (vr.pass ? "true" : "false") + "\n";
        if (o.profiles) write_file(dir / name, profile_csv(s, o.samples));
    }
    doc["states"] = arr;
    if (g.format == "csv")
        write_file(dir / "solutions.csv", summary);
    else
        write_file(dir / "solutions.json", cli::dump_json(doc));
    std::printf("counts A=%d B=%d C=%d (ell*=%s)\n", set.counts.A, set.counts.B, set.counts.C, fmt17(ell_star(o.p, o.lambda)).c_str());
    return kOk;
}

// ---- curve

struct CurveOpts {
    std::string kind;
    double p = 0.0, lambda_min = kDefaultLambdaMin, lambda_max = kDefaultLambdaMax;
    int n = static_cast<int>(kDefaultGridPoints);
    std::string out;
    std::string dual_mass;
};

struct CurveFiles {
    std::string data;
    Json sidecar;
};

CurveFiles build_curve(const CurveOpts& o, const Global& g) {
    if (!(o.lambda_min > 0.0 && o.lambda_min < o.lambda_max)) throw UsageError("need 0 < lambda-min < lambda-max");
    if (o.n < 3) throw UsageError("need n >= 3");
    const CurveScan scan = theta_scan(o.p, log_grid(o.lambda_min, o.lambda_max, o.n), g.threads);
    CurveFiles f;
    Json& side = f.sidecar = envelope("curve", g,
                                      Json{{"curve", o.kind}, {"p", o.p}, {"lambda_min", o.lambda_min}, {"lambda_max", o.lambda_max},
                                           {"n", o.n}, {"dual_mass", o.dual_mass}});
    side["p"] = o.p;
    side["theta_extrema"] = cli::to_json(scan.extrema);
    side["energy_extrema"] = cli::to_json(scan.energy_extrema);
    if (o.kind == "parametric") {
        const ParametricCurve pc = parametric_curve(scan);
        f.data = "mass,energy\n";
        for (std::size_t i = 0; i < pc.mass.size(); ++i) f.data += csv_row({pc.mass[i], pc.energy[i]});
        side["self_intersections"] = cli::to_json(pc.self_intersections);
    } else {
        f.data = "lambda,theta,energy,action\n";
        for (std::size_t i = 0; i < scan.lambdas.size(); ++i)
            f.data += csv_row({scan.lambdas[i], scan.theta[i], scan.energy[i], scan.action[i]});
    }
    if (!o.dual_mass.empty()) {
        double nu = 0.0;
        if (o.dual_mass == "auto") {
            const Extremum* mn = nullptr;
            for (const auto& e : scan.extrema)
                if (e.kind == ExtremumKind::min && (!mn || e.value < mn->value)) mn = &e;
            if (!mn) throw UsageError("--dual-mass auto needs an interior minimum of theta in the scanned range");
            nu = mn->value + 0.01;
        } else {
            char* end = nullptr;
            nu = std::strtod(o.dual_mass.c_str(), &end);
            if (end == o.dual_mass.c_str() || *end != '\0' || !(nu > 0.0)) throw UsageError("--dual-mass must be 'auto' or a positive mass");
        }
        const DualLambdaResult d = dual_lambda(o.p, nu, scan);
        Json pairs = Json::array();
        for (const auto& [a, b] : d.pairs) pairs.push_back(Json::array({a, b}));
        side["dual_lambda"] = Json{{"mass", nu}, {"roots", d.roots}, {"pairs", pairs}};
        std::printf("mass %s: %zu root(s)", fmt17(nu).c_str(), d.roots.size());
        for (double r : d.roots) std::printf(" %s", fmt17(r).c_str());
        std::printf("\n");
    }
    return f;
}

void write_curve(const CurveFiles& f, const fs::path& out, const Global& g) {
    if (g.format == "json") {
        Json doc = f.sidecar;
        Json rows = Json::array();
        std::istringstream in(f.data);
        std::string line;
        std::getline(in, line);
        std::vector<std::string> cols;
        for (std::stringstream ss(line); std::getline(ss, line, ',');) cols.push_back(line);
        Json table;
        for (const auto& c : cols) table[c] = Json::array();
        while (std::getline(in, line)) {
            std::stringstream ss(line);
            for (const auto& c : cols) {
                std::string cell;
                std::getline(ss, cell, ',');
                table[c].push_back(std::strtod(cell.c_str(), nullptr));
            }
        }
        doc["data"] = table;
        fs::path p = out;
        write_file(p.replace_extension(".json"), cli::dump_json(doc));
        return;
    }
    fs::path side = out;
    side.replace_extension(".json");
    write_file(out, f.data);
    write_file(side, cli::dump_json(f.sidecar));
}

int run_curve(CurveOpts o, const Global& g) {
    if (o.out.empty()) {
        char name[64];
        std::snprintf(name, sizeof name, "curve_%s_p%g.csv", o.kind.c_str(), o.p);
        o.out = name;
    }
    const CurveFiles f = build_curve(o, g);
    write_curve(f, o.out, g);
    std::printf("theta extrema %zu, energy extrema %zu", f.sidecar["theta_extrema"].size(), f.sidecar["energy_extrema"].size());
    if (f.sidecar.contains("self_intersections")) std::printf(", self-intersections %zu", f.sidecar["self_intersections"].size());
    std::printf("\n");
    return kOk;
}

// every data file behind the figures on Theta, energy and the (mass, energy) trace
int run_figures(const std::string& dir, const Global& g) {
    struct Fig {
        const char* stem;
        const char* kind;
        double p;
    };
    const Fig figs[] = {{"theta_p4", "theta", 4},      {"theta_p6", "theta", 6},         {"theta_p8", "theta", 8},
                        {"theta_p2.5", "theta", 2.5}, {"energy_p4", "energy", 4},       {"energy_p4.4", "energy", 4.4},
                        {"energy_p6", "energy", 6},    {"parametric_p4.5", "parametric", 4.5},
                        {"parametric_p5.2", "parametric", 5.2}, {"parametric_p5.8", "parametric", 5.8}};
    for (const auto& fig : figs) {
        CurveOpts o;
        o.kind = fig.kind;
        o.p = fig.p;
        const CurveFiles f = build_curve(o, g);
        Global csv = g;
        csv.format = "csv";
        write_curve(f, fs::path(dir) / (std::string(fig.stem) + ".csv"), csv);
        std::printf("%s.csv\n", fig.stem);
    }
    return kOk;
}

// ---- claims

struct ClaimsOpts {
    std::vector<double> ps{2.5, 3, 4, 6, 8, 11};
    int density = 200;
    std::string out;
    double corrupt_f2 = 0.0;
};

int run_claims_cmd(ClaimsOpts o, const Global& g) {
    if (o.out.empty()) o.out = g.format == "csv" ? "claims.csv" : "claims.json";
    Json doc = envelope("claims", g, Json{{"p", o.ps}, {"density", o.density}, {"corrupt_f2", o.corrupt_f2}});
    Json reports = Json::array();
    std::string csv = "claim_id,p,grid_spec,worst_value,worst_point,pass\n";
    bool all = true;
    for (double p : o.ps) {
        for (const GridReport& r : run_claims(p, {o.density, o.corrupt_f2, g.threads})) {
            all = all && r.pass;
            reports.push_back(cli::to_json(r));
            std::string pt;
            for (double v : r.worst_point) pt += (pt.empty() ? "" : ";") + fmt17(v);
            csv += r.claim_id + "," + fmt17(r.p) + ",\"" + r.grid_spec + "\"," + fmt17(r.worst_value) + "," + pt + "," +
                   (r.pass ? "true" : "false") + "\n";
            std::printf("%-24s p=%-5g worst=%-24s %s\n", r.claim_id.c_str(), r.p, fmt17(r.worst_value).c_str(), r.pass ? "pass" : "FAIL");
        }
    }
    doc["reports"] = reports;
    doc["all_pass"] = all;
    write_file(o.out, g.format == "csv" ? csv : cli::dump_json(doc));
    return all ? kOk : kClaimFailure;
}

// ---- probe

struct ProbeOpts {
    double p = 0.0, lambda = 1.0, ell = 0.0, eps = 0.0, h = 1e-3;
    std::string regime = "large", cutoff = "bump", out;
};

int run_probe(ProbeOpts o, const Global& g) {
    if (o.out.empty()) o.out = g.format == "csv" ? "probe.csv" : "probe.json";
    PathSpec spec;
    spec.regime = o.regime == "small" ? Regime::small_ell : Regime::large_ell;
    spec.cutoff = o.cutoff == "cosine" ? Cutoff::cosine : Cutoff::bump;
    spec.eps = o.eps;
    spec.h = o.h;
    const ProbeReport r = second_derivative({o.p, o.lambda, o.ell}, spec);
    Json doc = envelope("probe", g,
                        Json{{"p", o.p}, {"lambda", o.lambda}, {"ell", o.ell}, {"regime", o.regime}, {"eps", o.eps}, {"h", o.h}, {"cutoff", o.cutoff}});
    doc["report"] = cli::to_json(r);
    if (g.format == "csv") {
        std::string csv = "t,energy\n";
        for (const auto& [t, e] : r.energies) csv += csv_row({t, e});
        write_file(o.out, csv);
        fs::path side(o.out);
        write_file(side.replace_extension(".json"), cli::dump_json(doc));
    } else {
        write_file(o.out, cli::dump_json(doc));
    }
    std::printf("d2E/dt2 = %s (prediction %s, gap %.3g): %s\n", fmt17(r.second_derivative_fd).c_str(),
                fmt17(r.asymptotic_prediction).c_str(), r.relative_gap, r.verdict.c_str());
    return kOk;
}

void apply_env_tolerance() {
    const char* env = std::getenv("TGRAPH_NLS_TOL");
    if (!env || !*env) return;
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || errno != 0 || !(v > 0.0)) throw UsageError("TGRAPH_NLS_TOL must be a positive number");
    set_default_tolerance(v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positive stationary states of the NLS equation on the T-graph"};
    app.set_config("--config", "", "Read default flag values from a key=value file");
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--threads", g.threads, "Worker cap (0 = hardware concurrency)")->check(CLI::NonNegativeNumber);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--tol", g.tol, "Global quadrature tolerance (overrides TGRAPH_NLS_TOL)")->check(CLI::PositiveNumber);

    SolveOpts so;
    auto* solve = app.add_subcommand("solve", "Enumerate, reconstruct and verify every positive solution");
    solve->add_option("--p", so.p, "Exponent (> 2)")->required();
    solve->add_option("--lambda", so.lambda, "Frequency");
    solve->add_option("--ell", so.ell, "Terminal-edge length")->required();
    solve->add_option("--samples", so.samples, "Profile samples on e3")->check(CLI::Range(2, 1000000));
    solve->add_option("--out", so.out, "Output directory");
    solve->add_flag("!--no-profiles", so.profiles, "Skip per-state profile CSVs");

    CurveOpts co;
    auto* curve = app.add_subcommand("curve", "Ground-state mass/energy curves over a lambda grid");
    curve->add_option("kind", co.kind, "theta, energy or parametric")->required()->check(CLI::IsMember({"theta", "energy", "parametric"}));
    curve->add_option("--p", co.p, "Exponent (> 2)")->required();
    curve->add_option("--lambda-min", co.lambda_min);
    curve->add_option("--lambda-max", co.lambda_max);
    curve->add_option("--n", co.n, "Grid points (log spaced)");
    curve->add_option("--out", co.out, "Output CSV (sidecar JSON next to it)");
    curve->add_option("--dual-mass", co.dual_mass, "'auto' or a mass: list every lambda with that ground-state mass");

    std::string fig_dir = "figures";
    auto* figures = app.add_subcommand("figures", "Write every figure data file");
    figures->add_option("--out", fig_dir, "Output directory");

    ClaimsOpts clo;
    auto* claims = app.add_subcommand("claims", "Grid checks of the sign claims");
    claims->add_option("--p", clo.ps, "Exponents")->delimiter(',');
    claims->add_option("--density", clo.density, "Grid points per axis")->check(CLI::Range(50, 100000));
    claims->add_option("--out", clo.out);
    claims->add_option("--corrupt-f2", clo.corrupt_f2)->group("");  // test hook

    ProbeOpts po;
    auto* probe = app.add_subcommand("probe", "Second derivative of the energy along a mass-preserving path");
    probe->set_help_flag("--help", "Print this help message and exit");  // frees the name h for the step
    probe->add_option("--p", po.p)->required();
    probe->add_option("--lambda", po.lambda);
    probe->add_option("--ell", po.ell)->required();
    probe->add_option("--regime", po.regime)->check(CLI::IsMember({"large", "small"}));
    probe->add_option("--eps", po.eps, "Cutoff half-width (0 = ell^-2)");
    probe->add_option("--h", po.h, "Finite-difference step");
    probe->add_option("--cutoff", po.cutoff)->check(CLI::IsMember({"bump", "cosine"}));
    probe->add_option("--out", po.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        apply_env_tolerance();
        if (g.tol > 0.0) set_default_tolerance(g.tol);
        if (g.threads > 0) set_max_threads(g.threads);
        if (g.format.empty()) g.format = curve->parsed() ? "csv" : "json";
        if (solve->parsed()) return run_solve(so, g);
        if (curve->parsed()) return run_curve(co, g);
        if (figures->parsed()) return run_figures(fig_dir, g);
        if (claims->parsed()) return run_claims_cmd(clo, g);
        if (probe->parsed()) return run_probe(po, g);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const NonconvergenceError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kNumeric;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kNumeric;
    }
    return kUsage;
}
