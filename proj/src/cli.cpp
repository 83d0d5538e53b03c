#include "qlsa/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <optional>
#include <ostream>

#include "json.hpp"
#include "qlsa/advantage.hpp"
#include "qlsa/classical_baselines.hpp"
#include "qlsa/config.hpp"
#include "qlsa/errors.hpp"
#include "qlsa/grid_io.hpp"
#include "qlsa/hs1_circuit.hpp"
#include "qlsa/kernels.hpp"
#include "qlsa/rng.hpp"
#include "qlsa/sparse.hpp"
#include "qlsa/trotter_lab.hpp"

namespace qlsa::cli {
namespace {

using nlohmann::json;

struct Common {
    std::string config;
    std::vector<std::string> sets;
    std::string out;
    std::string format = "csv";
    std::uint64_t seed = 1;
};

Config load(const Common& c)
{
    if (c.config.empty()) return parse_config("", c.sets);
    return load_config(c.config, c.sets);
}

GridFormat grid_format(const std::string& f)
{
    if (f == "csv") return GridFormat::Csv;
    if (f == "json") return GridFormat::Json;
    throw ValidationError("--format", "expected csv or json");
}

template <class T>
json opt_json(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

json point_json(const ComparisonPoint& p)
{
    json j;
    j["problem"] = {{"n", p.problem.n},
                    {"N", p.problem.matrix_size()},
                    {"kappa", p.problem.kappa},
                    {"s", p.problem.s},
                    {"epsilon", p.problem.epsilon},
                    {"r_bits", p.problem.r_bits},
                    {"oracle_model", std::string(to_string(p.problem.oracle_model))}};
    j["feasible"] = p.feasible();
    if (p.quantum) {
        const auto& q = *p.quantum;
        j["quantum"] = {{"t_count", q.logical.t_count},
                        {"n_hs1", q.logical.n_hs1},
                        {"queries", q.logical.queries},
                        {"logical_qubits", q.logical.n_logical},
                        {"protocol", std::string(to_string(q.scheme.distillation))},
                        {"blocks", q.scheme.n_distill_blocks},
                        {"data_block", std::string(to_string(q.scheme.data_block))},
                        {"d", q.scheme.code_distance},
                        {"physical_qubits", q.physical.n_physical_qubits},
                        {"cycles_per_t", q.physical.cycles_per_t},
                        {"runtime_s", q.physical.runtime_s},
                        {"energy_j", q.energy.joules},
                        {"watts", q.energy.watts}};
    } else {
        j["quantum"] = nullptr;
        j["infeasible_reason"] = p.infeasible_reason;
    }
    j["classical"] = {{"method", std::string(to_string(p.classical.method))},
                      {"machine", p.classical.machine},
                      {"flops", p.classical.flops},
                      {"runtime_s", p.classical.runtime_s},
                      {"energy_j", opt_json(p.classical.joules)}};
    j["runtime_ratio"] = opt_json(p.runtime_ratio);
    j["energy_ratio"] = opt_json(p.energy_ratio);
    return j;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << text;
    if (!f) throw IoError("failed writing " + path);
}

// ---- subcommands ----------------------------------------------------------

int cmd_estimate(const Common& c, std::ostream& out)
{
    const Config cfg = load(c);
    const ComparisonPoint p = compare(cfg, cfg.problem);
    const std::string text = point_json(p).dump(2) + "\n";
    if (!c.out.empty()) write_text(c.out, text);
    out << text;
    if (!p.feasible()) return kInfeasible;
    return kOk;
}

int cmd_sweep(const Common& c, std::ostream& out)
{
    const Config cfg = load(c);
    const auto points = sweep_grid(cfg);
    const std::string path = c.out.empty() ? "sweep." + c.format : c.out;
    write_grid(path, to_rows(points), grid_format(c.format));
    const auto feasible = std::count_if(points.begin(), points.end(), [](const auto& p) { return p.feasible(); });
    const auto advantage = std::count_if(points.begin(), points.end(),
                                         [](const auto& p) { return p.runtime_ratio && *p.runtime_ratio > 1.0; });
    out << fmt::format("sweep: {} cells, {} feasible, {} with runtime ratio > 1; wrote {}\n", points.size(), feasible,
                       advantage, path);
    return kOk;
}

int cmd_crossover(const Common& c, const std::string& metric_name, const std::string& axis_name, std::ostream& out)
{
    const Config cfg = load(c);
    const auto metric = parse_metric(metric_name);
    if (!metric) throw ValidationError("--metric", "expected runtime or energy");
    const auto axis = parse_axis_name(axis_name);
    if (!axis) throw ValidationError("--axis", "expected n, kappa, s or epsilon");
    const CrossoverResult res = find_crossover(cfg, *axis, *metric);

    if (!c.out.empty()) {
        const GridFormat f = grid_format(c.format);
        std::string text;
        if (f == GridFormat::Csv) {
            text = fmt::format("{},ratio\n", to_string(*axis));
            for (const auto& s : res.curve) text += fmt::format("{},{}\n", s.x, s.ratio ? fmt::format("{}", *s.ratio) : "");
        } else {
            json j;
            j["axis"] = std::string(to_string(*axis));
            j["metric"] = std::string(to_string(*metric));
            j["curve"] = json::array();
            for (const auto& s : res.curve) j["curve"].push_back({{"x", s.x}, {"ratio", opt_json(s.ratio)}});
            j["crossings"] = json::array();
            for (const auto& x : res.crossings) {
                j["crossings"].push_back({{"lo", x.lo}, {"hi", x.hi}, {"value", x.value}, {"rising", x.rising}});
            }
            text = j.dump(2) + "\n";
        }
        write_text(c.out, text);
    }

    if (!res.found()) {
        out << fmt::format("{} crossover along {}: none (ratio never crosses 1)\n", to_string(*metric), to_string(*axis));
        return kOk;
    }
    for (const auto& x : res.crossings) {
        out << fmt::format("{} crossover along {}: between {} and {}, at {:.4g} ({})\n", to_string(*metric), to_string(*axis),
                           x.lo, x.hi, x.value, x.rising ? "classical/quantum rises through 1" : "falls through 1");
    }
    return kOk;
}

int cmd_surface_opt(const Common& c, std::uint64_t logical_qubits, double t_count, std::ostream& out)
{
    const Config cfg = load(c);
    const auto hw = effective_quantum_hw(cfg);
    const auto best = optimize_scheme(logical_qubits, t_count, hw);
    json j{{"protocol", std::string(to_string(best.scheme.distillation))},
           {"blocks", best.scheme.n_distill_blocks},
           {"data_block", std::string(to_string(best.scheme.data_block))},
           {"d", best.scheme.code_distance},
           {"qubits", best.resources.n_physical_qubits},
           {"runtime_s", best.resources.runtime_s},
           {"cycles_per_t", best.resources.cycles_per_t},
           {"volume", best.resources.spacetime_volume}};
    const std::string text = j.dump(2) + "\n";
    if (!c.out.empty()) write_text(c.out, text);
    out << text;
    return kOk;
}

template <class T>
std::vector<T> parse_list(const std::string& text, const char* flag)
{
    std::vector<T> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(start, comma - start);
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(static_cast<T>(v));
        } catch (const std::exception&) {
            throw ValidationError(flag, "invalid list entry '" + item + "'");
        }
        start = comma + 1;
    }
    return out;
}

int cmd_verify_trotter(const Common& c, const std::string& dims_s, const std::string& times_s, int terms, int samples,
                       std::ostream& out)
{
    const auto dims = parse_list<Eigen::Index>(dims_s, "--dims");
    const auto times = parse_list<double>(times_s, "--times");
    const auto recs = ete_sweep(dims, times, terms, samples, c.seed);
    std::string csv = "seed_index,dim,t,ete,bound\n";
    std::size_t violations = 0;
    for (const auto& r : recs) {
        csv += fmt::format("{},{},{},{},{}\n", r.seed_index, r.dim, r.t, r.ete, r.bound);
        if (r.ete > r.bound + 1e-9) ++violations;
    }
    const std::string path = c.out.empty() ? "trotter.csv" : c.out;
    write_text(path, csv);
    for (Eigen::Index d : dims) {
        for (double t : times) {
            std::vector<double> v;
            for (const auto& r : recs) {
                if (r.dim == d && r.t == t) v.push_back(r.ete);
            }
            out << fmt::format("dim={} t={}: ete q50={:.4g} q90={:.4g} q99={:.4g} max={:.4g}\n", d, t,
                               empirical_quantile(v, 0.5), empirical_quantile(v, 0.9), empirical_quantile(v, 0.99),
                               *std::max_element(v.begin(), v.end()));
        }
    }
    out << fmt::format("{}: {} of {} samples within the commutator bound; wrote {}\n", violations ? "FAIL" : "PASS",
                       recs.size() - violations, recs.size(), path);
    return violations ? kVerifyFailed : kOk;
}

int cmd_verify_cgne(const Common& c, const std::string& dims_s, const std::string& kappas_s, int per_cell, double eps,
                    std::ostream& out)
{
    const auto dims = parse_list<std::int64_t>(dims_s, "--dims");
    const auto kappas = parse_list<double>(kappas_s, "--kappas");
    std::string csv = "seed,dim,s,kappa,iterations,bound,counted_flops,residual\n";
    std::size_t failures = 0, total = 0;
    std::uint64_t index = 0;
    for (auto dim : dims) {
        for (double kappa : kappas) {
            for (int i = 0; i < per_cell; ++i, ++index) {
                const std::uint64_t seed = derive_seed(c.seed, index);
                const std::uint64_t s = std::uint64_t{4} << (index % 2);  // 4 or 8
                const SparseSystem sys = generate_spd_system(dim, s, kappa, seed);
                const CgneResult r = cgne_solve(sys, eps);
                const double bound = cg_iteration_bound(kappa, eps);
                const double expected = static_cast<double>(r.iterations) *
                                        cg_flops_per_iteration(static_cast<double>(dim), static_cast<double>(s));
                const bool ok = static_cast<double>(r.iterations) <= std::ceil(bound) && r.relative_error <= eps &&
                                r.counted_flops == expected;
                failures += ok ? 0 : 1;
                ++total;
                csv += fmt::format("{},{},{},{},{},{},{},{}\n", seed, dim, s, kappa, r.iterations, bound, r.counted_flops,
                                   r.relative_error);
            }
        }
    }
    const std::string path = c.out.empty() ? "cgne.csv" : c.out;
    write_text(path, csv);
    out << fmt::format("{}: {} of {} systems converged within the iteration bound with exact FLOP counts "
                       "(kernels: {}); wrote {}\n",
                       failures ? "FAIL" : "PASS", total - failures, total, kernels::to_string(kernels::active_isa()), path);
    return failures ? kVerifyFailed : kOk;
}

int cmd_verify_circuit(const Common& c, IndexRange n, IndexRange r, std::uint32_t tpr, std::ostream& out)
{
    const auto checks = verify_circuits(n, r, tpr);
    std::string csv = "n,r,t_count,cnot_count,s_count,h_count,queries,ok\n";
    std::size_t bad = 0;
    for (const auto& chk : checks) {
        const auto& g = chk.counted.gates;
        csv += fmt::format("{},{},{},{},{},{},{},{}\n", chk.n, chk.r, g.t_count, g.cnot_count, g.s_count, g.h_count,
                           chk.counted.queries, chk.ok ? "true" : "false");
        if (!chk.ok) {
            ++bad;
            out << "mismatch " << describe_mismatch(chk) << "\n";
        }
    }
    if (!c.out.empty()) write_text(c.out, csv);
    out << fmt::format("{}: {} of {} (n, r) pairs match the closed-form gate counts\n", bad ? "FAIL" : "PASS",
                       checks.size() - bad, checks.size());
    return bad ? kVerifyFailed : kOk;
}

IndexRange parse_range(const std::string& text, const char* flag)
{
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const auto v = static_cast<std::uint32_t>(std::stoul(text));
            return {v, v};
        }
        return {static_cast<std::uint32_t>(std::stoul(text.substr(0, colon))),
                static_cast<std::uint32_t>(std::stoul(text.substr(colon + 1)))};
    } catch (const std::exception&) {
        throw ValidationError(flag, "expected LO:HI, got '" + text + "'");
    }
}

void add_common(CLI::App* sub, Common& c, bool with_format)
{
    sub->add_option("--config", c.config, "Configuration file (TOML subset)");
    sub->add_option("--set", c.sets, "Override a configuration key, section.key=value (repeatable)");
    sub->add_option("--out", c.out, "Output file");
    if (with_format) sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err)
{
    // `verify trotter` is the same as `verify-trotter`.
    std::vector<std::string> args = raw_args;
    if (args.size() >= 2 && args[0] == "verify") {
        args[1] = "verify-" + args[1];
        args.erase(args.begin());
    }

    CLI::App app{"Resource estimator for quantum and classical linear-system solvers", "qlsa-est"};
    app.require_subcommand(1);
    Common c;
    std::string metric = "runtime", axis = "n";
    std::uint64_t logical_qubits = 100;
    double t_count = 1e10;
    std::string dims_trotter = "4,16,64", times = "0.01,0.05,0.1";
    int terms = 4, samples = 50;
    std::string dims_cgne = "64,256", kappas = "10,50,100";
    int per_cell = 3;
    double cg_eps = 0.01;
    std::string n_range = "1:32", r_range = "1:16";
    std::uint32_t tpr = 15;

    auto* estimate = app.add_subcommand("estimate", "Quantum and classical estimate for [problem]");
    add_common(estimate, c, false);
    auto* sweep = app.add_subcommand("sweep", "Evaluate every cell of [sweep] and write a grid");
    add_common(sweep, c, true);
    auto* crossover = app.add_subcommand("crossover", "Locate where classical/quantum cost ratio crosses 1");
    add_common(crossover, c, true);
    crossover->add_option("--metric", metric, "runtime or energy")->capture_default_str();
    crossover->add_option("--axis", axis, "n, kappa, s or epsilon")->capture_default_str();
    auto* surface = app.add_subcommand("surface-opt", "Optimize a surface-code scheme for given logical resources");
    add_common(surface, c, false);
    surface->add_option("--logical-qubits", logical_qubits, "Logical qubit count")->capture_default_str();
    surface->add_option("--t-count", t_count, "Total T count")->capture_default_str();
    auto* vtrot = app.add_subcommand("verify-trotter", "Trotter error against the commutator bound");
    add_common(vtrot, c, false);
    vtrot->add_option("--dims", dims_trotter, "Comma-separated dimensions")->capture_default_str();
    vtrot->add_option("--times", times, "Comma-separated time steps")->capture_default_str();
    vtrot->add_option("--terms", terms, "Terms per decomposition")->capture_default_str();
    vtrot->add_option("--samples", samples, "Samples per (dim, t)")->capture_default_str();
    auto* vcg = app.add_subcommand("verify-cgne", "CGNE iterations and FLOP counts on random SPD systems");
    add_common(vcg, c, false);
    vcg->add_option("--dims", dims_cgne, "Comma-separated dimensions")->capture_default_str();
    vcg->add_option("--kappas", kappas, "Comma-separated condition numbers")->capture_default_str();
    vcg->add_option("--per-cell", per_cell, "Systems per (dim, kappa)")->capture_default_str();
    vcg->add_option("--epsilon", cg_eps, "Target relative error")->capture_default_str();
    auto* vcirc = app.add_subcommand("verify-circuit", "Symbolic circuit gate counts against closed forms");
    add_common(vcirc, c, false);
    vcirc->add_option("--n", n_range, "Register sizes LO:HI")->capture_default_str();
    vcirc->add_option("--r", r_range, "Precision bits LO:HI")->capture_default_str();
    vcirc->add_option("--t-per-rotation", tpr, "T gates per rotation")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (estimate->parsed()) return cmd_estimate(c, out);
        if (sweep->parsed()) return cmd_sweep(c, out);
        if (crossover->parsed()) return cmd_crossover(c, metric, axis, out);
        if (surface->parsed()) return cmd_surface_opt(c, logical_qubits, t_count, out);
        if (vtrot->parsed()) return cmd_verify_trotter(c, dims_trotter, times, terms, samples, out);
        if (vcg->parsed()) return cmd_verify_cgne(c, dims_cgne, kappas, per_cell, cg_eps, out);
        if (vcirc->parsed()) {
            return cmd_verify_circuit(c, parse_range(n_range, "--n"), parse_range(r_range, "--r"), tpr, out);
        }
    } catch (const InfeasibleError& e) {
        err << "infeasible (" << e.constraint() << "): " << e.what() << "\n";
        return kInfeasible;
    } catch (const ParseError& e) {
        err << "config parse error: " << e.what() << "\n";
        return kInvalid;
    } catch (const ValidationError& e) {
        err << "invalid value: " << e.what() << "\n";
        return kInvalid;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}

}  // namespace qlsa::cli
