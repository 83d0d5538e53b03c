#include "qlsa/advantage.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "qlsa/classical_baselines.hpp"
#include "qlsa/errors.hpp"
#include "qlsa/parallel.hpp"

namespace qlsa {

std::string QuantumSide::scheme_summary() const
{
    return fmt::format("{}x{}/{}/d{}", to_string(scheme.distillation), scheme.n_distill_blocks, to_string(scheme.data_block),
                       scheme.code_distance);
}

QuantumSide quantum_estimate(const ProblemInstance& p, const QuantumHardwareProfile& hw, const EstimatorOptions& opts)
{
    QuantumSide q;
    q.logical = total_logical_resources(p, opts);
    const auto opt = optimize_scheme(q.logical.n_logical, q.logical.t_count, hw);
    q.scheme = opt.scheme;
    q.physical = scheme_metrics(opt.scheme, q.logical.n_logical, q.logical.t_count, hw);
    q.energy = quantum_energy(static_cast<double>(q.physical.n_physical_qubits), hw.watts_per_qubit, q.physical.runtime_s);
    return q;
}

ClassicalSide classical_estimate(const ProblemInstance& p, const ClassicalHardwareProfile& m, ClassicalMethod method,
                                 LogBase base)
{
    validate(p);
    const ClassicalResources r = classical_resources(p, m, method, base);
    ClassicalSide c;
    c.flops = r.flops;
    c.runtime_s = r.runtime_s;
    c.method = method;
    c.machine = m.name;
    if (!m.peak_flops) c.joules = classical_energy(r.flops, m).joules;
    return c;
}

ComparisonPoint compare(const ProblemInstance& p, const QuantumHardwareProfile& hw, const ClassicalHardwareProfile& m,
                        const EstimatorOptions& opts)
{
    ComparisonPoint pt;
    pt.problem = p;
    pt.classical = classical_estimate(p, m, opts.method, opts.iteration_log);
    try {
        pt.quantum = quantum_estimate(p, hw, opts);
    } catch (const InfeasibleError& e) {
        pt.infeasible_reason = fmt::format("{}: {}", e.constraint(), e.what());
        return pt;
    }
    pt.runtime_ratio = pt.classical.runtime_s / pt.quantum->physical.runtime_s;
    if (pt.classical.joules) pt.energy_ratio = *pt.classical.joules / pt.quantum->energy.joules;
    return pt;
}

ComparisonPoint compare(const Config& cfg, const ProblemInstance& p)
{
    return compare(p, effective_quantum_hw(cfg), cfg.classical_hw, cfg.options);
}

namespace {

std::vector<double> axis_values(const AxisSpec& axis, double fixed, double n)
{
    switch (axis.kind) {
    case AxisKind::Fixed: return {fixed};
    case AxisKind::Values: return axis.values;
    case AxisKind::Coupled: return {axis.scale * n};
    }
    return {fixed};
}

// Value of a non-swept parameter: coupled axes follow n, anything else is
// taken from [problem].
double follow(const AxisSpec& axis, double fixed, double n)
{
    return axis.kind == AxisKind::Coupled ? axis.scale * n : fixed;
}

std::uint64_t to_count(double v) { return static_cast<std::uint64_t>(std::llround(v)); }

}  // namespace

std::vector<GridCell> grid_cells(const Config& cfg)
{
    const auto& sw = cfg.sweep;
    const auto& p = cfg.problem;
    std::vector<GridCell> cells;
    for (double n : axis_values(sw.n, p.n, p.n)) {
        for (double kappa : axis_values(sw.kappa, p.kappa, n)) {
            for (double s : axis_values(sw.s, static_cast<double>(p.s), n)) {
                for (double eps : axis_values(sw.epsilon, p.epsilon, n)) {
                    cells.push_back(GridCell{static_cast<std::uint32_t>(n), kappa, to_count(s), eps});
                }
            }
        }
    }
    return cells;
}

std::vector<ComparisonPoint> sweep_grid(const Config& cfg)
{
    const auto cells = grid_cells(cfg);
    if (cells.empty()) throw PreconditionError("sweep grid is empty");
    std::vector<ProblemInstance> problems;
    problems.reserve(cells.size());
    for (const auto& c : cells) {
        problems.push_back(cell_problem(cfg, c.n, c.kappa, c.s, c.epsilon));
        validate(problems.back());
    }
    std::vector<ComparisonPoint> out(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) { out[i] = compare(cfg, problems[i]); });
    return out;
}

std::string_view to_string(Metric m) { return m == Metric::Runtime ? "runtime" : "energy"; }

std::string_view to_string(Axis a)
{
    switch (a) {
    case Axis::N: return "n";
    case Axis::Kappa: return "kappa";
    case Axis::S: return "s";
    case Axis::Epsilon: return "epsilon";
    }
    return "n";
}

std::optional<Metric> parse_metric(std::string_view s)
{
    if (s == "runtime") return Metric::Runtime;
    if (s == "energy") return Metric::Energy;
    return std::nullopt;
}

std::optional<Axis> parse_axis_name(std::string_view s)
{
    for (Axis a : {Axis::N, Axis::Kappa, Axis::S, Axis::Epsilon}) {
        if (to_string(a) == s) return a;
    }
    return std::nullopt;
}

namespace {

constexpr double kUnitTol = 1e-12;

int side(double ratio)
{
    const double l = std::log(ratio);
    if (l > kUnitTol) return 1;
    if (l < -kUnitTol) return -1;
    return 0;
}

}  // namespace

CrossoverResult find_crossover_integer(const RatioFn& ratio, std::uint32_t lo, std::uint32_t hi)
{
    if (lo > hi) throw PreconditionError("crossover interval is empty");
    CrossoverResult res;
    std::optional<CurveSample> last;  // last sample strictly off ratio 1
    for (std::uint32_t x = lo; x <= hi; ++x) {
        CurveSample cs{static_cast<double>(x), ratio(x)};
        res.curve.push_back(cs);
        if (!cs.ratio) continue;
        const int sg = side(*cs.ratio);
        if (sg == 0) continue;
        if (last && side(*last->ratio) != sg) {
            const double la = std::log(*last->ratio), lb = std::log(*cs.ratio);
            Crossing c;
            c.lo = last->x;
            c.hi = cs.x;
            c.value = c.lo + (0.0 - la) / (lb - la) * (c.hi - c.lo);
            c.rising = sg > 0;
            res.crossings.push_back(c);
        }
        last = cs;
    }
    return res;
}

CrossoverResult find_crossover_continuous(const RatioFn& ratio, double lo, double hi, int samples, double rel_tol)
{
    if (!(lo > 0 && hi > lo)) throw PreconditionError("continuous crossover needs 0 < lo < hi");
    if (samples < 2) throw PreconditionError("need at least two samples");
    CrossoverResult res;
    std::optional<CurveSample> last;
    for (int i = 0; i < samples; ++i) {
        const double f = static_cast<double>(i) / (samples - 1);
        const double x = i == samples - 1 ? hi : std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo)));
        CurveSample cs{x, ratio(x)};
        res.curve.push_back(cs);
        if (!cs.ratio) continue;
        const int sg = side(*cs.ratio);
        if (sg == 0) continue;
        if (last && side(*last->ratio) != sg) {
            double a = last->x, b = cs.x;
            const int sa = side(*last->ratio);
            while (b - a > rel_tol * b) {
                const double mid = 0.5 * (a + b);
                const auto rm = ratio(mid);
                if (!rm) break;
                const int sm = side(*rm);
                if (sm == 0) {
                    a = b = mid;
                    break;
                }
                (sm == sa ? a : b) = mid;
            }
            res.crossings.push_back(Crossing{last->x, cs.x, 0.5 * (a + b), sg > 0});
        }
        last = cs;
    }
    return res;
}

RatioFn ratio_function(const Config& cfg, Axis axis, Metric metric)
{
    return [cfg, axis, metric](double x) -> std::optional<double> {
        const auto& sw = cfg.sweep;
        const auto& p = cfg.problem;
        const double n = axis == Axis::N ? x : p.n;
        double kappa = follow(sw.kappa, p.kappa, n);
        double s = follow(sw.s, static_cast<double>(p.s), n);
        double eps = follow(sw.epsilon, p.epsilon, n);
        switch (axis) {
        case Axis::N: break;
        case Axis::Kappa: kappa = x; break;
        case Axis::S: s = x; break;
        case Axis::Epsilon: eps = x; break;
        }
        const ProblemInstance prob = cell_problem(cfg, static_cast<std::uint32_t>(std::llround(n)), kappa, to_count(s), eps);
        validate(prob);
        const ComparisonPoint pt = compare(cfg, prob);
        return metric == Metric::Runtime ? pt.runtime_ratio : pt.energy_ratio;
    };
}

CrossoverResult find_crossover(const Config& cfg, Axis axis, Metric metric)
{
    if (metric == Metric::Energy && cfg.classical_hw.peak_flops) {
        throw UnsupportedError(fmt::format("energy crossover needs a frequency-based machine, '{}' has only peak FLOP/s",
                                           cfg.classical_hw.name));
    }
    const RatioFn fn = ratio_function(cfg, axis, metric);
    const AxisSpec* spec = nullptr;
    switch (axis) {
    case Axis::N: spec = &cfg.sweep.n; break;
    case Axis::Kappa: spec = &cfg.sweep.kappa; break;
    case Axis::S: spec = &cfg.sweep.s; break;
    case Axis::Epsilon: spec = &cfg.sweep.epsilon; break;
    }
    if (spec->kind != AxisKind::Values || spec->values.empty()) {
        if (axis == Axis::N) return find_crossover_integer(fn, cfg.problem.n, cfg.problem.n);
        throw PreconditionError(fmt::format("sweep.{} must list values to search for a crossover", to_string(axis)));
    }
    const auto [mn, mx] = std::minmax_element(spec->values.begin(), spec->values.end());
    if (axis == Axis::N) return find_crossover_integer(fn, static_cast<std::uint32_t>(*mn), static_cast<std::uint32_t>(*mx));
    if (*mn == *mx) throw PreconditionError(fmt::format("sweep.{} needs at least two distinct values", to_string(axis)));
    return find_crossover_continuous(fn, *mn, *mx);
}

}  // namespace qlsa
