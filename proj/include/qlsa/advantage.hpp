#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qlsa/config.hpp"
#include "qlsa/energy.hpp"
#include "qlsa/logical_resources.hpp"
#include "qlsa/surface_code.hpp"

namespace qlsa {

struct QuantumSide {
    LogicalResources logical;
    SurfaceCodeScheme scheme;
    PhysicalResources physical;
    EnergyEstimate energy;

    std::string scheme_summary() const;
};

struct ClassicalSide {
    double flops = 0;
    double runtime_s = 0;
    std::optional<double> joules;  // empty for machines without a power figure
    ClassicalMethod method = ClassicalMethod::CG;
    std::string machine;
};

struct ComparisonPoint {
    ProblemInstance problem;
    std::optional<QuantumSide> quantum;  // empty when no scheme is feasible
    std::string infeasible_reason;
    ClassicalSide classical;
    std::optional<double> runtime_ratio;  // classical / quantum
    std::optional<double> energy_ratio;

    bool feasible() const { return quantum.has_value(); }
};

/// Logical counts, then the surface-code optimizer, then energy. Throws
/// InfeasibleError from the optimizer.
QuantumSide quantum_estimate(const ProblemInstance& p, const QuantumHardwareProfile& hw, const EstimatorOptions& opts = {});

ClassicalSide classical_estimate(const ProblemInstance& p, const ClassicalHardwareProfile& m, ClassicalMethod method,
                                 LogBase base = LogBase::Natural);

/// Both sides for one problem. Infeasible quantum cells are marked, not thrown.
ComparisonPoint compare(const ProblemInstance& p, const QuantumHardwareProfile& hw, const ClassicalHardwareProfile& m,
                        const EstimatorOptions& opts = {});
ComparisonPoint compare(const Config& cfg, const ProblemInstance& p);

struct GridCell {
    std::uint32_t n;
    double kappa;
    std::uint64_t s;
    double epsilon;
};

/// Cells in row-major order over (n, kappa, s, epsilon). A coupled axis
/// follows n and does not add a dimension.
std::vector<GridCell> grid_cells(const Config& cfg);

std::vector<ComparisonPoint> sweep_grid(const Config& cfg);

enum class Metric { Runtime, Energy };
enum class Axis { N, Kappa, S, Epsilon };

std::string_view to_string(Metric m);
std::string_view to_string(Axis a);
std::optional<Metric> parse_metric(std::string_view s);
std::optional<Axis> parse_axis_name(std::string_view s);

struct Crossing {
    double lo = 0;      // last sampled point before the sign change
    double hi = 0;      // first sampled point after it
    double value = 0;   // interpolated (integer axes) or bisected (continuous) location
    bool rising = true;  // ratio goes from below 1 to above 1
};

struct CurveSample {
    double x = 0;
    std::optional<double> ratio;  // empty where the cell is infeasible
};

struct CrossoverResult {
    std::vector<Crossing> crossings;  // every sign change of ratio - 1
    std::vector<CurveSample> curve;

    bool found() const { return !crossings.empty(); }
};

using RatioFn = std::function<std::optional<double>(double)>;

/// Integer axis: evaluates every integer in [lo, hi], brackets each sign
/// change by neighbouring points and interpolates log(ratio) linearly.
CrossoverResult find_crossover_integer(const RatioFn& ratio, std::uint32_t lo, std::uint32_t hi);

/// Continuous axis: samples `samples` log-spaced points in [lo, hi] and
/// bisects each sign change to 1e-3 relative.
CrossoverResult find_crossover_continuous(const RatioFn& ratio, double lo, double hi, int samples = 64,
                                          double rel_tol = 1e-3);

/// Ratio of classical to quantum cost at one value of `axis`, with the rest
/// of the problem taken from the configuration (coupled axes follow n).
RatioFn ratio_function(const Config& cfg, Axis axis, Metric metric);

/// Crossover along an axis of the configured sweep. n scans the integers
/// between the smallest and largest sweep value; other axes use their
/// smallest and largest listed values.
CrossoverResult find_crossover(const Config& cfg, Axis axis, Metric metric);

}  // namespace qlsa
