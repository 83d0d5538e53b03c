#include "qlsa/logical_resources.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "qlsa/errors.hpp"

namespace qlsa {
namespace {

constexpr double kPi = std::numbers::pi;

// Extra T gates per HS1 spent finding the coloring (about 200 per register qubit).
constexpr double kColoringTPerQubit = 200.0;

void require_valid(const ProblemInstance& p)
{
    try {
        validate(p);
    } catch (const ValidationError& e) {
        throw PreconditionError(e.what());
    }
}

}  // namespace

Hs1GateCounts hs1_gate_counts(std::uint32_t n, std::uint32_t r, std::uint32_t t_per_rotation)
{
    if (n < 1 || r < 1) throw PreconditionError(fmt::format("hs1_gate_counts needs n >= 1 and r >= 1 (got n={}, r={})", n, r));
    if (t_per_rotation < 1) throw PreconditionError("t_per_rotation must be >= 1");
    const std::uint64_t N = n, R = r, tpr = t_per_rotation;
    return Hs1GateCounts{
        .t_count = 18 * N + 6 * tpr * R + tpr,
        .cnot_count = 22 * N + 4 * R,
        .s_count = 6 * N + 6 * R + 3,
        .h_count = 8 * N + 6 * R + 3,
    };
}

ClockPlan clock_plan(const ProblemInstance& p, CountingMode mode)
{
    require_valid(p);
    const double bound = std::sqrt(80.0 / 3.0) * p.kappa / p.epsilon;
    ClockPlan c;
    c.n_clock = static_cast<std::uint32_t>(std::max(1.0, std::ceil(std::log2(bound))));
    c.t_unitaries = mode == CountingMode::Analytic ? bound : std::ldexp(1.0, static_cast<int>(c.n_clock));
    if (c.t_unitaries < 2.0 * p.kappa + 1.0) {
        throw ConsistencyError(fmt::format("clock size T={} violates T >= 2 kappa + 1", c.t_unitaries));
    }
    return c;
}

TrotterPlan trotter_plan(const ProblemInstance& p, CountingMode mode)
{
    require_valid(p);
    const double bound = (2.0 / p.epsilon + 1.0) * kPi * p.kappa;
    TrotterPlan t;
    t.r_trot = mode == CountingMode::Analytic ? bound : std::ceil(bound);
    const ClockPlan c = clock_plan(p, mode);
    t.t0 = kPi * c.t_unitaries;
    t.t_seg = t.t0 / (c.t_unitaries * t.r_trot);
    return t;
}

double hs1_invocations(const ProblemInstance& p, CountingMode mode)
{
    require_valid(p);
    const double s = static_cast<double>(p.s);
    double n_hs1 = 0;
    if (mode == CountingMode::Analytic) {
        // Product of the two analytic bounds: sqrt(80/3) * 2 * pi, with 2/eps + 1 taken as 2/eps.
        n_hs1 = std::sqrt(320.0 / 3.0) * kPi * p.kappa * p.kappa * s / (p.epsilon * p.epsilon);
    } else {
        n_hs1 = clock_plan(p, mode).t_unitaries * trotter_plan(p, mode).r_trot * s;
    }
    if (p.oracle_model == OracleModel::GraphColoring) n_hs1 *= 6.0 * s;
    return n_hs1;
}

std::uint64_t logical_qubits(const ProblemInstance& p, const ClockPlan& clock, std::uint32_t extra)
{
    return 2ull * p.n + 3ull * p.r_bits + clock.n_clock + extra;
}

LogicalResources total_logical_resources(const ProblemInstance& p, const EstimatorOptions& opts)
{
    require_valid(p);
    LogicalResources lr;
    lr.mode = opts.mode;
    lr.clock = clock_plan(p, opts.mode);
    lr.trotter = trotter_plan(p, opts.mode);
    lr.n_hs1 = hs1_invocations(p, opts.mode);
    lr.per_hs1 = hs1_gate_counts(p.n, p.r_bits, opts.t_per_rotation);

    double t_per = static_cast<double>(lr.per_hs1.t_count);
    if (p.oracle_model == OracleModel::GraphColoring) t_per += kColoringTPerQubit * p.n;

    lr.t_count = lr.n_hs1 * t_per;
    lr.cnot_count = lr.n_hs1 * static_cast<double>(lr.per_hs1.cnot_count);
    lr.s_count = lr.n_hs1 * static_cast<double>(lr.per_hs1.s_count);
    lr.h_count = lr.n_hs1 * static_cast<double>(lr.per_hs1.h_count);
    lr.queries = 2.0 * lr.n_hs1;
    lr.n_logical = logical_qubits(p, lr.clock, opts.extra_logical_qubits);
    return lr;
}

}  // namespace qlsa
