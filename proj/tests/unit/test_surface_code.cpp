#include <gtest/gtest.h>

#include <cmath>

#include "qlsa/errors.hpp"
#include "qlsa/surface_code.hpp"

using namespace qlsa;

namespace {

// Straight scan with the error model spelled out again.
std::uint32_t oracle_distance(double p, double tiles, double cycles, double share)
{
    for (std::uint32_t d = 3; d < 200; d += 2) {
        if (tiles * cycles * d * 0.1 * std::pow(100 * p, (d + 1) / 2) < share) return d;
    }
    return 0;
}

QuantumHardwareProfile hw_with(double p, std::optional<std::uint64_t> budget = std::nullopt)
{
    QuantumHardwareProfile hw;
    hw.p_phys = p;
    hw.qubit_budget = budget;
    return hw;
}

}  // namespace

TEST(SurfaceCode, ProtocolTables)
{
    const auto& d = distillation_protocols();
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d[0].tiles, 11u);
    EXPECT_EQ(d[0].production_cycles, 11.0);
    EXPECT_EQ(d[1].tiles, 44u);
    EXPECT_EQ(d[1].production_cycles, 9.27);
    EXPECT_EQ(d[2].tiles, 176u);
    EXPECT_EQ(d[2].production_cycles, 5.5);
    EXPECT_DOUBLE_EQ(d[0].output_error(1e-4), 35e-12);
    EXPECT_DOUBLE_EQ(d[1].output_error(1e-4), 4.125e-16);
    EXPECT_DOUBLE_EQ(d[2].output_error(1e-4), 1.5e-28);
    EXPECT_EQ(to_string(DistillationKind::P116_12), "116-to-12");
    EXPECT_EQ(to_string(DataBlockKind::Intermediate), "intermediate");
}

TEST(SurfaceCode, DataBlockTiles)
{
    const auto& compact = data_block_protocol(DataBlockKind::Compact);
    const auto& inter = data_block_protocol(DataBlockKind::Intermediate);
    const auto& fast = data_block_protocol(DataBlockKind::Fast);
    EXPECT_EQ(compact.consumption_cycles, 9u);
    EXPECT_EQ(inter.consumption_cycles, 5u);
    EXPECT_EQ(fast.consumption_cycles, 1u);
    EXPECT_EQ(fast.tiles(100), 230u);
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        ASSERT_EQ(compact.tiles(n), static_cast<std::uint64_t>(std::ceil(1.5 * n)) + 3);
        ASSERT_EQ(inter.tiles(n), 2 * n + 4);
        ASSERT_EQ(fast.tiles(n), 2 * n + static_cast<std::uint64_t>(std::ceil(std::sqrt(8.0 * n))) + 1);
    }
}

TEST(SurfaceCode, LogicalErrorRate)
{
    EXPECT_DOUBLE_EQ(logical_error_rate(1e-3, 3), 0.1 * 0.01);
    EXPECT_DOUBLE_EQ(logical_error_rate(1e-4, 13), 0.1 * 1e-14);
    EXPECT_THROW(logical_error_rate(1e-2, 3), InfeasibleError);
    EXPECT_THROW(logical_error_rate(1e-4, 4), PreconditionError);
    EXPECT_THROW(logical_error_rate(1e-4, 1), PreconditionError);
    for (std::uint32_t d = 3; d < 40; d += 2) {
        EXPECT_LT(logical_error_rate(1e-4, d + 2), logical_error_rate(1e-4, d));
        EXPECT_LT(logical_error_rate(1e-4, d), logical_error_rate(2e-4, d));
    }
}

TEST(SurfaceCode, SelectDistillation)
{
    EXPECT_EQ(select_distillation(1e-5, 1e10, 0.005).kind, DistillationKind::P15_1);
    EXPECT_EQ(select_distillation(1e-4, 1e4, 0.005).kind, DistillationKind::P15_1);
    EXPECT_EQ(select_distillation(1e-4, 1e12, 0.005).kind, DistillationKind::P116_12);
    EXPECT_EQ(select_distillation(1e-3, 1e12, 0.005).kind, DistillationKind::P225_1);
    try {
        select_distillation(5e-3, 1e15, 0.005);
        FAIL();
    } catch (const InfeasibleError& e) {
        EXPECT_EQ(e.constraint(), "distillation");
    }
}

TEST(SurfaceCode, RequiredDistance)
{
    EXPECT_EQ(required_code_distance(1e-4, 164, 11e8, 0.01), 13u);
    EXPECT_EQ(required_code_distance(1e-5, 1, 1, 0.01), 3u);
    for (double p : {1e-5, 1e-4, 1e-3, 5e-3}) {
        for (double cycles : {1e3, 1e8, 1e14}) {
            const auto want = oracle_distance(p, 500, cycles, 0.005);
            if (want == 0 || want > kMaxCodeDistance) {
                EXPECT_THROW(required_code_distance(p, 500, cycles, 0.005), InfeasibleError);
            } else {
                EXPECT_EQ(required_code_distance(p, 500, cycles, 0.005), want) << p << " " << cycles;
            }
        }
    }
    EXPECT_THROW(required_code_distance(9.99e-3, 1e6, 1e20, 1e-6), InfeasibleError);
}

TEST(SurfaceCode, SchemeMetrics)
{
    const auto hw = hw_with(1e-4);
    const SurfaceCodeScheme fast{DistillationKind::P116_12, 10, DataBlockKind::Fast, 13};
    const auto r = scheme_metrics(fast, 100, 1e9, hw);
    EXPECT_EQ(r.n_tiles_total, 670u);
    EXPECT_EQ(r.n_physical_qubits, 113230u);
    EXPECT_EQ(r.cycles_per_t, 1.0);
    EXPECT_DOUBLE_EQ(r.runtime_s, 1e9 * 1e-8);
    EXPECT_DOUBLE_EQ(r.spacetime_volume, 113230.0 * r.runtime_s);

    const SurfaceCodeScheme compact{DistillationKind::P15_1, 1, DataBlockKind::Compact, 5};
    const auto c = scheme_metrics(compact, 10, 1e8, hw);
    EXPECT_EQ(c.cycles_per_t, 11.0);  // one factory is slower than the data block
    EXPECT_EQ(c.n_tiles_total, 18u + 11u);
    EXPECT_EQ(c.n_physical_qubits, 29u * 25u);

    EXPECT_THROW(scheme_metrics({DistillationKind::P15_1, 0, DataBlockKind::Fast, 3}, 10, 1, hw), PreconditionError);
    EXPECT_THROW(scheme_metrics({DistillationKind::P15_1, 1, DataBlockKind::Fast, 4}, 10, 1, hw), PreconditionError);
}

TEST(SurfaceCode, UnconstrainedUsesFastAndMatchedFactories)
{
    const auto hw = hw_with(1e-5);
    const auto best = optimize_scheme(100, 1e10, hw);
    EXPECT_EQ(best.scheme.data_block, DataBlockKind::Fast);
    EXPECT_EQ(best.scheme.distillation, DistillationKind::P15_1);
    EXPECT_EQ(best.scheme.n_distill_blocks, 11u);
    EXPECT_EQ(best.resources.cycles_per_t, 1.0);
    const double tiles = 230 + 11 * 11;
    EXPECT_EQ(best.scheme.code_distance, oracle_distance(1e-5, tiles, 1e10, 0.005));

    const auto hw4 = hw_with(1e-4);
    for (double t : {1e3, 1e8, 1e12, 1e15}) {
        const auto s = optimize_scheme(64, t, hw4);
        const auto& dist = distillation_protocol(s.scheme.distillation);
        EXPECT_EQ(s.scheme.data_block, DataBlockKind::Fast);
        EXPECT_EQ(s.scheme.n_distill_blocks, static_cast<std::uint32_t>(std::ceil(dist.production_cycles)));
    }
}

TEST(SurfaceCode, SingleTGate)
{
    const auto best = optimize_scheme(10, 1, hw_with(1e-4));
    EXPECT_EQ(best.scheme.code_distance, 3u);
    EXPECT_DOUBLE_EQ(best.resources.runtime_s, best.resources.cycles_per_t * 1e-8);
}

TEST(SurfaceCode, MonotoneInTCount)
{
    const auto hw = hw_with(1e-4);
    OptimizedScheme prev = optimize_scheme(50, 1e3, hw);
    for (double t = 1e4; t <= 1e16; t *= 10) {
        const auto cur = optimize_scheme(50, t, hw);
        EXPECT_GE(cur.scheme.code_distance, prev.scheme.code_distance);
        EXPECT_GE(cur.resources.runtime_s, prev.resources.runtime_s);
        EXPECT_GE(cur.resources.n_physical_qubits, prev.resources.n_physical_qubits);
        prev = cur;
    }
}

TEST(SurfaceCode, LargerBudgetNeverWorse)
{
    const double t = 1e10;
    double prev_volume = INFINITY;
    for (std::uint64_t budget : {40000u, 50000u, 60000u, 80000u, 120000u, 1000000u}) {
        const auto s = optimize_scheme(60, t, hw_with(1e-4, budget));
        EXPECT_LE(s.resources.n_physical_qubits, budget);
        EXPECT_LE(s.resources.spacetime_volume, prev_volume);
        prev_volume = s.resources.spacetime_volume;
    }
}

TEST(SurfaceCode, Infeasible)
{
    try {
        optimize_scheme(100, 1e10, hw_with(1e-4, 1000));
        FAIL();
    } catch (const InfeasibleError& e) {
        EXPECT_EQ(e.constraint(), "qubit_budget");
    }
    EXPECT_THROW(optimize_scheme(100, 1e10, hw_with(1e-2)), InfeasibleError);
    EXPECT_THROW(optimize_scheme(100, 0.5, hw_with(1e-4)), PreconditionError);
}
