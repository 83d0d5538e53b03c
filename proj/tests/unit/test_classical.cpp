#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qlsa/classical_baselines.hpp"
#include "qlsa/errors.hpp"
#include "qlsa/kernels.hpp"

using namespace qlsa;

namespace {

ProblemInstance problem(std::uint32_t n, double kappa, std::uint64_t s, double eps)
{
    ProblemInstance p;
    p.n = n;
    p.kappa = kappa;
    p.s = s;
    p.epsilon = eps;
    return p;
}

ClassicalHardwareProfile desktop() { return ClassicalHardwareProfile{}; }

}  // namespace

TEST(CgCost, IterationBound)
{
    EXPECT_NEAR(cg_iteration_bound(100, 0.01), 264.92, 5e-3);
    EXPECT_NEAR(cg_iteration_bound(1, 0.01), 2.649, 5e-4);
    EXPECT_NEAR(cg_iteration_bound(100, 0.01, LogBase::Two), 50 * std::log2(200.0), 1e-12);
    EXPECT_NEAR(cg_iteration_bound(100, 0.01, LogBase::Ten), 50 * std::log10(200.0), 1e-12);
}

TEST(CgCost, Flops)
{
    // 1024 * (16 + 14) * 5 ln 200 = 813,821.6
    const double small = cg_flops(problem(10, 10, 4, 0.01));
    EXPECT_NEAR(small, 1024.0 * 30 * 5 * std::log(200.0), 1e-6);
    EXPECT_NEAR(small, 813822, 1.0);

    const double big = cg_flops(problem(40, 40, 40, 0.01));
    EXPECT_NEAR(big / (1.0995e12 * 174 * 105.97), 1.0, 1e-4);
    EXPECT_NEAR(big, 2.03e16, 0.01e16);

    EXPECT_DOUBLE_EQ(cg_flops(problem(11, 10, 4, 0.01)), 2 * small);
    EXPECT_NEAR(cg_flops(problem(10, 20, 4, 0.01)), 2 * small, 1e-6);
    EXPECT_EQ(cg_flops_per_iteration(1024, 4), 1024.0 * 30);
}

TEST(CholeskyCost, ClosedFormAndSteps)
{
    EXPECT_EQ(cholesky_flops(1000, 10), 375000.0);
    EXPECT_EQ(cholesky_flops(1, 1), 15.0);
    for (double n : {1.0, 7.0, 1024.0, 1e12}) {
        for (double s : {1.0, 2.0, 13.0, 40.0, 1000.0}) {
            EXPECT_NEAR(cholesky_flops_steps(n, s) / cholesky_flops(n, s), 1.0, 1e-14) << n << " " << s;
        }
    }
}

TEST(ClassicalRuntime, Machines)
{
    EXPECT_EQ(classical_runtime(1.012e18, *classical_preset("aurora")), 1.0);
    EXPECT_EQ(classical_runtime(2e16, desktop()), 2e7);
    EXPECT_NEAR(classical_runtime(1e18, *classical_preset("el_capitan_fp64")), 0.3668, 1e-4);
    auto fast = desktop();
    fast.flops_per_cycle = 4;
    EXPECT_EQ(effective_flops_per_second(fast), 4e9);

    const auto cg = classical_resources(problem(10, 10, 4, 0.01), desktop(), ClassicalMethod::CG);
    ASSERT_TRUE(cg.iterations);
    EXPECT_NEAR(*cg.iterations, 5 * std::log(200.0), 1e-12);
    EXPECT_DOUBLE_EQ(cg.runtime_s, cg.flops / 1e9);
    const auto ch = classical_resources(problem(10, 10, 4, 0.01), desktop(), ClassicalMethod::Cholesky);
    EXPECT_FALSE(ch.iterations);
    EXPECT_EQ(ch.flops, cholesky_flops(1024, 4));
}

TEST(SpdSystem, StructureAndSpectrum)
{
    for (auto [dim, s, kappa] : {std::tuple{64, 4, 10.0}, std::tuple{64, 8, 100.0}, std::tuple{32, 32, 3.0}}) {
        const auto sys = generate_spd_system(dim, s, kappa, 5);
        EXPECT_NO_THROW(validate(sys));
        EXPECT_EQ(sys.a.nonZeros(), static_cast<Eigen::Index>(dim * s));
        for (int i = 0; i < dim; ++i) EXPECT_EQ(sys.a.row(i).nonZeros(), static_cast<Eigen::Index>(s));
        EXPECT_NEAR(sys.b.norm(), 1.0, 1e-14);
        const Eigen::MatrixXd dense = sys.a;
        EXPECT_LE((dense - dense.transpose()).norm(), 1e-14);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
        EXPECT_NEAR(es.eigenvalues().minCoeff(), 1.0 / kappa, 1e-10);
        EXPECT_NEAR(es.eigenvalues().maxCoeff(), 1.0, 1e-10);
        EXPECT_EQ(sys.kappa_true, kappa);
    }
    EXPECT_THROW(generate_spd_system(64, 5, 10, 1), PreconditionError);
}

TEST(Cgne, IdentityConvergesInOneStep)
{
    const auto sys = identity_system(128, 3);
    const auto r = cgne_solve(sys, 0.01);
    EXPECT_EQ(r.iterations, 1u);
    EXPECT_LE(r.relative_error, 1e-14);
}

TEST(Cgne, WithinBoundAndExactFlopCount)
{
    const auto sys = generate_spd_system(256, 8, 50, 17);
    const auto r = cgne_solve(sys, 0.01);
    EXPECT_LE(r.iterations, 133u);
    EXPECT_LE(r.relative_error, 0.01);
    EXPECT_LE((r.x - direct_solve(sys)).norm() / direct_solve(sys).norm(), 0.01);
    EXPECT_EQ(r.counted_flops, r.iterations * cg_flops_per_iteration(256, 8));
    EXPECT_EQ(r.iteration_limit, 10u * 133u);
}

TEST(Cgne, DivergesWhenConditionUnderstated)
{
    auto sys = generate_spd_system(256, 8, 1000, 4);
    sys.kappa_true = 1.5;  // limit becomes 10 * ceil(0.75 ln 200) = 40
    EXPECT_THROW(cgne_solve(sys, 1e-6), DivergenceError);
}

TEST(Cgne, Preconditions)
{
    const auto sys = identity_system(16, 1);
    EXPECT_THROW(cgne_solve(sys, 0.0), PreconditionError);
    EXPECT_THROW(cgne_solve(sys, 1.0), PreconditionError);
    const auto huge = identity_system(1 << 15, 1);
    EXPECT_THROW(cgne_solve(huge, 0.1), PreconditionError);
}

TEST(Cgne, SameAnswerUnderEveryIsa)
{
    const auto sys = generate_spd_system(512, 16, 25, 8);
    const auto original = kernels::active_isa();
    kernels::set_isa(kernels::Isa::Scalar);
    const auto ref = cgne_solve(sys, 1e-3);
    for (auto isa : kernels::available_isas()) {
        kernels::set_isa(isa);
        const auto r = cgne_solve(sys, 1e-3);
        EXPECT_EQ(r.iterations, ref.iterations) << kernels::to_string(isa);
        EXPECT_LE((r.x - ref.x).norm(), 1e-9) << kernels::to_string(isa);
    }
    kernels::set_isa(original);
}
