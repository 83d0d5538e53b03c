#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

#include "qlsa/model.hpp"
#include "qlsa/sparse.hpp"

namespace qlsa {

struct ClassicalResources {
    double flops = 0;
    std::optional<double> iterations;  // CG only
    double runtime_s = 0;
    ClassicalMethod method = ClassicalMethod::CG;
    ClassicalHardwareProfile machine;
};

/// 0.5 kappa log(2/eps), natural log unless another base is asked for.
double cg_iteration_bound(double kappa, double epsilon, LogBase base = LogBase::Natural);

/// Per-iteration cost 4Ns + 14N: two mat-vecs, three vector updates and the
/// inner products behind alpha and beta.
double cg_flops_per_iteration(double n_dim, double s);

double cg_flops(const ProblemInstance& p, LogBase base = LogBase::Natural);

/// N(3s^2 + 7s + 5).
double cholesky_flops(double n_dim, double s);
/// Same count summed step by step: N s(s+1) + N s + N(1 + s + 2s^2) + 4N(1+s).
double cholesky_flops_steps(double n_dim, double s);

double effective_flops_per_second(const ClassicalHardwareProfile& m);
double classical_runtime(double flops, const ClassicalHardwareProfile& m);

ClassicalResources classical_resources(const ProblemInstance& p, const ClassicalHardwareProfile& m,
                                       ClassicalMethod method, LogBase base = LogBase::Natural);

struct CgneResult {
    Eigen::VectorXd x;
    std::uint64_t iterations = 0;
    double counted_flops = 0;
    double relative_error = 0;  // against the direct solution
    std::uint64_t iteration_limit = 0;
};

/// CGNE (Craig's method) from x = 0. Stops once ||x - x*|| / ||x*|| <= eps,
/// where x* comes from a sparse direct factorization. Throws DivergenceError
/// after 10x the iteration bound.
CgneResult cgne_solve(const SparseSystem& sys, double epsilon);

/// Direct solution used as the reference.
Eigen::VectorXd direct_solve(const SparseSystem& sys);

}  // namespace qlsa
