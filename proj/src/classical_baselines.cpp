#include "qlsa/classical_baselines.hpp"

#include <Eigen/SparseCholesky>
#include <cmath>
#include <fmt/format.h>

#include "qlsa/errors.hpp"
#include "qlsa/kernels.hpp"

namespace qlsa {
namespace {

double log_in(double x, LogBase base)
{
    switch (base) {
    case LogBase::Natural: return std::log(x);
    case LogBase::Two: return std::log2(x);
    case LogBase::Ten: return std::log10(x);
    }
    return std::log(x);
}

// Counts FLOPs as the operations run.
struct FlopCounter {
    double n;
    double total = 0;
    void matvec(double nnz) { total += 2.0 * nnz; }
    void vector_update() { total += 2.0 * n; }
    void inner_product() { total += 2.0 * n; }
};

}  // namespace

double cg_iteration_bound(double kappa, double epsilon, LogBase base)
{
    if (!(kappa >= 1.0)) throw PreconditionError("kappa must be >= 1");
    if (!(epsilon > 0 && epsilon < 1)) throw PreconditionError("epsilon must lie in (0, 1)");
    return 0.5 * kappa * log_in(2.0 / epsilon, base);
}

double cg_flops_per_iteration(double n_dim, double s) { return 4.0 * n_dim * s + 14.0 * n_dim; }

double cg_flops(const ProblemInstance& p, LogBase base)
{
    return cg_flops_per_iteration(p.matrix_size(), static_cast<double>(p.s)) * cg_iteration_bound(p.kappa, p.epsilon, base);
}

double cholesky_flops(double n_dim, double s)
{
    if (n_dim < 1 || s < 1) throw PreconditionError("cholesky_flops needs N >= 1 and s >= 1");
    return n_dim * (3.0 * s * s + 7.0 * s + 5.0);
}

double cholesky_flops_steps(double n_dim, double s)
{
    if (n_dim < 1 || s < 1) throw PreconditionError("cholesky_flops needs N >= 1 and s >= 1");
    const double factor = n_dim * s * (s + 1.0);        // sparse factorization
    const double forward = n_dim * s;                   // forward substitution
    const double backward = n_dim * (1.0 + s + 2.0 * s * s);  // back substitution
    const double update = n_dim * (1.0 + s) * 4.0;      // right-hand side updates
    return factor + forward + backward + update;
}

double effective_flops_per_second(const ClassicalHardwareProfile& m)
{
    return m.peak_flops ? *m.peak_flops : m.freq_hz * m.flops_per_cycle;
}

double classical_runtime(double flops, const ClassicalHardwareProfile& m)
{
    validate(m);
    return flops / effective_flops_per_second(m);
}

ClassicalResources classical_resources(const ProblemInstance& p, const ClassicalHardwareProfile& m,
                                       ClassicalMethod method, LogBase base)
{
    ClassicalResources r;
    r.method = method;
    r.machine = m;
    if (method == ClassicalMethod::CG) {
        r.iterations = cg_iteration_bound(p.kappa, p.epsilon, base);
        r.flops = cg_flops(p, base);
    } else {
        r.flops = cholesky_flops(p.matrix_size(), static_cast<double>(p.s));
    }
    r.runtime_s = classical_runtime(r.flops, m);
    return r;
}

Eigen::VectorXd direct_solve(const SparseSystem& sys)
{
    const Eigen::SparseMatrix<double> a = sys.a;  // column-major copy for the factorization
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(a);
    if (ldlt.info() != Eigen::Success) throw ConsistencyError("direct factorization failed");
    Eigen::VectorXd x = ldlt.solve(sys.b);
    if (ldlt.info() != Eigen::Success) throw ConsistencyError("direct solve failed");
    return x;
}

CgneResult cgne_solve(const SparseSystem& sys, double epsilon)
{
    if (!(epsilon > 0 && epsilon < 1)) throw PreconditionError("epsilon must lie in (0, 1)");
    if (sys.dim > (std::int64_t{1} << 14)) throw PreconditionError("cgne_solve is limited to dim <= 2^14");
    validate(sys);

    const auto& k = kernels::active();
    const auto n = static_cast<std::size_t>(sys.dim);
    const SparseMatrix at = sys.a.transpose();
    const auto nnz = static_cast<double>(sys.a.nonZeros());
    const Eigen::VectorXd x_ref = direct_solve(sys);
    const double ref_norm = x_ref.norm();

    CgneResult res;
    res.iteration_limit = static_cast<std::uint64_t>(10.0 * std::ceil(cg_iteration_bound(sys.kappa_true, epsilon)));
    res.x = Eigen::VectorXd::Zero(sys.dim);
    Eigen::VectorXd r = sys.b;  // b - A x with x = 0
    Eigen::VectorXd p = Eigen::VectorXd::Zero(sys.dim);
    Eigen::VectorXd q(sys.dim);
    Eigen::VectorXd atr(sys.dim);
    FlopCounter flops{static_cast<double>(n)};

    auto spmv = [&](const SparseMatrix& m, const Eigen::VectorXd& in, Eigen::VectorXd& out) {
        k.spmv(n, m.outerIndexPtr(), m.innerIndexPtr(), m.valuePtr(), in.data(), out.data());
        flops.matvec(nnz);
    };

    double rr = k.norm2(r.data(), n);
    double beta = 0.0;
    while (true) {
        // p = A^T r + beta p
        spmv(at, r, atr);
        k.xpby(atr.data(), beta, p.data(), n);
        flops.vector_update();
        // q = A p
        spmv(sys.a, p, q);
        // alpha = (r, r) / (p, p); charged as two inner products
        const double pp = k.norm2(p.data(), n);
        flops.inner_product();
        flops.inner_product();
        const double alpha = rr / pp;
        k.axpy(alpha, p.data(), res.x.data(), n);
        flops.vector_update();
        k.axpy(-alpha, q.data(), r.data(), n);
        flops.vector_update();
        // beta = (r_new, r_new) / (r, r); charged as two inner products
        const double rr_new = k.norm2(r.data(), n);
        flops.inner_product();
        flops.inner_product();
        beta = rr_new / rr;
        rr = rr_new;
        ++res.iterations;

        res.relative_error = (res.x - x_ref).norm() / ref_norm;
        if (res.relative_error <= epsilon) break;
        if (rr == 0.0 || res.iterations >= res.iteration_limit) {
            throw DivergenceError(fmt::format("CGNE did not reach relative error {} within {} iterations (last {:.3g})",
                                              epsilon, res.iterations, res.relative_error));
        }
    }
    res.counted_flops = flops.total;
    return res;
}

}  // namespace qlsa
