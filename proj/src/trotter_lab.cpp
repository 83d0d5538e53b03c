#include "qlsa/trotter_lab.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <complex>
#include <fmt/format.h>
#include <numbers>
#include <optional>
#include <random>

#include "qlsa/errors.hpp"
#include "qlsa/parallel.hpp"
#include "qlsa/rng.hpp"

namespace qlsa {
namespace {

using cd = std::complex<double>;
constexpr Eigen::Index kMaxDim = 1024;
constexpr double kHermitianTol = 1e-12;
constexpr double kBranchGuard = 1e-6;

// Nonzero (row, col, value) with row <= col; one entry per 1x1 or 2x2 block.
struct Block {
    Eigen::Index i, j;
    cd value;
};

std::optional<std::vector<Block>> one_sparse_blocks(const CMatrix& h)
{
    const Eigen::Index n = h.rows();
    if (h.cols() != n) return std::nullopt;
    std::vector<Eigen::Index> partner(n, -1);
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            if (h(r, c) == cd(0)) continue;
            if (partner[c] != -1) return std::nullopt;
            partner[c] = r;
        }
    }
    std::vector<Block> blocks;
    std::vector<char> row_used(n, 0);
    for (Eigen::Index c = 0; c < n; ++c) {
        const Eigen::Index r = partner[c];
        if (r < 0) continue;
        if (row_used[r]) return std::nullopt;
        row_used[r] = 1;
        if (r == c) {
            blocks.push_back({r, r, h(r, r)});
        } else {
            if (partner[r] != c) return std::nullopt;  // not a symmetric placement
            if (r < c) blocks.push_back({r, c, h(r, c)});
        }
    }
    return blocks;
}

void check_dim(Eigen::Index n, const char* what)
{
    if (n < 1 || n > kMaxDim) throw PreconditionError(fmt::format("{}: dimension {} outside [1, {}]", what, n, kMaxDim));
}

void check_hermitian(const CMatrix& h, const char* what)
{
    if (h.rows() != h.cols()) throw ValidationError(what, "matrix is not square");
    const double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (dev > kHermitianTol) throw ValidationError(what, fmt::format("matrix is not Hermitian (deviation {:.3g})", dev));
}

// U <- U * e^{iHt} for one-sparse H, touching only the affected columns.
void right_multiply_one_sparse(CMatrix& u, const std::vector<Block>& blocks, double t)
{
    for (const Block& b : blocks) {
        if (b.i == b.j) {
            u.col(b.i) *= std::exp(cd(0, b.value.real() * t));
            continue;
        }
        // H restricted to (i, j) is [[0, v], [conj v, 0]]; its exponential is
        // cos(|v|t) I + i sin(|v|t) H / |v|.
        const double mag = std::abs(b.value);
        const double c = std::cos(mag * t);
        const cd phase = b.value / mag;
        const cd e_ij = cd(0, std::sin(mag * t)) * phase;        // row i, col j
        const cd e_ji = cd(0, std::sin(mag * t)) * std::conj(phase);  // row j, col i
        const Eigen::VectorXcd ci = u.col(b.i);
        const Eigen::VectorXcd cj = u.col(b.j);
        u.col(b.i) = c * ci + e_ji * cj;
        u.col(b.j) = e_ij * ci + c * cj;
    }
}

}  // namespace

void validate(const HermitianTermList& list)
{
    if (list.terms.empty()) throw ValidationError("terms", "term list is empty");
    for (std::size_t k = 0; k < list.terms.size(); ++k) {
        const CMatrix& h = list.terms[k];
        if (h.rows() != list.dim || h.cols() != list.dim) {
            throw ValidationError("terms", fmt::format("term {} is {}x{}, expected {}x{}", k, h.rows(), h.cols(), list.dim, list.dim));
        }
        check_hermitian(h, "terms");
    }
}

bool is_one_sparse(const CMatrix& h) { return one_sparse_blocks(h).has_value(); }

CMatrix hermitian_exp(const CMatrix& h, double t)
{
    check_hermitian(h, "H");
    check_dim(h.rows(), "hermitian_exp");
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
    if (eig.info() != Eigen::Success) throw ConsistencyError("eigensolver failed in hermitian_exp");
    const Eigen::VectorXcd phases = (eig.eigenvalues().cast<cd>() * cd(0, t)).array().exp();
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

CMatrix one_sparse_exp(const CMatrix& h, double t)
{
    check_hermitian(h, "H");
    const auto blocks = one_sparse_blocks(h);
    if (!blocks) throw PreconditionError("one_sparse_exp: matrix has more than one nonzero in a row or column");
    CMatrix u = CMatrix::Identity(h.rows(), h.cols());
    right_multiply_one_sparse(u, *blocks, t);
    return u;
}

double spectral_norm(const CMatrix& m)
{
    if (m.size() == 0) return 0.0;
    if (const auto blocks = one_sparse_blocks(m)) {
        double best = 0;
        for (const Block& b : *blocks) best = std::max(best, std::abs(b.value));
        return best;
    }
    Eigen::BDCSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

CMatrix trotter_product(const HermitianTermList& list, double t)
{
    validate(list);
    check_dim(list.dim, "trotter_product");
    CMatrix u = CMatrix::Identity(list.dim, list.dim);
    for (const CMatrix& h : list.terms) {
        if (const auto blocks = one_sparse_blocks(h)) {
            right_multiply_one_sparse(u, *blocks, t);
        } else {
            u = u * hermitian_exp(h, t);
        }
    }
    return u;
}

CMatrix effective_hamiltonian(const CMatrix& u, double t)
{
    if (!(t > 0)) throw PreconditionError("effective_hamiltonian needs t > 0");
    const Eigen::Index n = u.rows();
    check_dim(n, "effective_hamiltonian");

    // Fast path: when every eigenphase lies well inside (-pi/2, pi/2) the
    // principal log is arcsin of the Hermitian part (U - U^dag)/2i, which is a
    // plain matrix function and needs only a Hermitian eigensolver.
    const CMatrix k = (u - u.adjoint()) * cd(0, -0.5);
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(k);
    if (eig.info() == Eigen::Success) {
        const CMatrix& v = eig.eigenvectors();
        const Eigen::VectorXd& lam = eig.eigenvalues();
        const double limit = std::sin(1.2);
        bool fast = lam.cwiseAbs().maxCoeff() <= limit;
        if (fast) {
            const CMatrix c = (u + u.adjoint()) * 0.5;
            for (Eigen::Index i = 0; i < n && fast; ++i) fast = (v.col(i).adjoint() * c * v.col(i))(0, 0).real() > 0.3;
        }
        if (fast) {
            const Eigen::VectorXd theta = lam.array().asin();
            return v * (theta / t).cast<cd>().asDiagonal() * v.adjoint();
        }
    }

    // General path: a unitary is normal, so its Schur form is diagonal.
    Eigen::ComplexSchur<CMatrix> schur(u);
    if (schur.info() != Eigen::Success) throw ConsistencyError("Schur decomposition failed in effective_hamiltonian");
    const CMatrix& q = schur.matrixU();
    Eigen::VectorXd theta(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        theta(i) = std::arg(schur.matrixT()(i, i));
        if (std::abs(theta(i)) > std::numbers::pi - kBranchGuard) {
            throw BranchAmbiguityError(fmt::format("eigenphase {:.9f} is at the branch cut; reduce t", theta(i)));
        }
    }
    return q * (theta / t).cast<cd>().asDiagonal() * q.adjoint();
}

EteSample measure_ete(const HermitianTermList& list, double t)
{
    validate(list);
    const CMatrix u = trotter_product(list, t);
    CMatrix diff = effective_hamiltonian(u, t);
    double max_norm = 0;
    for (const CMatrix& h : list.terms) {
        diff -= h;
        max_norm = std::max(max_norm, spectral_norm(h));
    }
    const double m = static_cast<double>(list.terms.size());
    EteSample s;
    s.ete = spectral_norm(diff);
    s.bound = m * (m - 1.0) * t / 2.0 * max_norm * max_norm;
    s.t = t;
    s.m_terms = static_cast<int>(list.terms.size());
    return s;
}

HermitianTermList sample_one_sparse_terms(Eigen::Index dim, int s_terms, std::uint64_t seed)
{
    if (dim < 2 || dim > kMaxDim || (dim & (dim - 1)) != 0) {
        throw PreconditionError(fmt::format("dim must be a power of two in [2, {}] (got {})", kMaxDim, dim));
    }
    if (s_terms < 2) throw PreconditionError("s_terms must be >= 2");
    std::mt19937_64 rng(seed);
    HermitianTermList list;
    list.dim = dim;
    std::vector<Eigen::Index> order(static_cast<std::size_t>(dim));
    for (int k = 0; k < s_terms; ++k) {
        for (Eigen::Index i = 0; i < dim; ++i) order[static_cast<std::size_t>(i)] = i;
        shuffle(order.begin(), order.end(), rng);
        CMatrix h = CMatrix::Zero(dim, dim);
        for (std::size_t p = 0; p + 1 < order.size(); p += 2) {
            const Eigen::Index a = order[p], b = order[p + 1];
            if (uniform01(rng) < 0.5) {
                const double v = uniform(rng, -1.0, 1.0);
                h(a, b) = v;
                h(b, a) = v;
            } else {
                h(a, a) = uniform(rng, -1.0, 1.0);
                h(b, b) = uniform(rng, -1.0, 1.0);
            }
        }
        list.terms.push_back(std::move(h));
    }
    return list;
}

double empirical_quantile(std::vector<double> values, double q)
{
    if (values.empty()) throw PreconditionError("quantile of an empty sample");
    if (!(q >= 0 && q <= 1)) throw PreconditionError("quantile level must lie in [0, 1]");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

double ete_quantile(Eigen::Index dim, int s_terms, double t, int n_samples, double q, std::uint64_t seed)
{
    if (!(q > 0 && q < 1)) throw PreconditionError("q must lie in (0, 1)");
    if (n_samples < 100) throw PreconditionError("ete_quantile needs at least 100 samples");
    std::vector<double> etes(static_cast<std::size_t>(n_samples));
    parallel_for(etes.size(), [&](std::size_t i) {
        etes[i] = measure_ete(sample_one_sparse_terms(dim, s_terms, derive_seed(seed, i)), t).ete;
    });
    return empirical_quantile(std::move(etes), q);
}

std::vector<EteRecord> ete_sweep(const std::vector<Eigen::Index>& dims, const std::vector<double>& ts, int s_terms,
                                 int samples, std::uint64_t seed)
{
    if (samples < 1) throw PreconditionError("samples must be >= 1");
    std::vector<EteRecord> out(dims.size() * ts.size() * static_cast<std::size_t>(samples));
    parallel_for(out.size(), [&](std::size_t idx) {
        const std::size_t per_dim = ts.size() * static_cast<std::size_t>(samples);
        const std::size_t d = idx / per_dim;
        const std::size_t ti = (idx % per_dim) / static_cast<std::size_t>(samples);
        EteRecord rec;
        rec.seed_index = idx;
        rec.dim = dims[d];
        rec.t = ts[ti];
        const EteSample s = measure_ete(sample_one_sparse_terms(rec.dim, s_terms, derive_seed(seed, idx)), rec.t);
        rec.ete = s.ete;
        rec.bound = s.bound;
        out[idx] = rec;
    });
    return out;
}

double solution_error_from_ete(double delta_a, double kappa)
{
    if (delta_a < 0 || kappa < 1) throw PreconditionError("need delta_a >= 0 and kappa >= 1");
    const double x = kappa * delta_a;
    if (x >= 1.0) throw DivergenceError(fmt::format("kappa * delta_a = {} >= 1, the bound is vacuous", x));
    return x / (1.0 - x);
}

}  // namespace qlsa
