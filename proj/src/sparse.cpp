#include "qlsa/sparse.hpp"

#include <Eigen/QR>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <random>
#include <vector>

#include "qlsa/errors.hpp"
#include "qlsa/rng.hpp"

namespace qlsa {
namespace {

// Box-Muller from the portable uniform source.
double gaussian(std::mt19937_64& rng)
{
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::VectorXd unit_vector(std::int64_t dim, std::mt19937_64& rng)
{
    Eigen::VectorXd b(dim);
    for (std::int64_t i = 0; i < dim; ++i) b(i) = gaussian(rng);
    return b / b.norm();
}

Eigen::MatrixXd random_orthogonal(std::int64_t s, std::mt19937_64& rng)
{
    Eigen::MatrixXd g(s, s);
    for (std::int64_t j = 0; j < s; ++j) {
        for (std::int64_t i = 0; i < s; ++i) g(i, j) = gaussian(rng);
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(s, s);
    // Fix column signs so the distribution is Haar.
    for (std::int64_t j = 0; j < s; ++j) {
        if (qr.matrixQR()(j, j) < 0) q.col(j) *= -1.0;
    }
    return q;
}

}  // namespace

SparseSystem generate_spd_system(std::int64_t dim, std::uint64_t s, double kappa, std::uint64_t seed)
{
    if (dim < 2) throw PreconditionError("dim must be >= 2");
    if (s < 1 || static_cast<std::int64_t>(s) > dim || dim % static_cast<std::int64_t>(s) != 0) {
        throw PreconditionError(fmt::format("s = {} must divide dim = {}", s, dim));
    }
    if (!(kappa >= 1.0)) throw PreconditionError("kappa must be >= 1");

    std::mt19937_64 rng(seed);
    const auto bs = static_cast<std::int64_t>(s);
    std::vector<double> lambda(static_cast<std::size_t>(dim));
    for (auto& l : lambda) l = uniform(rng, 1.0 / kappa, 1.0);
    lambda[0] = 1.0 / kappa;
    lambda[1] = 1.0;

    std::vector<std::int64_t> perm(static_cast<std::size_t>(dim));
    for (std::int64_t i = 0; i < dim; ++i) perm[static_cast<std::size_t>(i)] = i;
    shuffle(perm.begin(), perm.end(), rng);

    std::vector<Eigen::Triplet<double, std::int32_t>> trips;
    trips.reserve(static_cast<std::size_t>(dim * bs));
    for (std::int64_t blk = 0; blk < dim / bs; ++blk) {
        const Eigen::MatrixXd q = random_orthogonal(bs, rng);
        Eigen::VectorXd d(bs);
        for (std::int64_t k = 0; k < bs; ++k) d(k) = lambda[static_cast<std::size_t>(blk * bs + k)];
        Eigen::MatrixXd m = q * d.asDiagonal() * q.transpose();
        m = 0.5 * (m + m.transpose());
        for (std::int64_t i = 0; i < bs; ++i) {
            for (std::int64_t j = 0; j < bs; ++j) {
                const auto pi = static_cast<std::int32_t>(perm[static_cast<std::size_t>(blk * bs + i)]);
                const auto pj = static_cast<std::int32_t>(perm[static_cast<std::size_t>(blk * bs + j)]);
                trips.emplace_back(pi, pj, m(i, j));
            }
        }
    }

    SparseSystem sys;
    sys.dim = dim;
    sys.s = s;
    sys.kappa_true = kappa;
    sys.a.resize(dim, dim);
    sys.a.setFromTriplets(trips.begin(), trips.end());
    sys.a.makeCompressed();
    sys.b = unit_vector(dim, rng);
    return sys;
}

SparseSystem identity_system(std::int64_t dim, std::uint64_t seed)
{
    if (dim < 1) throw PreconditionError("dim must be >= 1");
    std::mt19937_64 rng(seed);
    SparseSystem sys;
    sys.dim = dim;
    sys.s = 1;
    sys.kappa_true = 1.0;
    sys.a.resize(dim, dim);
    sys.a.setIdentity();
    sys.a.makeCompressed();
    sys.b = unit_vector(dim, rng);
    return sys;
}

void validate(const SparseSystem& sys)
{
    if (sys.a.rows() != sys.dim || sys.a.cols() != sys.dim || sys.b.size() != sys.dim) {
        throw ValidationError("system", "matrix and right-hand side sizes disagree");
    }
    for (std::int64_t r = 0; r < sys.dim; ++r) {
        const auto nnz = static_cast<std::uint64_t>(sys.a.outerIndexPtr()[r + 1] - sys.a.outerIndexPtr()[r]);
        if (nnz > sys.s) throw ValidationError("system.s", fmt::format("row {} has {} nonzeros > s = {}", r, nnz, sys.s));
    }
    const SparseMatrix at = sys.a.transpose();
    if ((sys.a - at).norm() > 1e-12 * std::max(1.0, sys.a.norm())) throw ValidationError("system.a", "matrix is not symmetric");
}

}  // namespace qlsa
