#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>

namespace qlsa {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor, std::int32_t>;

/// Symmetric positive definite test system A x = b with ||b|| = 1 and the
/// spectrum of A inside [1/kappa_true, 1].
struct SparseSystem {
    std::int64_t dim = 0;
    std::uint64_t s = 0;  // nonzeros per row
    double kappa_true = 1;
    SparseMatrix a;
    Eigen::VectorXd b;
};

/// Block diagonal of s x s blocks Q diag(lambda) Q^T (Q random orthogonal,
/// lambda uniform in [1/kappa, 1] with both ends present), then a random
/// symmetric permutation. Every row has exactly s nonzeros. s must divide dim.
SparseSystem generate_spd_system(std::int64_t dim, std::uint64_t s, double kappa, std::uint64_t seed);

/// Identity system with a random unit right-hand side.
SparseSystem identity_system(std::int64_t dim, std::uint64_t seed);

/// Throws ValidationError if A is not symmetric or a row exceeds s nonzeros.
void validate(const SparseSystem& sys);

}  // namespace qlsa
