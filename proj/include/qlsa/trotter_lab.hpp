#pragma once

// Numerical check of first-order Trotter error on small dense matrices.

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace qlsa {

using CMatrix = Eigen::MatrixXcd;

struct HermitianTermList {
    Eigen::Index dim = 0;
    std::vector<CMatrix> terms;
};

/// Throws ValidationError if a term is not Hermitian (1e-12) or sizes differ.
void validate(const HermitianTermList& list);

struct EteSample {
    double ete = 0;    // ||H' - sum H_j||
    double bound = 0;  // m(m-1)t/2 * max ||H_j||^2
    double t = 0;
    int m_terms = 0;
};

/// e^{iHt} by eigendecomposition. dim <= 1024.
CMatrix hermitian_exp(const CMatrix& h, double t);

/// e^{iHt} for a matrix with at most one nonzero per row and column, built
/// from its 1x1 and 2x2 blocks. Throws PreconditionError if H is not one-sparse.
CMatrix one_sparse_exp(const CMatrix& h, double t);

bool is_one_sparse(const CMatrix& h);

/// Largest singular value. One-sparse matrices use their block structure.
double spectral_norm(const CMatrix& m);

/// e^{iH_1 t} e^{iH_2 t} ... e^{iH_m t}
CMatrix trotter_product(const HermitianTermList& list, double t);

/// Principal logarithm: returns H' with U = e^{iH't}. Throws
/// BranchAmbiguityError when an eigenphase is within 1e-6 of +-pi.
CMatrix effective_hamiltonian(const CMatrix& u, double t);

EteSample measure_ete(const HermitianTermList& list, double t);

/// Random one-sparse real symmetric terms: indices are shuffled and paired;
/// each pair becomes either a symmetric off-diagonal entry or two diagonal
/// entries (probability 1/2 each). Entries are uniform in [-1, 1].
HermitianTermList sample_one_sparse_terms(Eigen::Index dim, int s_terms, std::uint64_t seed);

/// Linear-interpolation quantile of a sample (sorted internally).
double empirical_quantile(std::vector<double> values, double q);

/// q-quantile of ETE at time t over n_samples independent term lists.
/// Sample i uses derive_seed(seed, i).
double ete_quantile(Eigen::Index dim, int s_terms, double t, int n_samples, double q, std::uint64_t seed);

struct EteRecord {
    std::uint64_t seed_index = 0;
    Eigen::Index dim = 0;
    double t = 0;
    double ete = 0;
    double bound = 0;
};

/// Every (dim, t) cell gets `samples` term lists; record order is
/// dims-major, then t, then sample index.
std::vector<EteRecord> ete_sweep(const std::vector<Eigen::Index>& dims, const std::vector<double>& ts, int s_terms,
                                 int samples, std::uint64_t seed);

/// kappa * dA / (1 - kappa * dA). Throws DivergenceError when kappa * dA >= 1.
double solution_error_from_ete(double delta_a, double kappa);

}  // namespace qlsa
