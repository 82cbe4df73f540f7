#pragma once

#include <Eigen/Dense>
#include <vector>

#include "symdecomp/common.hpp"

namespace symdecomp {

struct Tridiagonal {
    Eigen::VectorXd diag;  // size d
    Eigen::VectorXd off;   // size d-1
};

// Householder reduction QH^T A QH = T with QH accumulated.
void tridiagonalize(const Eigen::MatrixXd& A, Eigen::MatrixXd& QH, Tridiagonal& T);

// Number of eigenvalues of T strictly below x (Sturm sign count).
int sturm_count_below(const Tridiagonal& T, double x);

struct EigenResult {
    Eigen::MatrixXd Q;       // orthogonal, columns ordered by ascending eigenvalue
    Eigen::VectorXi values;  // rounded integer eigenvalues
    double residual = 0;     // max |Q^T A Q - diag(values)|
};

// Eigendecomposition for symmetric matrices whose spectrum consists of
// integers in [-bound, bound]: tridiagonalize, then extract null spaces
// of T - mI per integer shift via Givens QR and back-substitution.
EigenResult integer_eigen_decompose(const Eigen::MatrixXd& A, int bound);

struct JointDiagonalization {
    Eigen::MatrixXd Q;
    Eigen::MatrixXi diagonals;  // d x (number of matrices)
};

// One-at-a-time with deflation: diagonalize Xs[j] block by block, conjugate the
// rest, recurse on each integer-eigenvalue block.
JointDiagonalization simultaneous_diagonalize(const std::vector<Eigen::MatrixXd>& Xs,
                                              const std::vector<int>& bounds,
                                              double tol = -1);

// Orthonormal basis of the (approximate) null space; singular values
// below rank_tol * sigma_max count as zero.
Eigen::MatrixXd nullspace_orthonormal(const Eigen::MatrixXd& A, double rank_tol = 1e-10);

// Same contract, via Gram-Schmidt row-space complement instead of SVD.
Eigen::MatrixXd nullspace_gram_schmidt(const Eigen::MatrixXd& A, double rank_tol = 1e-10);

// Modified Gram-Schmidt with one re-orthogonalization pass.
Eigen::MatrixXd gram_schmidt(const Eigen::MatrixXd& columns);

}  // namespace symdecomp
