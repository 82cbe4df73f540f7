#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <vector>

#include "symdecomp/combinatorics.hpp"

namespace symdecomp {

// Young orthogonal form of rho_lambda: n-1 symmetric orthogonal generator
// matrices of size d_lambda x d_lambda, rows/columns indexed by the
// canonical (content-lexicographic) tableau enumeration.
struct IrrepGenerators {
    Partition partition;
    int n = 0;
    int dim = 0;
    std::vector<Eigen::SparseMatrix<double>> generators;
    std::vector<StandardTableau> tableaux;
};

IrrepGenerators irrep_generators(const Partition& lambda);

// Row k is content_of(y_k); equals the diagonals of rho_lambda(X_j).
Eigen::MatrixXi irrep_yjm_diagonals(const Partition& lambda);

}  // namespace symdecomp
