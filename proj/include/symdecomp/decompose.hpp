#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include <json.hpp>

#include "symdecomp/combinatorics.hpp"
#include "symdecomp/representation.hpp"

namespace symdecomp {

// d x n integer matrix of joint YJM eigenvalues, rows sorted
// lexicographically; every row is a content vector.
struct SpectrumMatrix {
    Eigen::MatrixXi rows;
};

struct Component {
    Partition partition;
    int multiplicity = 0;
    int dimension = 0;
};

struct DecompositionResult {
    std::vector<Component> components;  // ordered by first occurrence in the sorted spectrum
    Eigen::MatrixXd Q;                  // canonical reduction or full block-diagonalizer
    bool canonical_only = true;
    double residual = 0;
};

struct IsotypicSplit {
    Eigen::MatrixXd U;     // orthonormal null-space columns (restricted coordinates)
    Eigen::MatrixXd Qbar;  // assembled [Qbar^(1) ... Qbar^(a)], (a d_lambda) x (a d_lambda)
};

// Simultaneous YJM diagonalization plus the sorted
// joint spectrum; Q's columns follow the row sort.
std::pair<Eigen::MatrixXd, SpectrumMatrix> joint_spectrum(const Representation& rho);

// Multiplicities from the sorted spectrum; Q is regrouped so each component's columns are
// contiguous (the canonical reduction layout).
DecompositionResult multiplicities(const Representation& rho);

// Null-space split of one isotypic block. rho_tilde_gens are the n-1
// generators of the canonical block (dimension a * d_lambda, copies of
// each content vector adjacent). dense_path switches to the full
// Kronecker matrix instead of the sparsity-restricted columns.
IsotypicSplit split_isotypic(const std::vector<Eigen::MatrixXd>& rho_tilde_gens,
                             const Partition& lambda, int a, bool dense_path = false);

// Full block-diagonalization into Young orthogonal form blocks.
DecompositionResult block_diagonalize(const Representation& rho, double tol = -1);

struct VerificationReport {
    double orthogonality = 0;
    double block_residual = 0;
    bool oracle_checked = false;
    bool oracle_agrees = true;
    std::vector<std::string> notes;
    bool pass(double tol) const {
        return orthogonality <= tol && block_residual <= tol && oracle_agrees;
    }
};

VerificationReport verify_decomposition(const Representation& rho,
                                        const DecompositionResult& result);

nlohmann::json to_json(const DecompositionResult& result);

}  // namespace symdecomp
