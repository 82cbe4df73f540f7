#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <string>
#include <vector>

#include "symdecomp/combinatorics.hpp"

namespace symdecomp {

// Orthogonal matrix representation of S_n, stored through its n-1
// symmetric generators rho(tau_l). Generators are kept sparse; most of
// the constructors below produce matrices with O(1) nonzeros per row.
class Representation {
public:
    Representation(int n, int d, std::vector<Eigen::SparseMatrix<double>> generators);

    int n() const { return n_; }
    int d() const { return d_; }
    const std::vector<Eigen::SparseMatrix<double>>& generators() const { return gens_; }
    const Eigen::SparseMatrix<double>& generator(int l) const { return gens_[l - 1]; }  // 1-based
    Eigen::MatrixXd dense_generator(int l) const { return Eigen::MatrixXd(gens_[l - 1]); }

private:
    int n_;
    int d_;
    std::vector<Eigen::SparseMatrix<double>> gens_;
};

// rho(X_1) = 0, rho(X_2), ..., rho(X_n).
struct YjmMatrices {
    std::vector<Eigen::MatrixXd> X;  // size n, X[0] = 0
};

struct ValidationReport {
    double symmetry = 0;      // max ||G - G^T||_max
    double orthogonality = 0; // max ||G^T G - I||_max
    double involution = 0;    // max ||G^2 - I||_max
    double braid = 0;         // max ||(G_l G_{l+1})^3 - I||_max
    double commutation = 0;   // max ||G_i G_j - G_j G_i||_max, |i-j| >= 2
    double tol = 0;
    bool pass() const;
    std::string failing_check() const;  // empty when pass()
    std::string summary() const;
};

Representation permutation_representation(int n);
Representation regular_representation(int n, bool override_guard = false);
Representation irrep_representation(const Partition& lambda);
Representation trivial_representation(int n);

Representation tensor_product(const Representation& a, const Representation& b);
Representation tensor_product(const std::vector<Representation>& factors);
Representation tensor_power(const Representation& rho, int k);
Representation direct_sum(const Representation& a, const Representation& b);
Representation direct_sum(const std::vector<Representation>& summands);

// rho((i j)) as the conjugation product tau_i ... tau_j ... tau_i.
Eigen::MatrixXd transposition_matrix(const Representation& rho, int i, int j);

// Assembles X_{j+1} = G_j X_j G_j + G_j; throws numerical_error when a
// pairwise commutator exceeds tol (default 1e-10 * d).
YjmMatrices yjm_matrices(const Representation& rho, double tol = -1);

ValidationReport validate_generators(int n, int d,
                                     const std::vector<Eigen::SparseMatrix<double>>& gens,
                                     double tol = -1);

// JSON file format: {"n": int, "d": int, "generators": [d x d nested arrays]}.
Representation representation_from_file(const std::string& path);
void write_representation(const Representation& rho, const std::string& path);

}  // namespace symdecomp
