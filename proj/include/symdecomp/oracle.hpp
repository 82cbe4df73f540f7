#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "symdecomp/combinatorics.hpp"
#include "symdecomp/representation.hpp"

namespace symdecomp {

struct ClassData {
    Partition cycle_type;
    std::uint64_t size = 0;
    std::vector<int> representative;  // generator indices (1-based) composing a class rep
};

// One class per partition of n; sizes satisfy n!/z with z the usual
// centralizer order.
std::vector<ClassData> conjugacy_classes(int n);

// chi_lambda(cycle_type) by Murnaghan-Nakayama border-strip recursion,
// exact integer arithmetic.
long long character(const Partition& lambda, const Partition& cycle_type);

// a_lambda via the class-weighted character inner product; traces of rho
// are evaluated by multiplying generators along class representatives.
int multiplicity_by_characters(const Representation& rho, const Partition& lambda);

// g(lambda, mu, nu) via the triple character sum, exact.
long long kronecker_coefficient(const Partition& lambda, const Partition& mu,
                                const Partition& nu);

// Full-group sum over all n! elements (n <= 6), for cross-checking.
std::map<Partition, int> brute_force_multiplicities(const Representation& rho);

// Cycle type of a one-line permutation (values 1..n).
Partition cycle_type_of(const std::vector<int>& perm);

// Adjacent-transposition word realizing the one-line permutation.
std::vector<int> permutation_word(const std::vector<int>& perm);

// Dense rho(g) for the generator word (applied right-to-left).
Eigen::MatrixXd apply_word(const Representation& rho, const std::vector<int>& word);

std::uint64_t factorial(int n);

}  // namespace symdecomp
