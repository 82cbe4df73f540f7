#include "symdecomp/irrep.hpp"

#include <cmath>
#include <map>

namespace symdecomp {

IrrepGenerators irrep_generators(const Partition& lambda) {
    IrrepGenerators out;
    out.partition = lambda;
    out.n = lambda.n();
    out.tableaux = enumerate_tableaux(lambda);
    out.dim = static_cast<int>(out.tableaux.size());
    const int n = out.n;
    const int d = out.dim;

    // Index tableaux by their content vectors; a generator's off-diagonal
    // partner is the tableau with entries l, l+1 of the content swapped.
    std::map<ContentVector, int> index;
    std::vector<ContentVector> contents(d);
    for (int k = 0; k < d; ++k) {
        contents[k] = content_of(out.tableaux[k]);
        index[contents[k]] = k;
    }

    out.generators.reserve(n > 0 ? n - 1 : 0);
    for (int l = 1; l <= n - 1; ++l) {
        std::vector<Eigen::Triplet<double>> trip;
        for (int j = 0; j < d; ++j) {
            auto [il, jl] = out.tableaux[j].box_of(l);
            auto [il1, jl1] = out.tableaux[j].box_of(l + 1);
            if (il == il1) {
                trip.emplace_back(j, j, 1.0);
            } else if (jl == jl1) {
                trip.emplace_back(j, j, -1.0);
            } else {
                int r = jl1 + il - il1 - jl;  // axial distance, exact integer
                trip.emplace_back(j, j, 1.0 / r);
                ContentVector swapped = contents[j];
                std::swap(swapped.entries[l - 1], swapped.entries[l]);
                int k = index.at(swapped);
                if (k > j) {
                    double w = std::sqrt(1.0 - 1.0 / (static_cast<double>(r) * r));
                    trip.emplace_back(k, j, w);
                    trip.emplace_back(j, k, w);
                }
            }
        }
        Eigen::SparseMatrix<double> g(d, d);
        g.setFromTriplets(trip.begin(), trip.end());
        out.generators.push_back(std::move(g));
    }
    return out;
}

Eigen::MatrixXi irrep_yjm_diagonals(const Partition& lambda) {
    auto tabs = enumerate_tableaux(lambda);
    const int d = static_cast<int>(tabs.size());
    const int n = lambda.n();
    Eigen::MatrixXi m(d, n);
    for (int k = 0; k < d; ++k) {
        auto c = content_of(tabs[k]);
        for (int j = 0; j < n; ++j) m(k, j) = c.entries[j];
    }
    return m;
}

}  // namespace symdecomp
