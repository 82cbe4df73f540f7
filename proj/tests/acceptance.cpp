// Acceptance checks, one per numbered criterion. Run as: acceptance <1..9>
// Each prints a single PASS/FAIL line and exits nonzero on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "symdecomp/decompose.hpp"
#include "symdecomp/oracle.hpp"

using namespace symdecomp;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::map<Partition, int> as_map(const DecompositionResult& r) {
    std::map<Partition, int> m;
    for (const auto& c : r.components) m[c.partition] = c.multiplicity;
    return m;
}

bool check(bool ok, const std::string& what) {
    if (!ok) std::cerr << "  failed: " << what << '\n';
    return ok;
}

// --- criterion 1: S_4 permutation multiplicities and sorted spectrum ---
bool criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    Representation rho = permutation_representation(4);
    auto [Q, spec] = joint_spectrum(rho);
    auto mult = as_map(multiplicities(rho));
    double elapsed = seconds_since(t0);

    Eigen::MatrixXi expect(4, 4);
    expect << 0, -1, 1, 2, 0, 1, -1, 2, 0, 1, 2, -1, 0, 1, 2, 3;
    bool ok = check(spec.rows == expect, "sorted joint spectrum");
    ok &= check(mult == std::map<Partition, int>(
                            {{Partition({3, 1}), 1}, {Partition({4}), 1}}),
                "multiplicities {(3,1):1, (4):1}");
    ok &= check(elapsed < 1.0, "runtime under 1 s");
    return ok;
}

// --- criterion 2: assembled YJM matrices for perm(4), entry for entry ---
bool criterion2() {
    YjmMatrices yjm = yjm_matrices(permutation_representation(4));
    Eigen::MatrixXd x2(4, 4), x3(4, 4), x4(4, 4);
    x2 << 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1;
    x3 << 1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 2;
    x4 << 2, 0, 0, 1, 0, 2, 0, 1, 0, 0, 2, 1, 1, 1, 1, 0;
    bool ok = check(max_abs(yjm.X[0]) == 0.0, "X_1 = 0");
    ok &= check(max_abs(yjm.X[1] - x2) <= 1e-12, "X_2 fixture");
    ok &= check(max_abs(yjm.X[2] - x3) <= 1e-12, "X_3 fixture");
    ok &= check(max_abs(yjm.X[3] - x4) <= 1e-12, "X_4 fixture");
    return ok;
}

std::vector<Representation> fixture_representations() {
    std::vector<Representation> fixtures;
    for (int n = 3; n <= 8; ++n) fixtures.push_back(permutation_representation(n));
    for (int n = 3; n <= 4; ++n) fixtures.push_back(regular_representation(n));
    fixtures.push_back(irrep_representation(Partition({3, 2})));
    fixtures.push_back(irrep_representation(Partition({2, 2, 1, 1})));
    fixtures.push_back(direct_sum(irrep_representation(Partition({3, 1})),
                                  irrep_representation(Partition({2, 2}))));
    fixtures.push_back(tensor_product(irrep_representation(Partition({3, 1})),
                                      irrep_representation(Partition({2, 1, 1}))));
    fixtures.push_back(tensor_power(irrep_representation(Partition({2, 1})), 3));
    return fixtures;
}

// --- criterion 3: block-diagonalization residuals on the fixture set ---
bool criterion3() {
    bool ok = true;
    for (const auto& rho : fixture_representations()) {
        DecompositionResult r = block_diagonalize(rho);
        const int d = rho.d();
        double orth = max_abs(r.Q.transpose() * r.Q - Eigen::MatrixXd::Identity(d, d));
        ok &= check(orth <= 1e-10, "orthogonality of Q, d=" + std::to_string(d));
        double resid = 0;
        for (int l = 1; l < rho.n(); ++l) {
            Eigen::MatrixXd conj = r.Q.transpose() * rho.dense_generator(l) * r.Q;
            int off = 0;
            for (const auto& c : r.components) {
                Eigen::MatrixXd g = irrep_representation(c.partition).dense_generator(l);
                for (int j = 0; j < c.multiplicity; ++j) {
                    conj.block(off, off, c.dimension, c.dimension) -= g;
                    off += c.dimension;
                }
            }
            resid = std::max(resid, max_abs(conj));
        }
        ok &= check(resid <= 1e-8 * d, "block residual, d=" + std::to_string(d));
    }
    // the known diagonalizer of perm(4) passes the same residual check
    Representation p4 = permutation_representation(4);
    Eigen::MatrixXd known(4, 4);
    double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0), s12 = std::sqrt(12.0);
    known << 1 / s2, 1 / s6, 1 / s12, -0.5,
            -1 / s2, 1 / s6, 1 / s12, -0.5,
             0, -std::sqrt(2.0 / 3.0), 1 / s12, -0.5,
             0, 0, -std::sqrt(3.0) / 2, -0.5;
    ok &= check(max_abs(known.transpose() * known - Eigen::MatrixXd::Identity(4, 4)) <= 1e-10,
                "witness Q orthogonality");
    double wres = 0;
    Representation ir31 = irrep_representation(Partition({3, 1}));
    for (int l = 1; l < 4; ++l) {
        Eigen::MatrixXd conj = known.transpose() * p4.dense_generator(l) * known;
        conj.block(0, 0, 3, 3) -= ir31.dense_generator(l);
        conj(3, 3) -= 1.0;
        wres = std::max(wres, max_abs(conj));
    }
    ok &= check(wres <= 1e-8 * 4, "witness Q block residual");
    return ok;
}

// --- criterion 4: tensor-pair multiplicities equal Kronecker coefficients ---
bool criterion4() {
    bool ok = true;
    for (int n = 3; n <= 6; ++n) {
        auto parts = partitions_of(n);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i; j < parts.size(); ++j) {
                Representation rho = tensor_product(irrep_representation(parts[i]),
                                                    irrep_representation(parts[j]));
                if (rho.d() > 500) continue;
                auto m = as_map(multiplicities(rho));
                for (const auto& nu : parts) {
                    int got = m.count(nu) ? m.at(nu) : 0;
                    long long want = kronecker_coefficient(parts[i], parts[j], nu);
                    if (got != want) {
                        ok = check(false, "g(" + parts[i].to_string() + "," +
                                              parts[j].to_string() + "," + nu.to_string() + ")");
                    }
                }
            }
    }
    return ok;
}

// --- criterion 5: regular representation multiplicities and splits ---
bool criterion5() {
    bool ok = true;
    for (int n = 3; n <= 4; ++n) {
        Representation reg = regular_representation(n);
        DecompositionResult r = block_diagonalize(reg);
        long long total = 0;
        for (const auto& c : r.components) {
            ok &= check(c.multiplicity == static_cast<int>(tableau_count(c.partition)),
                        "a_lambda = d_lambda for " + c.partition.to_string());
            total += static_cast<long long>(c.multiplicity) * c.dimension;
        }
        ok &= check(total == static_cast<long long>(factorial(n)),
                    "sum a_lambda d_lambda = n!");
        ok &= check(r.residual <= 1e-8 * factorial(n),
                    "split residual for regular(" + std::to_string(n) + ")");
    }
    return ok;
}

// --- criterion 6: null-space dimension of the intertwiner system ---
bool criterion6() {
    bool ok = true;
    for (const auto& lambda : {Partition({2, 1}), Partition({3, 1}), Partition({2, 2})}) {
        Representation ir = irrep_representation(lambda);
        const int dl = ir.d();
        for (int a = 1; a <= 3; ++a) {
            const int D = a * dl;
            // a copies of the irreducible, copies of each content vector adjacent
            std::vector<Eigen::MatrixXd> tilde;
            for (int l = 1; l < ir.n(); ++l) {
                Eigen::MatrixXd g = ir.dense_generator(l);
                Eigen::MatrixXd big = Eigen::MatrixXd::Zero(D, D);
                for (int t = 0; t < dl; ++t)
                    for (int u = 0; u < dl; ++u)
                        if (g(t, u) != 0.0)
                            for (int c = 0; c < a; ++c) big(t * a + c, u * a + c) = g(t, u);
                tilde.push_back(std::move(big));
            }
            IsotypicSplit split = split_isotypic(tilde, lambda, a, /*dense_path=*/true);
            std::string tag = lambda.to_string() + " a=" + std::to_string(a);
            ok &= check(split.U.cols() == a, "null-space dimension for " + tag);
            ok &= check(max_abs(split.Qbar.transpose() * split.Qbar -
                                Eigen::MatrixXd::Identity(D, D)) <= 1e-10,
                        "Qbar orthogonality for " + tag);
        }
    }
    return ok;
}

// --- criterion 7: property suite over constructed representations ---
bool criterion7() {
    bool ok = true;
    for (const auto& rho : fixture_representations()) {
        const int d = rho.d();
        YjmMatrices yjm = yjm_matrices(rho);  // throws if commutators exceed 1e-10*d
        auto [Q, spec] = joint_spectrum(rho);
        for (int j = 0; j < rho.n(); ++j) {
            Eigen::MatrixXd D = Q.transpose() * yjm.X[j] * Q;
            for (int k = 0; k < d; ++k) {
                double v = D(k, k);
                long r = std::lround(v);
                ok &= check(std::abs(v - r) <= 0.25, "integer eigenvalue guard");
                ok &= check(r >= 1 - (j + 1) && r <= j, "eigenvalue range for X_" +
                                                            std::to_string(j + 1));
            }
        }
        long long total = 0;
        std::map<Partition, int> counts;
        for (int k = 0; k < d; ++k) {
            std::vector<int> row(rho.n());
            for (int j = 0; j < rho.n(); ++j) row[j] = spec.rows(k, j);
            auto chk = is_valid_content(row);
            ok &= check(chk.ok, "spectrum row is a content vector");
            if (chk.ok) counts[partition_of_content(ContentVector{row})] += 1;
        }
        for (const auto& [lam, rows] : counts) {
            long long dl = static_cast<long long>(tableau_count(lam));
            ok &= check(rows % dl == 0, "row count divisible by d_lambda");
            total += rows;
        }
        ok &= check(total == d, "spectrum rows account for the whole dimension");
    }
    return ok;
}

// --- criterion 8: combinatorial identities ---
bool criterion8() {
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
        std::uint64_t sum = 0;
        for (const auto& lam : partitions_of(n)) {
            std::uint64_t dl = tableau_count(lam);
            sum += dl * dl;
        }
        ok &= check(sum == factorial(n), "sum of d_lambda^2 = n! at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 7; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& t : enumerate_tableaux(lam)) {
                auto c = content_of(t);
                if (!(is_valid_content(c.entries).ok && tableau_of(c) == t &&
                      partition_of_content(c) == lam)) {
                    ok = check(false, "content/tableau round trip for " + lam.to_string());
                }
            }
    ok &= check(partition_of_content(ContentVector{{0, 1, -1, -2, 0, 2, -3}}).parts() ==
                    std::vector<int>({3, 2, 1, 1}),
                "content-to-partition worked example");
    return ok;
}

// --- criterion 9: log-log slope of wall time vs dimension ---
bool criterion9() {
    struct Case { int n, k; };
    std::vector<Case> cases{{5, 1}, {5, 2}, {5, 3}, {5, 4}, {6, 1}, {6, 2}, {6, 3}};
    std::vector<double> logd, logt;
    for (auto [n, k] : cases) {
        std::vector<int> parts{2};
        parts.insert(parts.end(), n - 2, 1);
        Representation rho = tensor_power(irrep_representation(Partition(parts)), k);
        int reps = rho.d() < 50 ? 3 : 1;
        double best = 0;
        for (int r = 0; r < reps; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            multiplicities(rho);
            double s = seconds_since(t0);
            if (r == 0 || s < best) best = s;
        }
        std::cerr << "  d=" << rho.d() << " t=" << best << "s\n";
        logd.push_back(std::log(static_cast<double>(rho.d())));
        logt.push_back(std::log(std::max(best, 1e-6)));
    }
    const auto m = static_cast<double>(logd.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < logd.size(); ++i) {
        sx += logd[i];
        sy += logt[i];
        sxx += logd[i] * logd[i];
        sxy += logd[i] * logt[i];
    }
    double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    std::cerr << "  fitted slope: " << slope << '\n';
    double span = *std::max_element(logd.begin(), logd.end()) -
                  *std::min_element(logd.begin(), logd.end());
    bool ok = check(span >= std::log(10.0), "dimension range spans a decade");
    ok &= check(slope <= 3.5, "slope at most 3.5");
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <criterion 1..9>\n";
        return 2;
    }
    int c = std::atoi(argv[1]);
    bool ok = false;
    try {
        switch (c) {
            case 1: ok = criterion1(); break;
            case 2: ok = criterion2(); break;
            case 3: ok = criterion3(); break;
            case 4: ok = criterion4(); break;
            case 5: ok = criterion5(); break;
            case 6: ok = criterion6(); break;
            case 7: ok = criterion7(); break;
            case 8: ok = criterion8(); break;
            case 9: ok = criterion9(); break;
            default: std::cerr << "usage: acceptance <criterion 1..9>\n"; return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "  exception: " << e.what() << '\n';
        ok = false;
    }
    std::cout << "criterion " << c << ": " << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? 0 : 1;
}
