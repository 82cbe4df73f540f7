#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "symdecomp/eigensolve.hpp"
#include "symdecomp/representation.hpp"

using namespace symdecomp;

namespace {
double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

Eigen::MatrixXd random_symmetric_integer_spectrum(int d, const std::vector<int>& spectrum,
                                                  unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss;
    Eigen::MatrixXd M(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) M(i, j) = gauss(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(M);
    Eigen::MatrixXd Q = qr.householderQ();
    Eigen::VectorXd lam(d);
    for (int i = 0; i < d; ++i) lam(i) = spectrum[i % spectrum.size()];
    return Q * lam.asDiagonal() * Q.transpose();
}
}  // namespace

TEST_CASE("tridiagonalize: similarity and structure") {
    Eigen::MatrixXd A = random_symmetric_integer_spectrum(12, {-3, -1, 0, 2, 4}, 7);
    Eigen::MatrixXd QH;
    Tridiagonal T;
    tridiagonalize(A, QH, T);
    Eigen::MatrixXd Tfull = Eigen::MatrixXd::Zero(12, 12);
    Tfull.diagonal() = T.diag;
    for (int i = 0; i < 11; ++i) Tfull(i, i + 1) = Tfull(i + 1, i) = T.off(i);
    CHECK(max_abs(QH.transpose() * QH - Eigen::MatrixXd::Identity(12, 12)) <= 1e-12);
    CHECK(max_abs(QH.transpose() * A * QH - Tfull) <= 1e-10);

    Eigen::MatrixXd asym = A;
    asym(0, 1) += 1;
    CHECK_THROWS_AS(tridiagonalize(asym, QH, T), std::invalid_argument);
}

TEST_CASE("sturm_count_below agrees with Eigen's eigenvalues") {
    Eigen::MatrixXd A = random_symmetric_integer_spectrum(10, {-2, -2, 1, 3}, 11);
    Eigen::MatrixXd QH;
    Tridiagonal T;
    tridiagonalize(A, QH, T);
    Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(A).eigenvalues();
    for (double x : {-3.0, -1.5, 0.5, 2.0, 2.5, 4.0}) {
        int expect = static_cast<int>(std::count_if(
            ev.data(), ev.data() + ev.size(), [x](double v) { return v < x; }));
        CHECK(sturm_count_below(T, x) == expect);
    }
}

TEST_CASE("integer_eigen_decompose on the S_4 permutation YJM matrices") {
    Representation rho = permutation_representation(4);
    YjmMatrices yjm = yjm_matrices(rho);

    EigenResult r2 = integer_eigen_decompose(yjm.X[1], 1);
    std::vector<int> v2(r2.values.data(), r2.values.data() + 4);
    CHECK(v2 == std::vector<int>({-1, 1, 1, 1}));
    CHECK(r2.residual <= 1e-10);

    EigenResult r4 = integer_eigen_decompose(yjm.X[3], 3);
    std::vector<int> v4(r4.values.data(), r4.values.data() + 4);
    CHECK(v4 == std::vector<int>({-1, 2, 2, 3}));
    CHECK(r4.residual <= 1e-10);
    CHECK(max_abs(r4.Q.transpose() * r4.Q - Eigen::MatrixXd::Identity(4, 4)) <= 1e-10);
}

TEST_CASE("integer_eigen_decompose on random matrices with clustered spectra") {
    for (unsigned seed : {1u, 2u, 3u}) {
        Eigen::MatrixXd A = random_symmetric_integer_spectrum(20, {-4, -1, -1, 0, 2, 2, 2, 5}, seed);
        EigenResult r = integer_eigen_decompose(A, 5);
        CHECK(r.residual <= 1e-8);
        CHECK(max_abs(r.Q.transpose() * r.Q - Eigen::MatrixXd::Identity(20, 20)) <= 1e-10);
        for (int i = 0; i + 1 < 20; ++i) CHECK(r.values(i) <= r.values(i + 1));
    }
}

TEST_CASE("integer_eigen_decompose rejects a non-integer spectrum") {
    Eigen::MatrixXd A(2, 2);
    A << 0.4, 0, 0, 1.6;
    CHECK_THROWS_AS(integer_eigen_decompose(A, 2), numerical_error);
}

TEST_CASE("simultaneous_diagonalize of the S_4 permutation YJM family") {
    Representation rho = permutation_representation(4);
    YjmMatrices yjm = yjm_matrices(rho);
    std::vector<Eigen::MatrixXd> Xs(yjm.X.begin() + 1, yjm.X.end());
    std::vector<int> bounds{1, 2, 3};
    JointDiagonalization jd = simultaneous_diagonalize(Xs, bounds);
    CHECK(max_abs(jd.Q.transpose() * jd.Q - Eigen::MatrixXd::Identity(4, 4)) <= 1e-10);
    for (std::size_t j = 0; j < Xs.size(); ++j) {
        Eigen::MatrixXd D = jd.Q.transpose() * Xs[j] * jd.Q;
        for (int k = 0; k < 4; ++k) {
            CHECK(std::abs(D(k, k) - jd.diagonals(k, static_cast<int>(j))) <= 1e-8);
            D(k, k) = 0;
        }
        CHECK(max_abs(D) <= 1e-8);
    }
}

TEST_CASE("simultaneous_diagonalize rejects non-commuting matrices") {
    Eigen::MatrixXd A(2, 2), B(2, 2);
    A << 1, 0, 0, -1;
    B << 0, 1, 1, 0;
    CHECK_THROWS_AS(simultaneous_diagonalize({A, B}, {1, 1}), numerical_error);
}

TEST_CASE("null-space routines agree and are orthonormal") {
    Eigen::MatrixXd A(3, 4);
    A << 1, 2, 0, 1, 0, 0, 1, -1, 1, 2, 1, 0;  // rank 2, nullity 2
    for (auto* f : {&nullspace_orthonormal, &nullspace_gram_schmidt}) {
        Eigen::MatrixXd N = (*f)(A, 1e-10);
        REQUIRE(N.cols() == 2);
        CHECK(max_abs(A * N) <= 1e-12);
        CHECK(max_abs(N.transpose() * N - Eigen::MatrixXd::Identity(2, 2)) <= 1e-12);
    }
    CHECK(nullspace_orthonormal(Eigen::MatrixXd::Identity(3, 3)).cols() == 0);
    CHECK(nullspace_gram_schmidt(Eigen::MatrixXd::Identity(3, 3)).cols() == 0);
}

TEST_CASE("gram_schmidt orthonormalizes and flags dependence") {
    Eigen::MatrixXd C(4, 3);
    C << 1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1;
    Eigen::MatrixXd Qc = gram_schmidt(C);
    CHECK(max_abs(Qc.transpose() * Qc - Eigen::MatrixXd::Identity(3, 3)) <= 1e-12);
    // same span: projecting C onto Q reproduces C
    CHECK(max_abs(Qc * (Qc.transpose() * C) - C) <= 1e-12);

    Eigen::MatrixXd dep(3, 2);
    dep << 1, 2, 1, 2, 0, 0;
    CHECK_THROWS_AS(gram_schmidt(dep), validation_error);
}
