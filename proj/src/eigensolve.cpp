#include "symdecomp/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace symdecomp {

namespace {

double max_abs(const Eigen::MatrixXd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

void tridiagonalize(const Eigen::MatrixXd& A, Eigen::MatrixXd& QH, Tridiagonal& T) {
    const int d = static_cast<int>(A.rows());
    if (A.cols() != d) throw std::invalid_argument("tridiagonalize requires a square matrix");
    double scale = std::max(1.0, max_abs(A));
    if (max_abs(A - A.transpose()) > 1e-8 * scale)
        throw std::invalid_argument("tridiagonalize requires a symmetric matrix");

    Eigen::MatrixXd M = 0.5 * (A + A.transpose());
    QH = Eigen::MatrixXd::Identity(d, d);
    for (int k = 0; k + 2 < d; ++k) {
        Eigen::VectorXd x = M.col(k).segment(k + 1, d - k - 1);
        double sigma = x.norm();
        if (sigma <= 1e-15 * scale) continue;
        Eigen::VectorXd v = x;
        v(0) += (x(0) >= 0 ? sigma : -sigma);
        double beta = 2.0 / v.squaredNorm();
        auto rows = Eigen::seq(k + 1, d - 1);
        // two-sided reflector update, then accumulate into QH
        Eigen::RowVectorXd w = v.transpose() * M(rows, Eigen::all);
        M(rows, Eigen::all).noalias() -= beta * v * w;
        Eigen::VectorXd u = M(Eigen::all, rows) * v;
        M(Eigen::all, rows).noalias() -= beta * u * v.transpose();
        Eigen::VectorXd q = QH(Eigen::all, rows) * v;
        QH(Eigen::all, rows).noalias() -= beta * q * v.transpose();
    }
    T.diag = M.diagonal();
    T.off.resize(std::max(0, d - 1));
    for (int i = 0; i + 1 < d; ++i) T.off(i) = 0.5 * (M(i + 1, i) + M(i, i + 1));
}

int sturm_count_below(const Tridiagonal& T, double x) {
    const int d = static_cast<int>(T.diag.size());
    int count = 0;
    double q = 1.0;
    for (int i = 0; i < d; ++i) {
        double offsq = (i > 0) ? T.off(i - 1) * T.off(i - 1) : 0.0;
        if (q == 0.0) q = 1e-300;
        q = (T.diag(i) - x) - offsq / q;
        if (q < 0) ++count;
    }
    return count;
}

namespace {

// LU factorization of (T - shift I) with partial pivoting. Row swaps give
// U bandwidth two; L is unit lower bidiagonal up to the recorded swaps.
struct TridiagLU {
    Eigen::VectorXd u0, u1, u2;  // main, first, second superdiagonal of U
    Eigen::VectorXd l;           // elimination multipliers
    std::vector<bool> swapped;
};

TridiagLU tridiag_lu(const Tridiagonal& T, double shift) {
    const int d = static_cast<int>(T.diag.size());
    TridiagLU F;
    F.u0 = Eigen::VectorXd::Zero(d);
    F.u1 = Eigen::VectorXd::Zero(std::max(0, d - 1));
    F.u2 = Eigen::VectorXd::Zero(std::max(0, d - 2));
    F.l = Eigen::VectorXd::Zero(std::max(0, d - 1));
    F.swapped.assign(std::max<std::size_t>(0, d - 1), false);
    // (x, y, z): current pivot row's entries at columns (i, i+1, i+2)
    double x = T.diag(0) - shift;
    double y = (d > 1) ? T.off(0) : 0.0;
    double z = 0.0;
    for (int i = 0; i + 1 < d; ++i) {
        double b = T.off(i);
        double p = T.diag(i + 1) - shift;
        double q = (i + 2 < d) ? T.off(i + 1) : 0.0;
        if (std::abs(b) > std::abs(x)) {
            F.swapped[i] = true;
            std::swap(x, b);
            std::swap(y, p);
            std::swap(z, q);
        }
        double m = (x != 0.0) ? b / x : 0.0;
        F.l(i) = m;
        F.u0(i) = x;
        F.u1(i) = y;
        if (i + 2 < d) F.u2(i) = z;
        x = p - m * y;
        y = q - m * z;
        z = 0.0;
    }
    F.u0(d - 1) = x;
    return F;
}

// Solve (T - shift I) x = b from the factorization; pivots smaller than
// bump are replaced by +-bump so the solve survives exact singularity.
Eigen::VectorXd tridiag_lu_solve(const TridiagLU& F, Eigen::VectorXd b, double bump) {
    const int d = static_cast<int>(b.size());
    for (int i = 0; i + 1 < d; ++i) {
        if (F.swapped[i]) std::swap(b(i), b(i + 1));
        b(i + 1) -= F.l(i) * b(i);
    }
    Eigen::VectorXd x(d);
    for (int i = d - 1; i >= 0; --i) {
        double num = b(i);
        if (i + 1 < d) num -= F.u1(i) * x(i + 1);
        if (i + 2 < d) num -= F.u2(i) * x(i + 2);
        double piv = F.u0(i);
        if (std::abs(piv) < bump) piv = (piv < 0 ? -bump : bump);
        x(i) = num / piv;
    }
    return x;
}

double tridiag_residual(const Tridiagonal& T, double shift, const Eigen::VectorXd& v) {
    const int d = static_cast<int>(v.size());
    Eigen::VectorXd r = (T.diag.array() - shift).matrix().cwiseProduct(v);
    for (int i = 0; i + 1 < d; ++i) {
        r(i) += T.off(i) * v(i + 1);
        r(i + 1) += T.off(i) * v(i);
    }
    return r.norm();
}

}  // namespace

EigenResult integer_eigen_decompose(const Eigen::MatrixXd& A, int bound) {
    const int d = static_cast<int>(A.rows());
    EigenResult res;
    if (d == 1) {
        double raw = A(0, 0);
        int m = static_cast<int>(std::lround(raw));
        if (std::abs(raw - m) >= 0.25)
            throw numerical_error("eigenvalue " + std::to_string(raw) + " is not near an integer");
        res.Q = Eigen::MatrixXd::Ones(1, 1);
        res.values = Eigen::VectorXi::Constant(1, m);
        res.residual = std::abs(raw - m);
        return res;
    }

    Eigen::MatrixXd QH;
    Tridiagonal T;
    tridiagonalize(A, QH, T);
    double scale = std::max(1.0, T.diag.cwiseAbs().maxCoeff() + (d > 1 ? T.off.cwiseAbs().maxCoeff() : 0.0));

    res.Q.resize(d, d);
    res.values.resize(d);
    int filled = 0;
    std::mt19937 rng(0x5ecd5eedu);
    std::normal_distribution<double> gauss;
    for (int m = -bound; m <= bound; ++m) {
        int mult = sturm_count_below(T, m + 0.5) - sturm_count_below(T, m - 0.5);
        if (mult == 0) continue;
        Eigen::MatrixXd V(d, mult);
        if (mult == d) {
            V.setIdentity();
        } else {
            // Inverse iteration. The exact shift would make the factorization
            // singular with wildly uneven amplification across the cluster, so
            // the shift is moved off the integer by a hair: the true eigenvalues
            // are exact integers, hence all cluster directions are amplified by
            // the same 1/delta and reorthogonalization extracts a clean basis.
            double delta = 1e-10 * scale;
            TridiagLU F = tridiag_lu(T, m + delta);
            double bump = 1e-16 * scale;
            double resid_tol = 1e-13 * scale * std::sqrt(static_cast<double>(d));
            for (int col = 0; col < mult; ++col) {
                Eigen::VectorXd v(d);
                for (int i = 0; i < d; ++i) v(i) = gauss(rng);
                v.normalize();
                bool converged = false;
                for (int it = 0; it < 8 && !converged; ++it) {
                    for (int j = 0; j < col; ++j) v -= V.col(j).dot(v) * V.col(j);
                    v = tridiag_lu_solve(F, v, bump);
                    for (int j = 0; j < col; ++j) v -= V.col(j).dot(v) * V.col(j);
                    double nrm = v.norm();
                    if (nrm == 0.0) {
                        for (int i = 0; i < d; ++i) v(i) = gauss(rng);
                        nrm = v.norm();
                    }
                    v /= nrm;
                    converged = tridiag_residual(T, m, v) <= resid_tol;
                }
                if (!converged)
                    throw numerical_error("integer eigensolve: inverse iteration stalled at shift " +
                                          std::to_string(m) + " (spectrum not integer?)");
                V.col(col) = v;
            }
        }
        if (mult > 1 && mult < d) V = gram_schmidt(V);
        for (int col = 0; col < mult; ++col) {
            if (filled >= d)
                throw numerical_error("integer eigensolve: eigenvector count exceeds dimension");
            Eigen::VectorXd v = QH * V.col(col);
            double raw = v.dot(A * v);
            if (std::abs(raw - m) >= 0.25)
                throw numerical_error("integer eigensolve: Rayleigh quotient " +
                                      std::to_string(raw) + " too far from claimed eigenvalue " +
                                      std::to_string(m));
            res.Q.col(filled) = v;
            res.values(filled) = m;
            ++filled;
        }
    }
    if (filled != d)
        throw numerical_error("integer eigensolve: found " + std::to_string(filled) +
                              " eigenvectors for dimension " + std::to_string(d) +
                              " (spectrum not integer in range?)");
    Eigen::MatrixXd D = res.Q.transpose() * A * res.Q;
    D.diagonal() -= res.values.cast<double>();
    res.residual = max_abs(D);
    return res;
}

JointDiagonalization simultaneous_diagonalize(const std::vector<Eigen::MatrixXd>& Xs,
                                              const std::vector<int>& bounds,
                                              double tol) {
    if (Xs.empty()) throw std::invalid_argument("simultaneous_diagonalize: empty family");
    if (bounds.size() != Xs.size())
        throw std::invalid_argument("simultaneous_diagonalize: bounds size mismatch");
    const int d = static_cast<int>(Xs[0].rows());
    const int m = static_cast<int>(Xs.size());
    if (tol < 0) tol = 1e-10 * d;

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            double c = max_abs(Xs[i] * Xs[j] - Xs[j] * Xs[i]);
            if (c > tol)
                throw numerical_error("matrices " + std::to_string(i) + " and " + std::to_string(j) +
                                      " do not commute (||[A,B]|| = " + std::to_string(c) + ")");
        }

    JointDiagonalization out;
    out.Q = Eigen::MatrixXd::Identity(d, d);
    out.diagonals.setZero(d, m);
    std::vector<std::pair<int, int>> blocks{{0, d}};  // (offset, size)

    for (int j = 0; j < m; ++j) {
        Eigen::MatrixXd Xc = out.Q.transpose() * Xs[j] * out.Q;
        // deflation invariant: entries across distinct blocks must vanish
        double cross = 0;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            auto [off, sz] = blocks[b];
            cross = std::max(cross, max_abs(Xc.block(off, 0, sz, off)));
            int right = off + sz;
            cross = std::max(cross, max_abs(Xc.block(off, right, sz, d - right)));
        }
        if (cross > std::max(tol, 1e-9 * d))
            throw numerical_error("deflation failure: cross-block entry " + std::to_string(cross));

        std::vector<std::pair<int, int>> next;
        for (auto [off, sz] : blocks) {
            if (sz == 1) {
                double raw = Xc(off, off);
                int v = static_cast<int>(std::lround(raw));
                if (std::abs(raw - v) >= 0.25)
                    throw numerical_error("diagonal entry not near integer: " + std::to_string(raw));
                out.diagonals(off, j) = v;
                next.emplace_back(off, 1);
                continue;
            }
            EigenResult er = integer_eigen_decompose(Xc.block(off, off, sz, sz), bounds[j]);
            out.Q.middleCols(off, sz) = out.Q.middleCols(off, sz) * er.Q;
            for (int i = 0; i < sz; ++i) out.diagonals(off + i, j) = er.values(i);
            int start = 0;
            for (int i = 1; i <= sz; ++i) {
                if (i == sz || er.values(i) != er.values(start)) {
                    next.emplace_back(off + start, i - start);
                    start = i;
                }
            }
        }
        blocks = std::move(next);
    }
    return out;
}

Eigen::MatrixXd nullspace_orthonormal(const Eigen::MatrixXd& A, double rank_tol) {
    if (A.size() == 0) return Eigen::MatrixXd::Identity(A.cols(), A.cols());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double smax = sv.size() > 0 ? sv(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > rank_tol * std::max(smax, 1e-300)) ++rank;
    if (smax == 0.0) rank = 0;
    return svd.matrixV().rightCols(A.cols() - rank);
}

Eigen::MatrixXd gram_schmidt(const Eigen::MatrixXd& columns) {
    Eigen::MatrixXd Q = columns;
    const int k = static_cast<int>(Q.cols());
    double scale = std::max(1.0, max_abs(columns));
    for (int pass = 0; pass < 2; ++pass)
        for (int j = 0; j < k; ++j) {
            for (int i = 0; i < j; ++i) Q.col(j) -= Q.col(i).dot(Q.col(j)) * Q.col(i);
            double nrm = Q.col(j).norm();
            if (nrm < 1e-10 * scale)
                throw validation_error("gram_schmidt: column " + std::to_string(j) +
                                       " is linearly dependent on earlier columns");
            Q.col(j) /= nrm;
        }
    return Q;
}

Eigen::MatrixXd nullspace_gram_schmidt(const Eigen::MatrixXd& A, double rank_tol) {
    const int cols = static_cast<int>(A.cols());
    if (A.size() == 0) return Eigen::MatrixXd::Identity(cols, cols);
    double scale = std::max(max_abs(A), 1e-300);
    // orthonormal basis of the row space, dependent rows dropped
    std::vector<Eigen::VectorXd> basis;
    for (int r = 0; r < A.rows(); ++r) {
        Eigen::VectorXd v = A.row(r).transpose();
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) v -= b.dot(v) * b;
        if (v.norm() > rank_tol * scale * std::sqrt(static_cast<double>(cols)))
            basis.push_back(v / v.norm());
    }
    // complement: project coordinate vectors against the row-space basis
    std::vector<Eigen::VectorXd> comp;
    for (int i = 0; i < cols && static_cast<int>(basis.size() + comp.size()) < cols; ++i) {
        Eigen::VectorXd v = Eigen::VectorXd::Unit(cols, i);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : basis) v -= b.dot(v) * b;
            for (const auto& b : comp) v -= b.dot(v) * b;
        }
        if (v.norm() > 0.5 / std::sqrt(static_cast<double>(cols))) comp.push_back(v / v.norm());
    }
    Eigen::MatrixXd out(cols, comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) out.col(static_cast<int>(i)) = comp[i];
    return out;
}

}  // namespace symdecomp
