#include "symdecomp/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "symdecomp/eigensolve.hpp"
#include "symdecomp/irrep.hpp"
#include "symdecomp/oracle.hpp"

namespace symdecomp {

namespace {

double max_abs(const Eigen::MatrixXd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

struct CanonicalReduction {
    DecompositionResult result;                 // Q grouped by component
    std::vector<std::pair<int, int>> ranges;    // (offset, size) per component
    SpectrumMatrix spec;                        // pure lexicographic order
};

CanonicalReduction compute_canonical(const Representation& rho) {
    const int d = rho.d();
    const int n = rho.n();
    auto [Q, spec] = joint_spectrum(rho);

    // group rows by partition, ordered by first occurrence in the sort
    std::vector<Partition> order;
    std::map<Partition, std::vector<int>> members;
    std::vector<Partition> row_partition;
    row_partition.reserve(d);
    for (int i = 0; i < d; ++i) {
        ContentVector c;
        c.entries.resize(n);
        for (int j = 0; j < n; ++j) c.entries[j] = spec.rows(i, j);
        Partition p = partition_of_content(c);
        if (!members.count(p)) order.push_back(p);
        members[p].push_back(i);
    }

    CanonicalReduction out;
    out.spec = spec;
    out.result.canonical_only = true;
    std::vector<int> perm;
    perm.reserve(d);
    int offset = 0;
    for (const auto& p : order) {
        const auto& rows = members[p];
        int atilde = static_cast<int>(rows.size());
        int dim = static_cast<int>(tableau_count(p));
        if (atilde % dim != 0)
            throw numerical_error("inconsistent spectrum: partition " + p.to_string() + " occurs " +
                                  std::to_string(atilde) + " times, not a multiple of d_lambda = " +
                                  std::to_string(dim));
        int a = atilde / dim;
        // each distinct content vector must occur exactly a times
        for (int i = 0; i < atilde;) {
            int j = i;
            while (j < atilde && (spec.rows.row(rows[j]).array() == spec.rows.row(rows[i]).array()).all()) ++j;
            if (j - i != a)
                throw numerical_error("inconsistent spectrum: content vector repeated " +
                                      std::to_string(j - i) + " times, expected " + std::to_string(a));
            i = j;
        }
        out.result.components.push_back({p, a, dim});
        out.ranges.emplace_back(offset, atilde);
        offset += atilde;
        perm.insert(perm.end(), rows.begin(), rows.end());
    }

    Eigen::MatrixXd Qg(d, d);
    for (int i = 0; i < d; ++i) Qg.col(i) = Q.col(perm[i]);
    out.result.Q = std::move(Qg);

    int total = 0;
    for (const auto& c : out.result.components) total += c.multiplicity * c.dimension;
    if (total != d)
        throw numerical_error("inconsistent spectrum: sum a_k d_k = " + std::to_string(total) +
                              " != d = " + std::to_string(d));
    return out;
}

// Resolve the per-basis-vector sign ambiguity of a multiplicity-free
// canonical block against the Young orthogonal form. Tableaux are
// connected under adjacent swaps, so a sign propagation along the
// off-diagonal entries of the generators determines everything.
Eigen::VectorXd sign_align(const std::vector<Eigen::MatrixXd>& rho_tilde_gens,
                           const IrrepGenerators& ir) {
    const int d = ir.dim;
    Eigen::VectorXd D = Eigen::VectorXd::Zero(d);
    D(0) = 1.0;
    std::vector<int> queue{0};
    std::vector<std::vector<std::pair<int, int>>> adj(d);  // (neighbour, generator index)
    for (std::size_t l = 0; l < ir.generators.size(); ++l) {
        const auto& g = ir.generators[l];
        for (int k = 0; k < g.outerSize(); ++k)
            for (Eigen::SparseMatrix<double>::InnerIterator it(g, k); it; ++it)
                if (it.row() != it.col())
                    adj[it.row()].emplace_back(it.col(), static_cast<int>(l));
    }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (auto [w, l] : adj[v]) {
            if (D(w) != 0.0) continue;
            double ref = ir.generators[l].coeff(v, w);  // > 0 by construction
            double got = rho_tilde_gens[l](v, w);
            D(w) = (got * ref >= 0) ? D(v) : -D(v);
            queue.push_back(w);
        }
    }
    for (int i = 0; i < d; ++i)
        if (D(i) == 0.0) D(i) = 1.0;
    return D;
}

}  // namespace

std::pair<Eigen::MatrixXd, SpectrumMatrix> joint_spectrum(const Representation& rho) {
    const int n = rho.n();
    const int d = rho.d();
    YjmMatrices yjm = yjm_matrices(rho);
    std::vector<int> bounds(n);
    for (int j = 1; j <= n; ++j) bounds[j - 1] = j - 1;
    auto jd = simultaneous_diagonalize(yjm.X, bounds);

    std::vector<int> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        for (int j = 0; j < n; ++j) {
            if (jd.diagonals(a, j) != jd.diagonals(b, j)) return jd.diagonals(a, j) < jd.diagonals(b, j);
        }
        return false;
    });

    SpectrumMatrix spec;
    spec.rows.resize(d, n);
    Eigen::MatrixXd Q(d, d);
    for (int i = 0; i < d; ++i) {
        spec.rows.row(i) = jd.diagonals.row(idx[i]);
        Q.col(i) = jd.Q.col(idx[i]);
    }
    for (int i = 0; i < d; ++i) {
        std::vector<int> row(n);
        for (int j = 0; j < n; ++j) row[j] = spec.rows(i, j);
        auto check = is_valid_content(row);
        if (!check.ok)
            throw numerical_error("joint spectrum row " + std::to_string(i) +
                                  " is not a content vector: " + check.violation);
    }
    return {std::move(Q), std::move(spec)};
}

DecompositionResult multiplicities(const Representation& rho) {
    auto canon = compute_canonical(rho);
    // canonical residual: off-diagonal leakage of the conjugated YJM family
    YjmMatrices yjm = yjm_matrices(rho);
    double res = 0;
    for (int j = 1; j < rho.n(); ++j) {
        Eigen::MatrixXd c = canon.result.Q.transpose() * yjm.X[j] * canon.result.Q;
        c.diagonal().setZero();
        res = std::max(res, max_abs(c));
    }
    canon.result.residual = res;
    return canon.result;
}

IsotypicSplit split_isotypic(const std::vector<Eigen::MatrixXd>& rho_tilde_gens,
                             const Partition& lambda, int a, bool dense_path) {
    auto ir = irrep_generators(lambda);
    const int dl = ir.dim;
    const int D = a * dl;
    const int ngen = static_cast<int>(rho_tilde_gens.size());
    for (const auto& g : rho_tilde_gens)
        if (g.rows() != D || g.cols() != D)
            throw std::invalid_argument("split_isotypic: block dimension != a * d_lambda");

    Eigen::MatrixXd null_basis;  // rows indexed by restricted/full vec coordinates
    if (dense_path) {
        Eigen::MatrixXd M(ngen * D * dl, D * dl);
        for (int l = 0; l < ngen; ++l) {
            Eigen::MatrixXd rl = Eigen::MatrixXd(ir.generators[l]);
            Eigen::MatrixXd blk = Eigen::MatrixXd::Zero(D * dl, D * dl);
            // vec(rho~ Qbar - Qbar rho_lambda), column-major vec
            for (int q = 0; q < dl; ++q) blk.block(q * D, q * D, D, D) = rho_tilde_gens[l];
            for (int q = 0; q < dl; ++q)
                for (int t = 0; t < dl; ++t)
                    blk.block(q * D, t * D, D, D).diagonal().array() -= rl(q, t);
            M.middleRows(l * D * dl, D * dl) = blk;
        }
        Eigen::MatrixXd U = nullspace_orthonormal(M);
        if (U.cols() != a)
            throw numerical_error("isotypic null space has dimension " + std::to_string(U.cols()) +
                                  ", expected multiplicity " + std::to_string(a));
        IsotypicSplit out;
        out.U = U;
        out.Qbar.setZero(D, D);
        for (int j = 0; j < a; ++j)
            for (int t = 0; t < dl; ++t)
                out.Qbar.col(j * dl + t) = std::sqrt(static_cast<double>(dl)) * U.col(j).segment(t * D, D);
        double orth = max_abs(out.Qbar.transpose() * out.Qbar - Eigen::MatrixXd::Identity(D, D));
        if (orth > 1e-8 * D)
            throw numerical_error("isotypic split produced a non-orthogonal Qbar (residual " +
                                  std::to_string(orth) + ")");
        return out;
    }

    // Restricted path: the canonical block keeps copies of each content
    // vector adjacent, so Qbar(s, t) can only be nonzero for s in
    // [t*a, t*a + a). Column (t, c) of the restricted system corresponds
    // to that coordinate.
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(ngen * D * dl, D);
    for (int l = 0; l < ngen; ++l) {
        Eigen::MatrixXd rl = Eigen::MatrixXd(ir.generators[l]);
        const int base = l * D * dl;
        for (int t = 0; t < dl; ++t)
            for (int c = 0; c < a; ++c) {
                const int col = t * a + c;
                const int s = t * a + c;
                for (int p = 0; p < D; ++p) M(base + t * D + p, col) += rho_tilde_gens[l](p, s);
                for (int q = 0; q < dl; ++q) M(base + q * D + s, col) -= rl(q, t);
            }
    }
    Eigen::MatrixXd U = nullspace_orthonormal(M);
    if (U.cols() != a)
        throw numerical_error("isotypic null space has dimension " + std::to_string(U.cols()) +
                              ", expected multiplicity " + std::to_string(a));
    IsotypicSplit out;
    out.U = U;
    out.Qbar.setZero(D, D);
    const double scale = std::sqrt(static_cast<double>(dl));
    for (int j = 0; j < a; ++j)
        for (int t = 0; t < dl; ++t)
            for (int c = 0; c < a; ++c)
                out.Qbar(t * a + c, j * dl + t) = scale * U(t * a + c, j);
    double orth = max_abs(out.Qbar.transpose() * out.Qbar - Eigen::MatrixXd::Identity(D, D));
    if (orth > 1e-8 * D)
        throw numerical_error("isotypic split produced a non-orthogonal Qbar (residual " +
                              std::to_string(orth) + ")");
    return out;
}

DecompositionResult block_diagonalize(const Representation& rho, double tol) {
    const int d = rho.d();
    if (tol < 0) tol = default_tolerance() * d;
    auto canon = compute_canonical(rho);
    DecompositionResult result = canon.result;
    result.canonical_only = false;

    std::vector<IrrepGenerators> irreps;
    for (std::size_t k = 0; k < result.components.size(); ++k)
        irreps.push_back(irrep_generators(result.components[k].partition));

    for (std::size_t k = 0; k < result.components.size(); ++k) {
        auto [off, sz] = canon.ranges[k];
        const auto& comp = result.components[k];
        Eigen::MatrixXd Qk = result.Q.middleCols(off, sz);
        std::vector<Eigen::MatrixXd> block_gens;
        for (int l = 1; l < rho.n(); ++l)
            block_gens.push_back(Qk.transpose() * (rho.generator(l) * Qk));
        if (comp.multiplicity == 1) {
            Eigen::VectorXd D = sign_align(block_gens, irreps[k]);
            result.Q.middleCols(off, sz) = Qk * D.asDiagonal();
        } else {
            auto split = split_isotypic(block_gens, comp.partition, comp.multiplicity);
            result.Q.middleCols(off, sz) = Qk * split.Qbar;
        }
    }

    // residual against the direct sum of canonical irreducibles
    double res = 0;
    for (int l = 1; l < rho.n(); ++l) {
        Eigen::MatrixXd conj = result.Q.transpose() * (rho.generator(l) * result.Q);
        int off = 0;
        for (std::size_t k = 0; k < result.components.size(); ++k) {
            const auto& comp = result.components[k];
            Eigen::MatrixXd gl = Eigen::MatrixXd(irreps[k].generators[l - 1]);
            for (int copy = 0; copy < comp.multiplicity; ++copy) {
                conj.block(off, off, comp.dimension, comp.dimension) -= gl;
                off += comp.dimension;
            }
        }
        res = std::max(res, max_abs(conj));
    }
    result.residual = res;
    if (res > tol)
        throw numerical_error("block-diagonalization residual " + std::to_string(res) +
                              " exceeds tolerance " + std::to_string(tol));
    return result;
}

VerificationReport verify_decomposition(const Representation& rho,
                                        const DecompositionResult& result) {
    VerificationReport rep;
    const int d = rho.d();
    rep.orthogonality =
        max_abs(result.Q.transpose() * result.Q - Eigen::MatrixXd::Identity(d, d));

    if (result.canonical_only) {
        // cross-component leakage of the conjugated generators
        std::vector<std::pair<int, int>> ranges;
        int off = 0;
        for (const auto& c : result.components) {
            ranges.emplace_back(off, c.multiplicity * c.dimension);
            off += c.multiplicity * c.dimension;
        }
        for (int l = 1; l < rho.n(); ++l) {
            Eigen::MatrixXd conj = result.Q.transpose() * (rho.generator(l) * result.Q);
            for (auto [o, sz] : ranges) conj.block(o, o, sz, sz).setZero();
            rep.block_residual = std::max(rep.block_residual, max_abs(conj));
        }
    } else {
        for (int l = 1; l < rho.n(); ++l) {
            Eigen::MatrixXd conj = result.Q.transpose() * (rho.generator(l) * result.Q);
            int off = 0;
            for (const auto& comp : result.components) {
                Eigen::MatrixXd gl =
                    Eigen::MatrixXd(irrep_generators(comp.partition).generators[l - 1]);
                for (int copy = 0; copy < comp.multiplicity; ++copy) {
                    conj.block(off, off, comp.dimension, comp.dimension) -= gl;
                    off += comp.dimension;
                }
            }
            rep.block_residual = std::max(rep.block_residual, max_abs(conj));
        }
    }

    if (rho.n() <= 7) {
        rep.oracle_checked = true;
        std::map<Partition, int> found;
        for (const auto& c : result.components) found[c.partition] = c.multiplicity;
        for (const auto& lam : partitions_of(rho.n())) {
            int expect = multiplicity_by_characters(rho, lam);
            int got = found.count(lam) ? found[lam] : 0;
            if (expect != got) {
                rep.oracle_agrees = false;
                rep.notes.push_back("multiplicity mismatch for " + lam.to_string() + ": pipeline " +
                                    std::to_string(got) + ", characters " + std::to_string(expect));
            }
        }
    }
    return rep;
}

nlohmann::json to_json(const DecompositionResult& result) {
    nlohmann::json j;
    auto comps = nlohmann::json::array();
    for (const auto& c : result.components) {
        nlohmann::json jc;
        jc["partition"] = c.partition.parts();
        jc["multiplicity"] = c.multiplicity;
        jc["dimension"] = c.dimension;
        comps.push_back(std::move(jc));
    }
    j["components"] = std::move(comps);
    j["residual"] = result.residual;
    return j;
}

}  // namespace symdecomp
