#include "symdecomp/representation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "symdecomp/irrep.hpp"

namespace symdecomp {

namespace {

double max_abs(const Eigen::MatrixXd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Eigen::SparseMatrix<double> sparse_identity(int d) {
    Eigen::SparseMatrix<double> id(d, d);
    id.setIdentity();
    return id;
}

Eigen::SparseMatrix<double> kron(const Eigen::SparseMatrix<double>& a,
                                 const Eigen::SparseMatrix<double>& b) {
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(a.nonZeros()) * b.nonZeros());
    for (int ka = 0; ka < a.outerSize(); ++ka)
        for (Eigen::SparseMatrix<double>::InnerIterator ia(a, ka); ia; ++ia)
            for (int kb = 0; kb < b.outerSize(); ++kb)
                for (Eigen::SparseMatrix<double>::InnerIterator ib(b, kb); ib; ++ib)
                    trip.emplace_back(ia.row() * b.rows() + ib.row(),
                                      ia.col() * b.cols() + ib.col(),
                                      ia.value() * ib.value());
    Eigen::SparseMatrix<double> out(a.rows() * b.rows(), a.cols() * b.cols());
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

}  // namespace

Representation::Representation(int n, int d, std::vector<Eigen::SparseMatrix<double>> generators)
    : n_(n), d_(d), gens_(std::move(generators)) {
    if (n < 1) throw std::invalid_argument("representation requires n >= 1");
    if (d < 1) throw std::invalid_argument("representation requires d >= 1");
    if (static_cast<int>(gens_.size()) != n - 1)
        throw std::invalid_argument("expected n-1 generators");
    for (const auto& g : gens_)
        if (g.rows() != d || g.cols() != d)
            throw std::invalid_argument("generator dimension mismatch");
}

bool ValidationReport::pass() const { return failing_check().empty(); }

std::string ValidationReport::failing_check() const {
    if (symmetry > tol) return "symmetry";
    if (orthogonality > tol) return "orthogonality";
    if (involution > tol) return "involution";
    if (braid > tol) return "braid";
    if (commutation > tol) return "distant-commutation";
    return {};
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    os << "symmetry=" << symmetry << " orthogonality=" << orthogonality
       << " involution=" << involution << " braid=" << braid
       << " distant-commutation=" << commutation << " tol=" << tol
       << (pass() ? " [pass]" : " [FAIL: " + failing_check() + "]");
    return os.str();
}

Representation permutation_representation(int n) {
    if (n < 2) throw std::invalid_argument("permutation_representation requires n >= 2");
    std::vector<Eigen::SparseMatrix<double>> gens;
    for (int l = 1; l < n; ++l) {
        std::vector<Eigen::Triplet<double>> trip;
        for (int i = 0; i < n; ++i) {
            if (i == l - 1)
                trip.emplace_back(l - 1, l, 1.0);
            else if (i == l)
                trip.emplace_back(l, l - 1, 1.0);
            else
                trip.emplace_back(i, i, 1.0);
        }
        Eigen::SparseMatrix<double> g(n, n);
        g.setFromTriplets(trip.begin(), trip.end());
        gens.push_back(std::move(g));
    }
    return Representation(n, n, std::move(gens));
}

Representation regular_representation(int n, bool override_guard) {
    if (n < 2) throw std::invalid_argument("regular_representation requires n >= 2");
    if (n > 6 && !override_guard)
        throw std::invalid_argument("regular_representation dimension guard: n! too large (pass override to force)");
    std::vector<std::vector<int>> elems;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int d = static_cast<int>(elems.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < d; ++i) index[elems[i]] = i;

    std::vector<Eigen::SparseMatrix<double>> gens;
    for (int l = 1; l < n; ++l) {
        std::vector<Eigen::Triplet<double>> trip;
        for (int col = 0; col < d; ++col) {
            // left multiplication by tau_l: swap the values l, l+1
            std::vector<int> q = elems[col];
            for (auto& v : q)
                if (v == l)
                    v = l + 1;
                else if (v == l + 1)
                    v = l;
            trip.emplace_back(index.at(q), col, 1.0);
        }
        Eigen::SparseMatrix<double> g(d, d);
        g.setFromTriplets(trip.begin(), trip.end());
        gens.push_back(std::move(g));
    }
    return Representation(n, d, std::move(gens));
}

Representation irrep_representation(const Partition& lambda) {
    auto ir = irrep_generators(lambda);
    return Representation(ir.n, ir.dim, std::move(ir.generators));
}

Representation trivial_representation(int n) {
    std::vector<Eigen::SparseMatrix<double>> gens;
    for (int l = 1; l < n; ++l) {
        Eigen::SparseMatrix<double> g(1, 1);
        g.insert(0, 0) = 1.0;
        gens.push_back(std::move(g));
    }
    return Representation(n, 1, std::move(gens));
}

Representation tensor_product(const Representation& a, const Representation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("tensor_product requires equal n");
    std::vector<Eigen::SparseMatrix<double>> gens;
    for (int l = 1; l < a.n(); ++l) gens.push_back(kron(a.generator(l), b.generator(l)));
    return Representation(a.n(), a.d() * b.d(), std::move(gens));
}

Representation tensor_product(const std::vector<Representation>& factors) {
    if (factors.empty()) throw std::invalid_argument("tensor_product of no factors");
    Representation acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor_product(acc, factors[i]);
    return acc;
}

Representation tensor_power(const Representation& rho, int k) {
    if (k < 1) throw std::invalid_argument("tensor_power requires k >= 1");
    Representation acc = rho;
    for (int i = 1; i < k; ++i) acc = tensor_product(acc, rho);
    return acc;
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("direct_sum requires equal n");
    const int d = a.d() + b.d();
    std::vector<Eigen::SparseMatrix<double>> gens;
    for (int l = 1; l < a.n(); ++l) {
        std::vector<Eigen::Triplet<double>> trip;
        const auto& ga = a.generator(l);
        const auto& gb = b.generator(l);
        for (int k = 0; k < ga.outerSize(); ++k)
            for (Eigen::SparseMatrix<double>::InnerIterator it(ga, k); it; ++it)
                trip.emplace_back(it.row(), it.col(), it.value());
        for (int k = 0; k < gb.outerSize(); ++k)
            for (Eigen::SparseMatrix<double>::InnerIterator it(gb, k); it; ++it)
                trip.emplace_back(a.d() + it.row(), a.d() + it.col(), it.value());
        Eigen::SparseMatrix<double> g(d, d);
        g.setFromTriplets(trip.begin(), trip.end());
        gens.push_back(std::move(g));
    }
    return Representation(a.n(), d, std::move(gens));
}

Representation direct_sum(const std::vector<Representation>& summands) {
    if (summands.empty()) throw std::invalid_argument("direct_sum of no summands");
    Representation acc = summands[0];
    for (std::size_t i = 1; i < summands.size(); ++i) acc = direct_sum(acc, summands[i]);
    return acc;
}

Eigen::MatrixXd transposition_matrix(const Representation& rho, int i, int j) {
    if (i < 1 || j <= i || j > rho.n())
        throw std::invalid_argument("transposition_matrix requires 1 <= i < j <= n");
    Eigen::MatrixXd m = rho.dense_generator(j - 1);
    for (int l = j - 2; l >= i; --l) {
        Eigen::MatrixXd g = rho.dense_generator(l);
        m = g * m * g;
    }
    return m;
}

YjmMatrices yjm_matrices(const Representation& rho, double tol) {
    const int n = rho.n();
    const int d = rho.d();
    if (tol < 0) tol = 1e-10 * d;
    YjmMatrices out;
    out.X.resize(n);
    out.X[0] = Eigen::MatrixXd::Zero(d, d);
    for (int j = 2; j <= n; ++j) {
        Eigen::MatrixXd g = rho.dense_generator(j - 1);
        out.X[j - 1] = g * out.X[j - 2] * g + g;  // X_j = G_{j-1} X_{j-1} G_{j-1} + G_{j-1}
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double c = max_abs(out.X[i] * out.X[j] - out.X[j] * out.X[i]);
            if (c > tol)
                throw numerical_error("YJM commutator ||[X_" + std::to_string(i + 1) + ",X_" +
                                      std::to_string(j + 1) + "]|| = " + std::to_string(c) +
                                      " exceeds tolerance; input generators do not define a representation");
        }
    return out;
}

ValidationReport validate_generators(int n, int d,
                                     const std::vector<Eigen::SparseMatrix<double>>& gens,
                                     double tol) {
    if (tol < 0) tol = 1e-8 * d;
    ValidationReport rep;
    rep.tol = tol;
    if (static_cast<int>(gens.size()) != n - 1)
        throw std::invalid_argument("expected n-1 generators");
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
    std::vector<Eigen::MatrixXd> g;
    for (const auto& s : gens) g.emplace_back(s);
    for (const auto& m : g) {
        rep.symmetry = std::max(rep.symmetry, max_abs(m - m.transpose()));
        rep.orthogonality = std::max(rep.orthogonality, max_abs(m.transpose() * m - id));
        rep.involution = std::max(rep.involution, max_abs(m * m - id));
    }
    for (std::size_t l = 0; l + 1 < g.size(); ++l) {
        Eigen::MatrixXd p = g[l] * g[l + 1];
        rep.braid = std::max(rep.braid, max_abs(p * p * p - id));
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 2; j < g.size(); ++j)
            rep.commutation = std::max(rep.commutation, max_abs(g[i] * g[j] - g[j] * g[i]));
    return rep;
}

Representation representation_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open representation file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("representation file parse error: " + std::string(e.what()));
    }
    int n = j.at("n").get<int>();
    int d = j.at("d").get<int>();
    const auto& jg = j.at("generators");
    if (static_cast<int>(jg.size()) != n - 1)
        throw std::invalid_argument("representation file: expected n-1 generator matrices");
    std::vector<Eigen::SparseMatrix<double>> gens;
    for (const auto& jm : jg) {
        std::vector<Eigen::Triplet<double>> trip;
        if (static_cast<int>(jm.size()) != d)
            throw std::invalid_argument("representation file: generator row count != d");
        for (int r = 0; r < d; ++r) {
            if (static_cast<int>(jm[r].size()) != d)
                throw std::invalid_argument("representation file: generator column count != d");
            for (int c = 0; c < d; ++c) {
                double v = jm[r][c].get<double>();
                if (v != 0.0) trip.emplace_back(r, c, v);
            }
        }
        Eigen::SparseMatrix<double> g(d, d);
        g.setFromTriplets(trip.begin(), trip.end());
        gens.push_back(std::move(g));
    }
    auto report = validate_generators(n, d, gens);
    if (!report.pass())
        throw validation_error("representation file failed the " + report.failing_check() +
                               " check: " + report.summary());
    return Representation(n, d, std::move(gens));
}

void write_representation(const Representation& rho, const std::string& path) {
    nlohmann::json j;
    j["n"] = rho.n();
    j["d"] = rho.d();
    auto gens = nlohmann::json::array();
    for (int l = 1; l < rho.n(); ++l) {
        Eigen::MatrixXd g = rho.dense_generator(l);
        auto jm = nlohmann::json::array();
        for (int r = 0; r < rho.d(); ++r) {
            auto row = nlohmann::json::array();
            for (int c = 0; c < rho.d(); ++c) row.push_back(g(r, c));
            jm.push_back(std::move(row));
        }
        gens.push_back(std::move(jm));
    }
    j["generators"] = std::move(gens);
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write representation file: " + path);
    out << j.dump() << '\n';
}

}  // namespace symdecomp
