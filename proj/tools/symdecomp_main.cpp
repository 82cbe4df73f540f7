#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symdecomp/decompose.hpp"
#include "symdecomp/oracle.hpp"
#include "symdecomp/repspec.hpp"

using nlohmann::json;
using namespace symdecomp;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitMismatch = 4;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void emit(const json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << j.dump() << '\n';
}

std::pair<int, int> parse_range(const std::string& text) {
    auto sep = text.find(':');
    if (sep == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 1))};
}

void write_matrix_file(const Eigen::MatrixXd& m, const std::string& path) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto data = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        auto row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        data.push_back(std::move(row));
    }
    j["matrix"] = std::move(data);
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write matrix file: " + path);
    out << j.dump() << '\n';
}

Representation bench_representation(const std::string& family, int n, int k) {
    if (family == "hook") {
        std::vector<int> parts{2};
        parts.insert(parts.end(), n - 2, 1);
        return tensor_power(irrep_representation(Partition(parts)), k);
    }
    if (family == "near-hook") {
        if (n < 4) throw std::invalid_argument("near-hook family requires n >= 4");
        std::vector<int> parts{2, 2};
        parts.insert(parts.end(), n - 4, 1);
        return tensor_power(irrep_representation(Partition(parts)), k);
    }
    if (family == "perm") return tensor_power(permutation_representation(n), k);
    throw std::invalid_argument("unknown bench family: " + family);
}

int run_multiplicities(const std::string& spec, bool pretty) {
    auto t0 = std::chrono::steady_clock::now();
    Representation rho = parse_repspec(spec);
    DecompositionResult result = multiplicities(rho);
    json j = to_json(result);
    j["n"] = rho.n();
    j["d"] = rho.d();
    j["seconds"] = seconds_since(t0);
    emit(j, pretty);
    return 0;
}

int run_decompose(const std::string& spec, const std::string& qpath, bool no_verify,
                  bool pretty, double tol) {
    auto t0 = std::chrono::steady_clock::now();
    Representation rho = parse_repspec(spec);
    DecompositionResult result = block_diagonalize(rho, tol);
    json j = to_json(result);
    j["n"] = rho.n();
    j["d"] = rho.d();
    j["seconds"] = seconds_since(t0);
    bool ok = true;
    if (!no_verify) {
        auto rep = verify_decomposition(rho, result);
        double t = tol > 0 ? tol : default_tolerance() * rho.d();
        j["verify"] = {{"orthogonality", rep.orthogonality},
                       {"block_residual", rep.block_residual},
                       {"oracle_checked", rep.oracle_checked},
                       {"oracle_agrees", rep.oracle_agrees},
                       {"notes", rep.notes}};
        ok = rep.pass(t);
    }
    if (!qpath.empty()) write_matrix_file(result.Q, qpath);
    emit(j, pretty);
    return ok ? 0 : kExitMismatch;
}

int run_kronecker(const std::vector<std::string>& parts_args, bool pretty) {
    std::vector<Partition> lambdas;
    for (const auto& a : parts_args) lambdas.push_back(parse_partition(a));
    const int n = lambdas[0].n();
    for (const auto& l : lambdas)
        if (l.n() != n) throw parse_error("kronecker arguments must be partitions of the same n");

    std::vector<Representation> factors;
    for (const auto& l : lambdas) factors.push_back(irrep_representation(l));
    DecompositionResult result = multiplicities(tensor_product(factors));
    std::map<Partition, int> pipeline;
    for (const auto& c : result.components) pipeline[c.partition] = c.multiplicity;

    auto classes = conjugacy_classes(n);
    long long nf = static_cast<long long>(factorial(n));
    bool agree = true;
    json table = json::array();
    for (const auto& nu : partitions_of(n)) {
        long long sum = 0;
        for (const auto& cls : classes) {
            long long prod = static_cast<long long>(cls.size) * character(nu, cls.cycle_type);
            for (const auto& l : lambdas) prod *= character(l, cls.cycle_type);
            sum += prod;
        }
        long long g = sum / nf;
        int p = pipeline.count(nu) ? pipeline[nu] : 0;
        agree = agree && (g == p);
        table.push_back({{"nu", nu.parts()}, {"pipeline", p}, {"characters", g}});
    }
    json j;
    j["n"] = n;
    auto fl = json::array();
    for (const auto& l : lambdas) fl.push_back(l.parts());
    j["factors"] = std::move(fl);
    j["table"] = std::move(table);
    j["agree"] = agree;
    j["residual"] = result.residual;
    emit(j, pretty);
    return agree ? 0 : kExitMismatch;
}

int run_bench(const std::string& family, const std::string& n_range, const std::string& k_range,
              int cap, const std::string& gnuplot_path) {
    auto [n_lo, n_hi] = parse_range(n_range);
    auto [k_lo, k_hi] = parse_range(k_range);
    std::cout << "family,n,k,d,seconds,residual\n";
    std::vector<std::pair<double, double>> points;  // (d, seconds)
    for (int n = n_lo; n <= n_hi; ++n)
        for (int k = k_lo; k <= k_hi; ++k) {
            Representation rho = bench_representation(family, n, k);
            if (rho.d() > cap) {
                std::cerr << "# skipped " << family << " n=" << n << " k=" << k
                          << ": d=" << rho.d() << " exceeds cap " << cap << '\n';
                continue;
            }
            int reps = rho.d() < 50 ? 3 : 1;
            double best = 0;
            double residual = 0;
            for (int r = 0; r < reps; ++r) {
                auto t0 = std::chrono::steady_clock::now();
                DecompositionResult result = multiplicities(rho);
                double s = seconds_since(t0);
                residual = result.residual;
                if (r == 0 || s < best) best = s;
            }
            std::cout << family << ',' << n << ',' << k << ',' << rho.d() << ',' << best << ','
                      << residual << '\n';
            points.emplace_back(static_cast<double>(rho.d()), best);
        }
    if (!gnuplot_path.empty()) {
        std::ofstream out(gnuplot_path);
        out << "set logscale xy\nset xlabel 'dimension d'\nset ylabel 'seconds'\n"
            << "plot '-' using 1:2 with linespoints title '" << family << "'\n";
        for (auto [d, s] : points) out << d << ' ' << s << '\n';
        out << "e\n";
    }
    return 0;
}

int run_validate(const std::string& path, bool pretty) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json jf = json::parse(in);
    int n = jf.at("n").get<int>();
    int d = jf.at("d").get<int>();
    std::vector<Eigen::SparseMatrix<double>> gens;
    for (const auto& jm : jf.at("generators")) {
        std::vector<Eigen::Triplet<double>> trip;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                double v = jm.at(r).at(c).get<double>();
                if (v != 0.0) trip.emplace_back(r, c, v);
            }
        Eigen::SparseMatrix<double> g(d, d);
        g.setFromTriplets(trip.begin(), trip.end());
        gens.push_back(std::move(g));
    }
    auto rep = validate_generators(n, d, gens);
    json j;
    j["symmetry"] = rep.symmetry;
    j["orthogonality"] = rep.orthogonality;
    j["involution"] = rep.involution;
    j["braid"] = rep.braid;
    j["distant_commutation"] = rep.commutation;
    j["tol"] = rep.tol;
    j["pass"] = rep.pass();
    if (!rep.pass()) j["failing_check"] = rep.failing_check();
    emit(j, pretty);
    return rep.pass() ? 0 : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decompose orthogonal representations of the symmetric group"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable JSON output");

    std::string spec, qpath, file_path;
    bool no_verify = false;
    double tol = -1;

    auto* mult = app.add_subcommand("multiplicities", "irreducible multiplicities from the joint YJM spectrum");
    mult->fallthrough();
    mult->add_option("spec", spec, "representation expression, e.g. \"perm(4)\"")->required();

    auto* dec = app.add_subcommand("decompose", "full block-diagonalization");
    dec->fallthrough();
    dec->add_option("spec", spec, "representation expression")->required();
    dec->add_option("-o,--output-q", qpath, "write Q to a JSON matrix file");
    dec->add_flag("--no-verify", no_verify, "skip the verification pass");
    dec->add_option("--tol", tol, "residual tolerance (default 1e-8 * d, or SYMDECOMP_TOL * d)");

    std::vector<std::string> kron_args;
    auto* kron = app.add_subcommand("kronecker", "tensor-product multiplicities, two methods");
    kron->fallthrough();
    kron->add_option("partitions", kron_args, "two or more partitions, e.g. \"3,2,1\" \"2,2,2\"")
        ->expected(2, -1);

    std::string family = "hook", n_range = "5:6", k_range = "1:3", gnuplot_path;
    int cap = 5000;
    auto* bench = app.add_subcommand("bench", "timing rows for tensor-power families");
    bench->fallthrough();
    bench->add_option("--family", family, "hook | near-hook | perm");
    bench->add_option("--n", n_range, "n range, e.g. 5:6");
    bench->add_option("--k", k_range, "tensor power range, e.g. 1:3");
    bench->add_option("--cap", cap, "skip cases with dimension above this");
    bench->add_option("--gnuplot", gnuplot_path, "write a log-log gnuplot script");

    auto* val = app.add_subcommand("validate", "check generator relations of a representation file");
    val->fallthrough();
    val->add_option("file", file_path, "representation JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (mult->parsed()) return run_multiplicities(spec, pretty);
        if (dec->parsed()) return run_decompose(spec, qpath, no_verify, pretty, tol);
        if (kron->parsed()) return run_kronecker(kron_args, pretty);
        if (bench->parsed()) return run_bench(family, n_range, k_range, cap, gnuplot_path);
        if (val->parsed()) return run_validate(file_path, pretty);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kExitParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed input file: " << e.what() << '\n';
        return kExitParse;
    } catch (const numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const validation_error& e) {
        std::cerr << "validation failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
