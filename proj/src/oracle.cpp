#include "symdecomp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace symdecomp {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Partition cycle_type_of(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j] - 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(lens);
}

std::vector<int> permutation_word(const std::vector<int>& perm) {
    std::vector<int> q = perm;
    std::vector<int> swaps;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < q.size(); ++i)
            if (q[i] > q[i + 1]) {
                std::swap(q[i], q[i + 1]);  // right-multiply by tau_{i+1}
                swaps.push_back(static_cast<int>(i) + 1);
                changed = true;
            }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

Eigen::MatrixXd apply_word(const Representation& rho, const std::vector<int>& word) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(rho.d(), rho.d());
    for (auto it = word.rbegin(); it != word.rend(); ++it) m = rho.generator(*it) * m;
    return m;
}

std::vector<ClassData> conjugacy_classes(int n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("conjugacy_classes supports 1 <= n <= 10");
    std::vector<ClassData> out;
    for (const auto& type : partitions_of(n)) {
        ClassData cd;
        cd.cycle_type = type;
        // centralizer order z = prod_j j^{m_j} m_j!
        std::uint64_t z = 1;
        int run = 1;
        for (int i = 0; i < type.rows(); ++i) {
            z *= static_cast<std::uint64_t>(type.part(i));
            if (i + 1 < type.rows() && type.part(i + 1) == type.part(i))
                ++run;
            else {
                z *= factorial(run);
                run = 1;
            }
        }
        cd.size = factorial(n) / z;
        // representative: consecutive cycles in decreasing length order
        std::vector<int> perm(n);
        int off = 0;
        for (int i = 0; i < type.rows(); ++i) {
            int c = type.part(i);
            for (int k = 1; k < c; ++k) perm[off + k - 1] = off + k + 1;
            perm[off + c - 1] = off + 1;
            off += c;
        }
        cd.representative = permutation_word(perm);
        out.push_back(std::move(cd));
    }
    return out;
}

namespace {

// Murnaghan-Nakayama on beta-number sets (strictly decreasing).
long long mn_char(std::vector<int>& beta, const std::vector<int>& cycles, std::size_t ci) {
    if (ci == cycles.size()) return 1;
    const int r = cycles[ci];
    long long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        int t = b - r;
        if (t < 0) continue;
        if (std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
        int between = 0;
        for (int x : beta)
            if (x > t && x < b) ++between;
        std::vector<int> nb = beta;
        nb[i] = t;
        std::sort(nb.rbegin(), nb.rend());
        long long sub = mn_char(nb, cycles, ci + 1);
        total += (between % 2 ? -sub : sub);
    }
    return total;
}

}  // namespace

long long character(const Partition& lambda, const Partition& cycle_type) {
    if (lambda.n() != cycle_type.n())
        throw std::invalid_argument("character: partitions of different n");
    const int k = lambda.rows();
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = lambda.part(i) + (k - 1 - i);
    std::vector<int> cycles = cycle_type.parts();
    return mn_char(beta, cycles, 0);
}

int multiplicity_by_characters(const Representation& rho, const Partition& lambda) {
    if (lambda.n() != rho.n())
        throw std::invalid_argument("multiplicity_by_characters: partition n mismatch");
    if (rho.n() > 8)
        throw std::invalid_argument("multiplicity_by_characters caps at n <= 8");
    double sum = 0;
    for (const auto& cls : conjugacy_classes(rho.n())) {
        double tr = apply_word(rho, cls.representative).trace();
        sum += static_cast<double>(cls.size) * tr *
               static_cast<double>(character(lambda, cls.cycle_type));
    }
    double raw = sum / static_cast<double>(factorial(rho.n()));
    long long a = std::llround(raw);
    if (std::abs(raw - static_cast<double>(a)) > 1e-6)
        throw numerical_error("character multiplicity " + std::to_string(raw) +
                              " fails the integer rounding guard");
    return static_cast<int>(a);
}

long long kronecker_coefficient(const Partition& lambda, const Partition& mu,
                                const Partition& nu) {
    const int n = lambda.n();
    if (mu.n() != n || nu.n() != n)
        throw std::invalid_argument("kronecker_coefficient: partitions of different n");
    if (n > 10) throw std::invalid_argument("kronecker_coefficient caps at n <= 10");
    long long sum = 0;
    for (const auto& cls : conjugacy_classes(n)) {
        sum += static_cast<long long>(cls.size) * character(lambda, cls.cycle_type) *
               character(mu, cls.cycle_type) * character(nu, cls.cycle_type);
    }
    long long nf = static_cast<long long>(factorial(n));
    if (sum % nf != 0)
        throw numerical_error("kronecker_coefficient: character sum not divisible by n!");
    return sum / nf;
}

std::map<Partition, int> brute_force_multiplicities(const Representation& rho) {
    const int n = rho.n();
    if (n > 6) throw std::invalid_argument("brute_force_multiplicities caps at n <= 6");
    auto lambdas = partitions_of(n);
    std::map<Partition, double> sums;
    std::map<std::pair<Partition, Partition>, long long> chi;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        auto type = cycle_type_of(p);
        double tr = apply_word(rho, permutation_word(p)).trace();
        for (const auto& lam : lambdas) {
            auto key = std::make_pair(lam, type);
            auto it = chi.find(key);
            if (it == chi.end()) it = chi.emplace(key, character(lam, type)).first;
            sums[lam] += tr * static_cast<double>(it->second);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<Partition, int> out;
    double nf = static_cast<double>(factorial(n));
    for (const auto& lam : lambdas) {
        double raw = sums[lam] / nf;
        long long a = std::llround(raw);
        if (std::abs(raw - static_cast<double>(a)) > 1e-6)
            throw numerical_error("brute-force multiplicity fails the rounding guard");
        out[lam] = static_cast<int>(a);
    }
    return out;
}

}  // namespace symdecomp
