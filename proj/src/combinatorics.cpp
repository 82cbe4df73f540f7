#include "symdecomp/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace symdecomp {

double default_tolerance() {
    if (const char* s = std::getenv("SYMDECOMP_TOL")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end != s && v > 0) return v;
    }
    return 1e-8;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    const int n = shape_.n();
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw std::invalid_argument("tableau row count does not match shape");
    box_.assign(n, {0, 0});
    std::vector<bool> seen(n + 1, false);
    for (int i = 0; i < shape_.rows(); ++i) {
        if (static_cast<int>(rows_[i].size()) != shape_.part(i))
            throw std::invalid_argument("tableau row length does not match shape");
        for (int j = 0; j < shape_.part(i); ++j) {
            int v = rows_[i][j];
            if (v < 1 || v > n || seen[v])
                throw std::invalid_argument("tableau labels must be a permutation of 1..n");
            if (j > 0 && rows_[i][j - 1] >= v)
                throw std::invalid_argument("tableau rows must strictly increase");
            if (i > 0 && rows_[i - 1][j] >= v)
                throw std::invalid_argument("tableau columns must strictly increase");
            seen[v] = true;
            box_[v - 1] = {i + 1, j + 1};
        }
    }
}

std::string StandardTableau::to_string() const {
    std::ostringstream os;
    for (const auto& row : rows_) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << '\n';
    }
    return os.str();
}

std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw std::invalid_argument("partitions_of requires n >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Recursive descent with a running max-part bound yields reverse-lex order.
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<StandardTableau> enumerate_tableaux(const Partition& lambda) {
    const int n = lambda.n();
    const int k = lambda.rows();
    std::vector<std::vector<int>> rows(k);
    std::vector<int> fill(k, 0);  // boxes filled so far per row
    std::vector<StandardTableau> out;
    auto rec = [&](auto&& self, int label) -> void {
        if (label > n) {
            out.emplace_back(lambda, rows);
            return;
        }
        for (int i = 0; i < k; ++i) {
            if (fill[i] == lambda.part(i)) continue;
            if (i > 0 && fill[i - 1] <= fill[i]) continue;
            rows[i].push_back(label);
            ++fill[i];
            self(self, label + 1);
            --fill[i];
            rows[i].pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return content_of(a) < content_of(b);
    });
    return out;
}

std::uint64_t tableau_count(const Partition& lambda) {
    const int n = lambda.n();
    std::vector<int> hooks;
    std::vector<int> collen(lambda.part(0), 0);
    for (int i = lambda.rows() - 1; i >= 0; --i)
        for (int j = 0; j < lambda.part(i); ++j)
            if (!collen[j]) collen[j] = i + 1;
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            hooks.push_back((lambda.part(i) - j - 1) + (collen[j] - i - 1) + 1);
    // n! / prod(hooks) with interleaved gcd reduction to stay in 64 bits.
    std::uint64_t num = 1;
    std::vector<std::uint64_t> den(hooks.begin(), hooks.end());
    for (int i = 2; i <= n; ++i) {
        std::uint64_t f = static_cast<std::uint64_t>(i);
        for (auto& h : den) {
            if (h == 1) continue;
            std::uint64_t g = std::gcd(f, h);
            f /= g;
            h /= g;
            if (f == 1) break;
        }
        num *= f;
    }
    std::uint64_t rem = 1;
    for (auto h : den) rem *= h;
    return num / rem;  // exact by the hook length formula
}

ContentVector content_of(const StandardTableau& t) {
    ContentVector c;
    c.entries.resize(t.n());
    for (int label = 1; label <= t.n(); ++label) {
        auto [i, j] = t.box_of(label);
        c.entries[label - 1] = j - i;
    }
    return c;
}

ContentCheck is_valid_content(const std::vector<int>& v) {
    if (v.empty()) return {false, "content vector is empty"};
    if (v[0] != 0) return {false, "condition 1: a_1 must be 0"};
    const int n = static_cast<int>(v.size());
    for (int k = 1; k < n; ++k) {
        bool found = false;
        for (int j = 0; j < k; ++j)
            if (v[j] == v[k] - 1 || v[j] == v[k] + 1) {
                found = true;
                break;
            }
        if (!found)
            return {false, "condition 2: entry " + std::to_string(k + 1) +
                               " has no neighbour value among earlier entries"};
    }
    for (int k = 0; k < n; ++k)
        for (int j = k + 1; j < n; ++j) {
            if (v[k] != v[j]) continue;
            bool lo = false, hi = false;
            for (int m = k + 1; m < j; ++m) {
                if (v[m] == v[k] - 1) lo = true;
                if (v[m] == v[k] + 1) hi = true;
            }
            if (!lo || !hi)
                return {false, "condition 3: repeated value at entries " +
                                   std::to_string(k + 1) + "," + std::to_string(j + 1) +
                                   " lacks both neighbours in between"};
            break;  // nearest repeat suffices; later repeats checked from j
        }
    return {};
}

StandardTableau tableau_of(const ContentVector& c) {
    auto check = is_valid_content(c.entries);
    if (!check.ok) throw validation_error("invalid content vector: " + check.violation);
    const int n = c.n();
    std::vector<std::vector<int>> rows;
    std::vector<int> seen_count;  // count per content value, offset by n
    seen_count.assign(2 * n + 1, 0);
    auto place = [&](int i, int j, int label) {  // 1-based
        if (static_cast<int>(rows.size()) < i) rows.resize(i);
        if (static_cast<int>(rows[i - 1].size()) < j) rows[i - 1].resize(j, 0);
        rows[i - 1][j - 1] = label;
    };
    for (int k = 0; k < n; ++k) {
        int p = c.entries[k];
        int mu = seen_count[p + n]++;
        if (p >= 0)
            place(mu + 1, mu + p + 1, k + 1);
        else
            place(mu - p + 1, mu + 1, k + 1);
    }
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return StandardTableau(Partition(parts), rows);
}

Partition partition_of_content(const ContentVector& c) {
    auto check = is_valid_content(c.entries);
    if (!check.ok) throw validation_error("invalid content vector: " + check.violation);
    const auto& v = c.entries;
    int mn = *std::min_element(v.begin(), v.end());
    int mx = *std::max_element(v.begin(), v.end());
    int m = 1 - mn;
    std::vector<int> lam(m, 0);
    auto occurrences = [&](int k) { return static_cast<int>(std::count(v.begin(), v.end(), k)); };
    for (int k = 0; k >= mn; --k) {
        int mu = occurrences(k);
        for (int i = 1 - k; i <= mu - k; ++i) ++lam[i - 1];
    }
    for (int k = 1; k <= mx; ++k) {
        int mu = occurrences(k);
        for (int i = 1; i <= mu; ++i) ++lam[i - 1];
    }
    return Partition(lam);
}

}  // namespace symdecomp
