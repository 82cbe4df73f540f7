#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symdecomp/common.hpp"

namespace symdecomp {

// Weakly decreasing positive integers summing to n.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int n() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[i]; }  // 0-based row index
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Integer vector (a_1,...,a_n) of diagonal indices; always carries n
// implicitly as its length.
struct ContentVector {
    std::vector<int> entries;

    int n() const { return static_cast<int>(entries.size()); }
    bool operator==(const ContentVector&) const = default;
    bool operator<(const ContentVector& o) const { return entries < o.entries; }
};

// Filling of a Young diagram with 1..n, strictly increasing along rows
// and columns.
class StandardTableau {
public:
    StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    // 1-based (row, column) of the box holding `label`.
    std::pair<int, int> box_of(int label) const { return box_[label - 1]; }

    bool operator==(const StandardTableau&) const = default;

    std::string to_string() const;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::pair<int, int>> box_;
};

// All partitions of n in reverse-lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

// All standard tableaux of shape lambda, sorted by the lexicographic
// order of their content vectors.
std::vector<StandardTableau> enumerate_tableaux(const Partition& lambda);

// d_lambda via the hook length formula.
std::uint64_t tableau_count(const Partition& lambda);

// Entry k is (column - row) of the box labelled k.
ContentVector content_of(const StandardTableau& t);

// Inverse of content_of; throws validation_error on an invalid content
// vector, naming the first violated condition.
StandardTableau tableau_of(const ContentVector& c);

// Shape recovery from a content vector without building the tableau.
Partition partition_of_content(const ContentVector& c);

struct ContentCheck {
    bool ok = true;
    std::string violation;  // first failing condition, empty when ok
};

ContentCheck is_valid_content(const std::vector<int>& v);

}  // namespace symdecomp
