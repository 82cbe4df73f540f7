#pragma once

#include <string>

#include "symdecomp/representation.hpp"

namespace symdecomp {

// Thrown on malformed representation expressions.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Constructor expressions:
//   perm(n) | regular(n) | irrep(l1,l2,...) | file(path)
//   tensor(e1,e2,...) | dsum(e1,e2,...) | power(e,k)
// All sub-expressions must share the same n.
Representation parse_repspec(const std::string& text);

// Parse "3,2,1" into a Partition.
Partition parse_partition(const std::string& text);

}  // namespace symdecomp
