#pragma once

#include <iosfwd>
#include <string>

#include "multicut/tree_instance.hpp"

namespace multicut {

/// DIMACS-style instance format, 1-indexed:
///   c <comment>
///   p multicut <n> <m> <k>
///   e <u> <v>        (n-1 lines)
///   r <x> <y>        (m lines)
/// Internally ids are 0-indexed; serialization renumbers surviving nodes
/// to 1..n in ascending id order and sorts requests by endpoint pair, so
/// parse(serialize(i)) is the identity on canonical files.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

TreeInstance parse_instance(std::istream& in);
TreeInstance parse_instance_file(const std::string& path);
std::string serialize_instance(const TreeInstance& inst);
void write_instance_file(const TreeInstance& inst, const std::string& path);

}  // namespace multicut
