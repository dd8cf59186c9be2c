#pragma once

#include <iosfwd>
#include <string>

#include "srg/graph.hpp"

namespace srg {

// DIMACS ascii graph format: "p edge <nu> <m>" header, one 1-indexed
// "e u v" line per edge, "c ..." comment lines.
void write_dimacs(const DenseGraph& g, std::ostream& out);
std::string to_dimacs(const DenseGraph& g);

// Errors: ParseError (malformed input), IndexOutOfRange (edge outside header).
DenseGraph read_dimacs(std::istream& in, const std::string& label = "");
DenseGraph parse_dimacs(const std::string& text, const std::string& label = "");

}  // namespace srg
