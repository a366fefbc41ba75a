#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "graphrefute/graph.hpp"

namespace graphrefute {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Accepts "u v" per line (whitespace separated) and comma lists of "u-v"
// pairs. '#' starts a comment. Labels are compacted to 0..n-1 in ascending
// label order.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

// Canonical form: one "u v" line per edge, ascending.
std::string to_edge_list(const Graph& g);

std::string to_dot(const Graph& g);

}  // namespace graphrefute
