#pragma once

#include <circham/digraph.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circham {

/// Parses "a,b,c": comma-separated decimal integers, no whitespace, no empty
/// fields, no signs. Throws std::invalid_argument otherwise.
std::vector<int> parse_connection_set(std::string_view text);

std::string join(std::span<const int> values, std::string_view separator = ",");

/// "digraph {", one "  u -> v;" line per arc sorted by (u, v), then "}".
std::string to_dot(const Digraph & g);

/// "n m" followed by one "u v" line per arc sorted by (u, v).
std::string to_edges(const Digraph & g);

/// Inverse of to_edges. Throws std::invalid_argument on malformed input.
Digraph parse_edges(std::string_view text);

}
