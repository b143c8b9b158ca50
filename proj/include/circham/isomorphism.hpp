#pragma once

#include <circham/digraph.hpp>

#include <optional>
#include <span>
#include <vector>

namespace circham {

/// Largest digraph accepted by the isomorphism backtracker.
inline constexpr int max_isomorphism_vertices = 16;

/// Unit a with (a * set_a) mod n == set_b, smallest such a, if any.
std::optional<int> are_multiplier_equivalent(int n, const std::vector<int> & set_a, const std::vector<int> & set_b);

/// True iff mapping is a bijection carrying the arcs of g1 exactly onto the arcs of g2.
bool verify_isomorphism(const Digraph & g1, const Digraph & g2, std::span<const Vertex> mapping);

/// Finds a vertex bijection g1 -> g2 preserving arcs and non-arcs.
///
/// Vertices of g1 are assigned in breadth-first order from 0, candidates in
/// ascending order, with (out, in)-degree matching and adjacency checks
/// against every vertex already placed. The first mapping found is returned.
/// Digraphs whose degree profiles or digon counts differ are rejected before
/// any search. Throws std::invalid_argument if either digraph has more than
/// max_isomorphism_vertices vertices.
std::optional<std::vector<Vertex>> are_isomorphic(const Digraph & g1, const Digraph & g2);

/// Two circulants on Z_n that are isomorphic but not multiplier-equivalent.
struct AdamPair {
    int n = 0;
    std::vector<int> set_a;
    std::vector<int> set_b;
    std::vector<Vertex> mapping;
};

/// Groups all size-k connection sets of Z_n into multiplier classes and tests
/// each pair of classes for isomorphism.
///
/// Without an anchor, each pair (set_a, set_b) is given by class
/// representatives with set_a < set_b. With an anchor, set_a is the anchor
/// itself and set_b runs over representatives of the other classes.
/// Results are ordered by (set_a, set_b). Throws std::invalid_argument when
/// n exceeds max_isomorphism_vertices, k < 1, or the anchor is not a valid
/// size-k connection set.
std::vector<AdamPair> find_adam_pairs(int n, int k, const std::optional<std::vector<int>> & anchor = std::nullopt, int workers = 1);

}
