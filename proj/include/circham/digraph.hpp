#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace circham {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

/// Modulus and connection set of a circulant digraph Cay(Z_n; S).
///
/// The connection set is stored sorted ascending. Construction throws
/// std::invalid_argument when n < 2, when some step lies outside [1, n-1],
/// or when a step is repeated.
class CirculantSpec {
public:
    CirculantSpec(int n, std::vector<int> connection_set);

    int n() const noexcept { return n_; }
    const std::vector<int> & connection_set() const noexcept { return set_; }
    int k() const noexcept { return static_cast<int>(set_.size()); }

    friend bool operator==(const CirculantSpec &, const CirculantSpec &) = default;

private:
    int n_;
    std::vector<int> set_;
};

/// Simple digraph: no loops, no parallel arcs.
///
/// Keeps sorted out- and in-neighbour lists for iteration and a dense
/// adjacency matrix for O(1) membership. Immutable after construction.
class Digraph {
public:
    Digraph() = default;

    /// Throws std::invalid_argument on out-of-range endpoints, loops or
    /// duplicate arcs.
    Digraph(int vertex_count, std::span<const Arc> arcs);
    Digraph(int vertex_count, std::initializer_list<Arc> arcs)
        : Digraph(vertex_count, std::span<const Arc>(arcs.begin(), arcs.size())) {}

    int vertex_count() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arc_count_; }

    bool has_arc(Vertex u, Vertex v) const noexcept
    {
        return u >= 0 && v >= 0 && u < n_ && v < n_ && matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
    }

    std::span<const Vertex> out_neighbours(Vertex u) const { return out_[u]; }
    std::span<const Vertex> in_neighbours(Vertex v) const { return in_[v]; }
    int out_degree(Vertex u) const { return static_cast<int>(out_[u].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }

    /// All arcs, sorted by (tail, head).
    std::vector<Arc> arcs() const;

    friend bool operator==(const Digraph & a, const Digraph & b) { return a.n_ == b.n_ && a.matrix_ == b.matrix_; }

private:
    int n_ = 0;
    std::size_t arc_count_ = 0;
    std::vector<char> matrix_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

/// Vertices 0..n-1, arcs i -> (i + s) mod n for every s in the connection set.
Digraph build_circulant(const CirculantSpec & spec);

bool is_k_diregular(const Digraph & g, int k);

/// No digon u -> v -> u.
bool is_oriented(const Digraph & g);

/// Number of unordered pairs {u, v} joined in both directions.
std::size_t digon_count(const Digraph & g);

/// Orientation decided on the connection set alone: S and -S are disjoint.
bool set_level_oriented(const CirculantSpec & spec);

/// Every vertex reaches vertex 0 and is reached from it. The empty digraph counts as strongly connected.
bool is_strongly_connected(const Digraph & g);

/// Cay(Z_{2k+1}; {1..k}). Throws std::invalid_argument for k < 1.
Digraph rotational_tournament(int k);

/// b's vertices are shifted by a.vertex_count(); no arcs between the parts.
Digraph disjoint_union(const Digraph & a, const Digraph & b);

/// Every arc u -> v replaced by v -> u.
Digraph reversed(const Digraph & g);

/// Arc u -> v becomes perm[u] -> perm[v]. perm must be a permutation of
/// 0..n-1, otherwise std::invalid_argument.
Digraph relabeled(const Digraph & g, std::span<const Vertex> perm);

}
