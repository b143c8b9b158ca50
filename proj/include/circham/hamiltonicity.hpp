#pragma once

#include <circham/digraph.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace circham {

enum class HamStatus { hamiltonian, non_hamiltonian };

enum class HamMethod { backtracking, held_karp, short_circuit_scc };

std::string_view to_string(HamStatus s);
std::string_view to_string(HamMethod m);

/// Outcome of a Hamiltonicity decision.
///
/// A hamiltonian verdict carries a witness cycle that starts at vertex 0.
/// A non-hamiltonian verdict is an exhaustion certificate: the method that
/// ran and, for backtracking, how many search nodes it visited.
struct HamVerdict {
    HamStatus status = HamStatus::non_hamiltonian;
    std::optional<std::vector<Vertex>> witness;
    std::uint64_t nodes_explored = 0;
    HamMethod method = HamMethod::backtracking;

    bool hamiltonian() const noexcept { return status == HamStatus::hamiltonian; }

    friend bool operator==(const HamVerdict &, const HamVerdict &) = default;
};

/// Largest digraph the backtracking solver accepts (visited sets are 64-bit masks).
inline constexpr int max_backtracking_vertices = 64;

/// Largest digraph the subset dynamic programme accepts.
inline constexpr int max_oracle_vertices = 24;

/// Deterministic exhaustive depth-first search for a directed Hamiltonian
/// circuit through vertex 0.
///
/// Returns immediately with short_circuit_scc when the digraph is not
/// strongly connected. Otherwise successors are tried in ascending order,
/// and a partial path is abandoned as soon as some unvisited vertex has no
/// possible predecessor (unvisited, or the current path end) or no possible
/// successor (unvisited, or vertex 0). The witness, when found, is the
/// lexicographically least Hamiltonian circuit starting at 0.
///
/// nodes_explored counts the root plus every attempted extension of the
/// path, including extensions rejected by pruning or by the closing arc.
///
/// Throws std::invalid_argument when vertex_count is 0 or exceeds
/// max_backtracking_vertices.
HamVerdict find_hamiltonian_cycle(const Digraph & g);

/// Held-Karp style reachability over subsets containing vertex 0. Independent
/// of find_hamiltonian_cycle; used to cross-check it.
///
/// Throws std::invalid_argument unless 1 <= vertex_count <= max_oracle_vertices.
HamVerdict held_karp_oracle(const Digraph & g);

/// True iff witness lists every vertex exactly once and consecutive vertices,
/// including last -> first, are joined by arcs. Never throws.
bool verify_cycle_witness(const Digraph & g, std::span<const Vertex> witness);

}
