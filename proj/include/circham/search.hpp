#pragma once

#include <circham/digraph.hpp>
#include <circham/hamiltonicity.hpp>

#include <chrono>
#include <string_view>
#include <vector>

namespace circham {

/// Upper bound on n in Jackson's hypotheses: n <= 4k + 1, or the weaker n <= 4k.
enum class BoundMode { strict_4k_plus_1, weak_4k };

std::string_view to_string(BoundMode mode);

/// Largest vertex count for which `mode` admits degree k.
constexpr int max_vertices_for(BoundMode mode, int k)
{
    return mode == BoundMode::strict_4k_plus_1 ? 4 * k + 1 : 4 * k;
}

/// Units of Z_n in ascending order.
std::vector<int> units_mod(int n);

/// (a * S) mod n, sorted. a must be a unit of Z_n for the result to be a
/// valid connection set.
std::vector<int> scaled_set(int n, const std::vector<int> & set, int a);

/// Size-k subsets of {1..n-1} free of inverse pairs, in lexicographic order.
std::vector<CirculantSpec> enumerate_oriented_sets(int n, int k);

/// Every size-k subset of {1..n-1}, lexicographic. Used when digons are allowed.
std::vector<CirculantSpec> enumerate_sets(int n, int k);

/// Lexicographically least (a * S) mod n over all units a.
std::vector<int> multiplier_canonical_form(const CirculantSpec & spec);

/// Oriented, k != 2, and n within the bound. Diregularity is automatic for circulants.
bool satisfies_jackson_hypotheses(const CirculantSpec & spec, BoundMode mode);

struct SearchOptions {
    BoundMode bound_mode = BoundMode::strict_4k_plus_1;
    /// Also scan k = 2, which the conjecture excludes.
    bool include_k2 = false;
    /// Also scan connection sets that contain an inverse pair.
    bool allow_digons = false;
    /// Threads used for the Hamiltonicity solves. Output does not depend on it.
    int workers = 1;
};

struct CounterexampleRecord {
    CirculantSpec spec;
    std::vector<int> canonical_set;
    int k = 0;
    int n = 0;
    HamVerdict verdict;
    HamVerdict oracle_verdict;
};

struct SearchLayer {
    int n = 0;
    std::size_t instances = 0;
    std::size_t classes = 0;
    std::size_t counterexamples = 0;
};

struct SearchReport {
    int n_min = 0;
    int n_max = 0;
    SearchOptions options;
    std::size_t instances_enumerated = 0;
    std::size_t classes_enumerated = 0;
    std::vector<SearchLayer> layers;
    /// One per multiplier class, ordered by (n, canonical_set).
    std::vector<CounterexampleRecord> counterexamples;
    std::chrono::duration<double> elapsed{};
};

/// Degrees k scanned at modulus n under `options`, ascending.
std::vector<int> search_degrees(int n, const SearchOptions & options);

/// Scans every multiplier class of connection sets with n in [n_min, n_max]
/// meeting the hypotheses, solves each representative by backtracking, and
/// confirms every non-hamiltonian one with the oracle.
///
/// Throws std::invalid_argument unless 2 <= n_min <= n_max <= 24, and
/// std::logic_error if the oracle ever disagrees with the backtracker.
SearchReport search_counterexamples(int n_min, int n_max, const SearchOptions & options = {});

}
