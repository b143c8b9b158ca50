#include <circham/hamiltonicity.hpp>

#include <bit>
#include <stdexcept>
#include <string>

namespace circham {

std::string_view to_string(HamStatus s)
{
    switch (s) {
        case HamStatus::hamiltonian: return "HAMILTONIAN";
        case HamStatus::non_hamiltonian: return "NON_HAMILTONIAN";
    }
    return "?";
}

std::string_view to_string(HamMethod m)
{
    switch (m) {
        case HamMethod::backtracking: return "BACKTRACKING";
        case HamMethod::held_karp: return "HELD_KARP";
        case HamMethod::short_circuit_scc: return "SHORT_CIRCUIT_SCC";
    }
    return "?";
}

namespace {
    using Mask = std::uint64_t;

    constexpr Mask bit(Vertex v) { return Mask{1} << v; }

    class CycleSearch {
    public:
        explicit CycleSearch(const Digraph & g) : g_(g), n_(g.vertex_count()), preds_(n_, 0), succs_(n_, 0)
        {
            for (auto [u, v] : g.arcs()) {
                succs_[u] |= bit(v);
                preds_[v] |= bit(u);
            }
            unvisited_ = (n_ == 64 ? ~Mask{0} : bit(n_) - 1) & ~bit(0);
            path_.reserve(n_);
        }

        HamVerdict run()
        {
            path_.push_back(0);
            nodes_ = 1;
            HamVerdict verdict;
            verdict.method = HamMethod::backtracking;
            if (extend()) {
                verdict.status = HamStatus::hamiltonian;
                verdict.witness = path_;
            }
            verdict.nodes_explored = nodes_;
            return verdict;
        }

    private:
        bool extend()
        {
            const Vertex last = path_.back();
            if (static_cast<int>(path_.size()) == n_)
                return g_.has_arc(last, 0);

            for (Vertex next : g_.out_neighbours(last)) {
                if (! (unvisited_ & bit(next)))
                    continue;
                ++nodes_;
                unvisited_ &= ~bit(next);
                path_.push_back(next);
                if (still_completable() && extend())
                    return true;
                path_.pop_back();
                unvisited_ |= bit(next);
            }
            return false;
        }

        // Each unvisited vertex must still be enterable from the unvisited
        // set or the path end, and leavable into the unvisited set or back to 0.
        bool still_completable() const
        {
            const Mask can_enter_from = unvisited_ | bit(path_.back());
            const Mask can_leave_to = unvisited_ | bit(0);
            for (Mask rest = unvisited_; rest; rest &= rest - 1) {
                const int w = std::countr_zero(rest);
                if (! (preds_[w] & can_enter_from) || ! (succs_[w] & can_leave_to))
                    return false;
            }
            return true;
        }

        const Digraph & g_;
        int n_;
        std::vector<Mask> preds_, succs_;
        Mask unvisited_ = 0;
        std::vector<Vertex> path_;
        std::uint64_t nodes_ = 0;
    };
}

HamVerdict find_hamiltonian_cycle(const Digraph & g)
{
    const int n = g.vertex_count();
    if (n == 0)
        throw std::invalid_argument("hamiltonicity is undefined for the empty digraph");
    if (n > max_backtracking_vertices)
        throw std::invalid_argument("backtracking solver supports at most " + std::to_string(max_backtracking_vertices) + " vertices");

    if (! is_strongly_connected(g)) {
        HamVerdict verdict;
        verdict.method = HamMethod::short_circuit_scc;
        return verdict;
    }
    return CycleSearch(g).run();
}

HamVerdict held_karp_oracle(const Digraph & g)
{
    const int n = g.vertex_count();
    if (n < 1 || n > max_oracle_vertices)
        throw std::invalid_argument("oracle size guard: vertex count " + std::to_string(n) + " outside [1, " + std::to_string(max_oracle_vertices) + "]");

    // Subsets of {1..n-1} are indexed with vertex v at bit v-1; vertex 0 is
    // implicitly in every subset. ends[subset] is the set of vertices at
    // which some path from 0 covering exactly {0} + subset can stop.
    std::vector<std::uint32_t> succs(n, 0), preds(n, 0);
    for (auto [u, v] : g.arcs()) {
        succs[u] |= std::uint32_t{1} << v;
        preds[v] |= std::uint32_t{1} << u;
    }
    const std::uint32_t full = (std::uint32_t{1} << (n - 1)) - 1;
    std::vector<std::uint32_t> ends(std::size_t{full} + 1, 0);
    ends[0] = 1;
    for (std::uint32_t subset = 0; subset <= full; ++subset) {
        const std::uint32_t covered = (subset << 1) | 1;
        for (std::uint32_t e = ends[subset]; e; e &= e - 1) {
            const int v = std::countr_zero(e);
            for (std::uint32_t fresh = succs[v] & ~covered; fresh; fresh &= fresh - 1) {
                const int w = std::countr_zero(fresh);
                ends[subset | (std::uint32_t{1} << (w - 1))] |= std::uint32_t{1} << w;
            }
        }
    }

    HamVerdict verdict;
    verdict.method = HamMethod::held_karp;
    const std::uint32_t closing = ends[full] & preds[0];
    if (! closing)
        return verdict;

    std::vector<Vertex> backwards;
    Vertex current = std::countr_zero(closing);
    std::uint32_t subset = full;
    while (current != 0) {
        backwards.push_back(current);
        subset &= ~(std::uint32_t{1} << (current - 1));
        current = std::countr_zero(ends[subset] & preds[current]);
    }
    backwards.push_back(0);

    verdict.status = HamStatus::hamiltonian;
    verdict.witness = std::vector<Vertex>(backwards.rbegin(), backwards.rend());
    return verdict;
}

bool verify_cycle_witness(const Digraph & g, std::span<const Vertex> witness)
{
    const int n = g.vertex_count();
    if (n == 0 || witness.size() != static_cast<std::size_t>(n))
        return false;
    std::vector<char> seen(n, 0);
    for (Vertex v : witness) {
        if (v < 0 || v >= n || seen[v])
            return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < witness.size(); ++i)
        if (! g.has_arc(witness[i], witness[(i + 1) % witness.size()]))
            return false;
    return true;
}

}
