#include <circham/digraph.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace circham {

CirculantSpec::CirculantSpec(int n, std::vector<int> connection_set) : n_(n), set_(std::move(connection_set))
{
    if (n_ < 2)
        throw std::invalid_argument("circulant modulus must be at least 2, got " + std::to_string(n_));
    for (int s : set_)
        if (s < 1 || s > n_ - 1)
            throw std::invalid_argument("connection step " + std::to_string(s) + " outside [1, " + std::to_string(n_ - 1) + "]");
    std::sort(set_.begin(), set_.end());
    if (std::adjacent_find(set_.begin(), set_.end()) != set_.end())
        throw std::invalid_argument("connection set contains a repeated step");
}

Digraph::Digraph(int vertex_count, std::span<const Arc> arcs) :
    n_(vertex_count),
    matrix_(static_cast<std::size_t>(std::max(vertex_count, 0)) * std::max(vertex_count, 0), 0),
    out_(std::max(vertex_count, 0)),
    in_(std::max(vertex_count, 0))
{
    if (n_ < 0)
        throw std::invalid_argument("negative vertex count");
    for (auto [u, v] : arcs) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("arc endpoint out of range: " + std::to_string(u) + " -> " + std::to_string(v));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        auto & cell = matrix_[static_cast<std::size_t>(u) * n_ + v];
        if (cell)
            throw std::invalid_argument("duplicate arc " + std::to_string(u) + " -> " + std::to_string(v));
        cell = 1;
        out_[u].push_back(v);
        in_[v].push_back(u);
        ++arc_count_;
    }
    for (auto & l : out_)
        std::sort(l.begin(), l.end());
    for (auto & l : in_)
        std::sort(l.begin(), l.end());
}

std::vector<Arc> Digraph::arcs() const
{
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : out_[u])
            result.emplace_back(u, v);
    return result;
}

Digraph build_circulant(const CirculantSpec & spec)
{
    const int n = spec.n();
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * spec.k());
    for (Vertex i = 0; i < n; ++i)
        for (int s : spec.connection_set())
            arcs.emplace_back(i, (i + s) % n);
    return Digraph(n, arcs);
}

bool is_k_diregular(const Digraph & g, int k)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.out_degree(v) != k || g.in_degree(v) != k)
            return false;
    return true;
}

std::size_t digon_count(const Digraph & g)
{
    std::size_t count = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.out_neighbours(u))
            if (u < v && g.has_arc(v, u))
                ++count;
    return count;
}

bool is_oriented(const Digraph & g)
{
    return digon_count(g) == 0;
}

bool set_level_oriented(const CirculantSpec & spec)
{
    const auto & set = spec.connection_set();
    for (int s : set)
        if (std::binary_search(set.begin(), set.end(), spec.n() - s))
            return false;
    return true;
}

namespace {
    template <typename Neighbours>
    int count_reachable_from_zero(int n, Neighbours && neighbours)
    {
        std::vector<char> seen(n, 0);
        std::vector<Vertex> todo{0};
        seen[0] = 1;
        int count = 1;
        while (! todo.empty()) {
            Vertex v = todo.back();
            todo.pop_back();
            for (Vertex w : neighbours(v))
                if (! seen[w]) {
                    seen[w] = 1;
                    ++count;
                    todo.push_back(w);
                }
        }
        return count;
    }
}

bool is_strongly_connected(const Digraph & g)
{
    const int n = g.vertex_count();
    if (n == 0)
        return true;
    return count_reachable_from_zero(n, [&](Vertex v) { return g.out_neighbours(v); }) == n
        && count_reachable_from_zero(n, [&](Vertex v) { return g.in_neighbours(v); }) == n;
}

Digraph rotational_tournament(int k)
{
    if (k < 1)
        throw std::invalid_argument("rotational tournament needs k >= 1");
    std::vector<int> steps(k);
    for (int s = 1; s <= k; ++s)
        steps[s - 1] = s;
    return build_circulant(CirculantSpec(2 * k + 1, std::move(steps)));
}

Digraph disjoint_union(const Digraph & a, const Digraph & b)
{
    auto arcs = a.arcs();
    const Vertex offset = a.vertex_count();
    for (auto [u, v] : b.arcs())
        arcs.emplace_back(u + offset, v + offset);
    return Digraph(a.vertex_count() + b.vertex_count(), arcs);
}

Digraph reversed(const Digraph & g)
{
    auto arcs = g.arcs();
    for (auto & [u, v] : arcs)
        std::swap(u, v);
    return Digraph(g.vertex_count(), arcs);
}

Digraph relabeled(const Digraph & g, std::span<const Vertex> perm)
{
    const int n = g.vertex_count();
    if (perm.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("relabeling has wrong length");
    std::vector<char> seen(n, 0);
    for (Vertex p : perm) {
        if (p < 0 || p >= n || seen[p])
            throw std::invalid_argument("relabeling is not a permutation");
        seen[p] = 1;
    }
    auto arcs = g.arcs();
    for (auto & [u, v] : arcs) {
        u = perm[u];
        v = perm[v];
    }
    return Digraph(n, arcs);
}

}
