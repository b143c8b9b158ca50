#include <circham/isomorphism.hpp>
#include <circham/search.hpp>

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

namespace circham {

std::optional<int> are_multiplier_equivalent(int n, const std::vector<int> & set_a, const std::vector<int> & set_b)
{
    auto target = set_b;
    std::sort(target.begin(), target.end());
    for (int a : units_mod(n))
        if (scaled_set(n, set_a, a) == target)
            return a;
    return std::nullopt;
}

bool verify_isomorphism(const Digraph & g1, const Digraph & g2, std::span<const Vertex> mapping)
{
    const int n = g1.vertex_count();
    if (g2.vertex_count() != n || mapping.size() != static_cast<std::size_t>(n) || g1.arc_count() != g2.arc_count())
        return false;
    std::vector<char> hit(n, 0);
    for (Vertex v : mapping) {
        if (v < 0 || v >= n || hit[v])
            return false;
        hit[v] = 1;
    }
    for (auto [u, v] : g1.arcs())
        if (! g2.has_arc(mapping[u], mapping[v]))
            return false;
    return true;
}

namespace {
    using DegreePair = std::pair<int, int>;

    std::vector<DegreePair> degree_profile(const Digraph & g)
    {
        std::vector<DegreePair> profile;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            profile.emplace_back(g.out_degree(v), g.in_degree(v));
        std::sort(profile.begin(), profile.end());
        return profile;
    }

    // Breadth-first over the underlying undirected graph, restarting at the
    // smallest unreached vertex, so that each vertex after the first in its
    // component is adjacent to something already placed.
    std::vector<Vertex> placement_order(const Digraph & g)
    {
        const int n = g.vertex_count();
        std::vector<Vertex> order;
        std::vector<char> queued(n, 0);
        for (Vertex root = 0; root < n; ++root) {
            if (queued[root])
                continue;
            queued[root] = 1;
            order.push_back(root);
            for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
                const Vertex v = order[head];
                auto visit = [&](Vertex w) {
                    if (! queued[w]) {
                        queued[w] = 1;
                        order.push_back(w);
                    }
                };
                for (Vertex w : g.out_neighbours(v))
                    visit(w);
                for (Vertex w : g.in_neighbours(v))
                    visit(w);
            }
        }
        return order;
    }

    class IsomorphismSearch {
    public:
        IsomorphismSearch(const Digraph & g1, const Digraph & g2) :
            g1_(g1), g2_(g2), n_(g1.vertex_count()), order_(placement_order(g1)), mapping_(n_, -1), used_(n_, 0)
        {
        }

        std::optional<std::vector<Vertex>> run()
        {
            if (place(0))
                return mapping_;
            return std::nullopt;
        }

    private:
        bool consistent(Vertex u, Vertex candidate, std::size_t depth) const
        {
            if (g1_.out_degree(u) != g2_.out_degree(candidate) || g1_.in_degree(u) != g2_.in_degree(candidate))
                return false;
            for (std::size_t i = 0; i < depth; ++i) {
                const Vertex v = order_[i];
                const Vertex image = mapping_[v];
                if (g1_.has_arc(u, v) != g2_.has_arc(candidate, image) || g1_.has_arc(v, u) != g2_.has_arc(image, candidate))
                    return false;
            }
            return true;
        }

        bool place(std::size_t depth)
        {
            if (depth == order_.size())
                return true;
            const Vertex u = order_[depth];
            for (Vertex c = 0; c < n_; ++c) {
                if (used_[c] || ! consistent(u, c, depth))
                    continue;
                mapping_[u] = c;
                used_[c] = 1;
                if (place(depth + 1))
                    return true;
                used_[c] = 0;
                mapping_[u] = -1;
            }
            return false;
        }

        const Digraph & g1_;
        const Digraph & g2_;
        int n_;
        std::vector<Vertex> order_;
        std::vector<Vertex> mapping_;
        std::vector<char> used_;
    };
}

std::optional<std::vector<Vertex>> are_isomorphic(const Digraph & g1, const Digraph & g2)
{
    if (g1.vertex_count() > max_isomorphism_vertices || g2.vertex_count() > max_isomorphism_vertices)
        throw std::invalid_argument("isomorphism search supports at most " + std::to_string(max_isomorphism_vertices) + " vertices");
    if (g1.vertex_count() != g2.vertex_count() || g1.arc_count() != g2.arc_count())
        return std::nullopt;
    if (degree_profile(g1) != degree_profile(g2) || digon_count(g1) != digon_count(g2))
        return std::nullopt;
    return IsomorphismSearch(g1, g2).run();
}

std::vector<AdamPair> find_adam_pairs(int n, int k, const std::optional<std::vector<int>> & anchor, int workers)
{
    if (n > max_isomorphism_vertices)
        throw std::invalid_argument("adam pair search supports n <= " + std::to_string(max_isomorphism_vertices));
    if (k < 1)
        throw std::invalid_argument("adam pair search needs k >= 1");

    std::optional<CirculantSpec> anchor_spec;
    if (anchor) {
        anchor_spec.emplace(n, *anchor);
        if (anchor_spec->k() != k)
            throw std::invalid_argument("anchor size differs from k");
    }

    // Canonical representative of every multiplier class, ascending.
    std::vector<std::vector<int>> representatives;
    for (const auto & spec : enumerate_sets(n, k))
        if (multiplier_canonical_form(spec) == spec.connection_set())
            representatives.push_back(spec.connection_set());

    std::vector<std::pair<std::vector<int>, std::vector<int>>> candidates;
    if (anchor_spec) {
        const auto anchor_class = multiplier_canonical_form(*anchor_spec);
        for (const auto & rep : representatives)
            if (rep != anchor_class)
                candidates.emplace_back(anchor_spec->connection_set(), rep);
    }
    else {
        for (std::size_t i = 0; i < representatives.size(); ++i)
            for (std::size_t j = i + 1; j < representatives.size(); ++j)
                candidates.emplace_back(representatives[i], representatives[j]);
    }

    std::vector<std::optional<std::vector<Vertex>>> found(candidates.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < candidates.size();)
            found[i] = are_isomorphic(build_circulant(CirculantSpec(n, candidates[i].first)),
                build_circulant(CirculantSpec(n, candidates[i].second)));
    };
    if (workers <= 1)
        work();
    else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }

    std::vector<AdamPair> pairs;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (found[i])
            pairs.push_back(AdamPair{n, candidates[i].first, candidates[i].second, std::move(*found[i])});
    return pairs;
}

}
