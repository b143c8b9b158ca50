#include <circham/isomorphism.hpp>
#include <circham/search.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

using namespace circham;

namespace {
    using Set = std::vector<int>;

    bool isomorphic_by_brute_force(const Digraph & a, const Digraph & b)
    {
        if (a.vertex_count() != b.vertex_count())
            return false;
        std::vector<Vertex> perm(a.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (relabeled(a, perm) == b)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    Digraph random_digraph(std::mt19937 & rng, int n, double density)
    {
        std::vector<Arc> arcs;
        std::bernoulli_distribution coin(density);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && coin(rng))
                    arcs.emplace_back(u, v);
        return Digraph(n, arcs);
    }

    Digraph circulant(int n, const Set & s)
    {
        return build_circulant(CirculantSpec(n, s));
    }
}

TEST_CASE("multiplier equivalence")
{
    CHECK(are_multiplier_equivalent(12, {2, 3, 8}, {3, 4, 10}) == 5);
    CHECK(are_multiplier_equivalent(12, {2, 3, 8}, {2, 3, 8}) == 1);
    CHECK_FALSE(are_multiplier_equivalent(12, {2, 3, 8}, {1, 2, 5}));
    CHECK(are_multiplier_equivalent(5, {1}, {2}) == 2);
    CHECK(are_multiplier_equivalent(12, {2, 3, 8}, {10, 3, 4}) == 5);
}

TEST_CASE("isomorphism of small digraphs")
{
    auto c5 = circulant(5, {1});
    std::vector<Vertex> perm{3, 0, 4, 1, 2};
    auto shuffled = relabeled(c5, perm);
    auto mapping = are_isomorphic(c5, shuffled);
    REQUIRE(mapping);
    CHECK(verify_isomorphism(c5, shuffled, *mapping));

    CHECK_FALSE(are_isomorphic(c5, circulant(6, {1})));
    CHECK_FALSE(are_isomorphic(circulant(6, {1}), circulant(6, {1, 2})));
    // Same degrees, different cycle structure.
    auto triangle = circulant(3, {1});
    CHECK_FALSE(are_isomorphic(circulant(6, {1}), disjoint_union(triangle, triangle)));

    CHECK_THROWS_AS(are_isomorphic(circulant(17, {1}), circulant(17, {1})), std::invalid_argument);
}

TEST_CASE("multiplier map is an isomorphism of the 12-vertex counterexample")
{
    auto h = circulant(12, {2, 3, 8});
    auto partner = circulant(12, {3, 4, 10});
    std::vector<Vertex> times_five(12);
    for (int v = 0; v < 12; ++v)
        times_five[v] = 5 * v % 12;
    CHECK(verify_isomorphism(h, partner, times_five));

    auto mapping = are_isomorphic(h, partner);
    REQUIRE(mapping);
    CHECK(verify_isomorphism(h, partner, *mapping));
}

TEST_CASE("isomorphism checker rejects bad mappings")
{
    auto c4 = circulant(4, {1});
    CHECK(verify_isomorphism(c4, c4, std::vector<Vertex>{1, 2, 3, 0}));
    CHECK_FALSE(verify_isomorphism(c4, c4, std::vector<Vertex>{1, 0, 2, 3}));
    CHECK_FALSE(verify_isomorphism(c4, c4, std::vector<Vertex>{0, 0, 2, 3}));
    CHECK_FALSE(verify_isomorphism(c4, c4, std::vector<Vertex>{0, 1, 2}));
}

TEST_CASE("backtracker agrees with permutation brute force")
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 250; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 6)(rng);
        auto a = random_digraph(rng, n, 0.4);
        // Half the time compare with a relabeled copy, otherwise with a fresh graph of equal arc count.
        Digraph b;
        if (trial % 2 == 0) {
            std::vector<Vertex> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            b = relabeled(a, perm);
        }
        else {
            do
                b = random_digraph(rng, n, 0.4);
            while (b.arc_count() != a.arc_count() && n > 1);
        }
        CAPTURE(trial);
        auto forward = are_isomorphic(a, b);
        auto backward = are_isomorphic(b, a);
        CHECK(forward.has_value() == isomorphic_by_brute_force(a, b));
        CHECK(forward.has_value() == backward.has_value());
        if (forward) {
            CHECK(verify_isomorphism(a, b, *forward));
            CHECK(verify_isomorphism(b, a, *backward));
            CHECK(digon_count(a) == digon_count(b));
        }
    }
}

TEST_CASE("multiplier equivalence implies isomorphism")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 12)(rng);
        Set s;
        for (int i = 1; i < n; ++i)
            if (std::bernoulli_distribution(0.35)(rng))
                s.push_back(i);
        const auto units = units_mod(n);
        const int a = units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
        const auto image = scaled_set(n, s, a);
        auto unit = are_multiplier_equivalent(n, s, image);
        REQUIRE(unit);

        std::vector<Vertex> induced(n);
        for (int v = 0; v < n; ++v)
            induced[v] = *unit * v % n;
        CHECK(verify_isomorphism(circulant(n, s), circulant(n, image), induced));
        CHECK(are_isomorphic(circulant(n, s), circulant(n, image)));
    }
}

TEST_CASE("no Adam pairs among single-generator circulants of order 5")
{
    CHECK(find_adam_pairs(5, 1, Set{1}).empty());
    CHECK(find_adam_pairs(5, 1).empty());
}

TEST_CASE("Adam pairs on Z_8 with three generators")
{
    // {1,2,5} and {1,5,6} are the smallest such pair.
    auto pairs = find_adam_pairs(8, 3);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].set_a == Set{1, 2, 5});
    CHECK(pairs[0].set_b == Set{1, 5, 6});
    CHECK(verify_isomorphism(circulant(8, {1, 2, 5}), circulant(8, {1, 5, 6}), pairs[0].mapping));
    CHECK(isomorphic_by_brute_force(circulant(8, {1, 2, 5}), circulant(8, {1, 5, 6})));
    for (int a = 1; a < 8; a += 2)
        CHECK(scaled_set(8, {1, 2, 5}, a) != Set{1, 5, 6});

    auto anchored = find_adam_pairs(8, 3, Set{2, 5, 1});
    REQUIRE(anchored.size() == 1);
    CHECK(anchored[0].set_a == Set{1, 2, 5});
    CHECK(anchored[0].set_b == Set{1, 5, 6});
}

TEST_CASE("Adam pairs on Z_16 with three generators")
{
    auto pairs = find_adam_pairs(16, 3);
    std::vector<std::pair<Set, Set>> found;
    for (const auto & pair : pairs) {
        CHECK(verify_isomorphism(circulant(16, pair.set_a), circulant(16, pair.set_b), pair.mapping));
        CHECK_FALSE(are_multiplier_equivalent(16, pair.set_a, pair.set_b));
        found.emplace_back(pair.set_a, pair.set_b);
    }
    CHECK(found == std::vector<std::pair<Set, Set>>{{{1, 2, 9}, {1, 9, 10}}, {{1, 4, 9}, {1, 9, 12}}, {{1, 6, 9}, {1, 9, 14}}, {{2, 4, 10}, {2, 10, 12}}});
}

TEST_CASE("Adam search around the 12-vertex counterexample matches exhaustive enumeration")
{
    const Set anchor{2, 3, 8};
    const std::set<Set> anchor_class{{2, 3, 8}, {2, 8, 9}, {3, 4, 10}, {4, 9, 10}};
    auto pairs = find_adam_pairs(12, 3, anchor);

    auto h = circulant(12, anchor);
    std::set<Set> partner_classes;
    for (const auto & pair : pairs) {
        CHECK(pair.set_a == anchor);
        CHECK(anchor_class.count(pair.set_b) == 0);
        CHECK_FALSE(are_multiplier_equivalent(12, pair.set_a, pair.set_b));
        CHECK(verify_isomorphism(h, circulant(12, pair.set_b), pair.mapping));
        partner_classes.insert(pair.set_b);
    }

    // Every one of the 165 three-element sets, not just class representatives.
    std::set<Set> expected;
    for (const auto & spec : enumerate_sets(12, 3)) {
        if (anchor_class.count(spec.connection_set()))
            continue;
        if (are_isomorphic(h, build_circulant(spec)))
            expected.insert(multiplier_canonical_form(spec));
    }
    CHECK(enumerate_sets(12, 3).size() == 165);
    CHECK(partner_classes == expected);
}

TEST_CASE("Adam search from a different anchor is self-consistent")
{
    for (const auto & pair : find_adam_pairs(12, 3, Set{1, 2, 3})) {
        CHECK_FALSE(are_multiplier_equivalent(12, pair.set_a, pair.set_b));
        CHECK(verify_isomorphism(circulant(12, pair.set_a), circulant(12, pair.set_b), pair.mapping));
    }
}

TEST_CASE("Z_12 has no Adam pairs")
{
    for (int k = 1; k <= 11; ++k) {
        CAPTURE(k);
        CHECK(find_adam_pairs(12, k).empty());
    }
}

TEST_CASE("Adam search without anchor lists class pairs in order")
{
    for (int n : {8, 16}) {
        auto pairs = find_adam_pairs(n, 3);
        CHECK(std::is_sorted(pairs.begin(), pairs.end(), [](const auto & x, const auto & y) {
            return std::tie(x.set_a, x.set_b) < std::tie(y.set_a, y.set_b);
        }));
        for (const auto & pair : pairs)
            CHECK(pair.set_a < pair.set_b);
    }
}

TEST_CASE("Adam search is independent of worker count")
{
    auto one = find_adam_pairs(16, 3, std::nullopt, 1);
    auto four = find_adam_pairs(16, 3, std::nullopt, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].set_a == four[i].set_a);
        CHECK(one[i].set_b == four[i].set_b);
        CHECK(one[i].mapping == four[i].mapping);
    }
}

TEST_CASE("Adam search guards")
{
    CHECK_THROWS_AS(find_adam_pairs(17, 3), std::invalid_argument);
    CHECK_THROWS_AS(find_adam_pairs(12, 0), std::invalid_argument);
    CHECK_THROWS_AS(find_adam_pairs(12, 3, Set{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(find_adam_pairs(12, 3, Set{0, 1, 2}), std::invalid_argument);
}
