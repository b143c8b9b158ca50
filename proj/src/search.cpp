#include <circham/search.hpp>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

namespace circham {

std::string_view to_string(BoundMode mode)
{
    return mode == BoundMode::strict_4k_plus_1 ? "4k+1" : "4k";
}

std::vector<int> units_mod(int n)
{
    std::vector<int> units;
    for (int a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1)
            units.push_back(a);
    return units;
}

std::vector<int> scaled_set(int n, const std::vector<int> & set, int a)
{
    std::vector<int> result;
    result.reserve(set.size());
    for (int s : set)
        result.push_back(static_cast<int>((static_cast<long long>(a) * s) % n));
    std::sort(result.begin(), result.end());
    return result;
}

namespace {
    // Calls f on each size-k subset of {1..n-1} in lexicographic order.
    template <typename F>
    void for_each_subset(int n, int k, F && f)
    {
        const int m = n - 1;
        if (k < 0 || k > m)
            return;
        std::vector<int> pick(k);
        std::iota(pick.begin(), pick.end(), 1);
        while (true) {
            f(pick);
            int i = k - 1;
            while (i >= 0 && pick[i] == m - (k - 1 - i))
                --i;
            if (i < 0)
                return;
            ++pick[i];
            for (int j = i + 1; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }

    bool in_scope(const CirculantSpec & spec, const SearchOptions & options)
    {
        return (options.allow_digons || set_level_oriented(spec))
            && (options.include_k2 || spec.k() != 2)
            && spec.n() <= max_vertices_for(options.bound_mode, spec.k());
    }
}

std::vector<CirculantSpec> enumerate_sets(int n, int k)
{
    std::vector<CirculantSpec> result;
    if (n < 2 || k < 1)
        return result;
    for_each_subset(n, k, [&](const std::vector<int> & s) { result.emplace_back(n, s); });
    return result;
}

std::vector<CirculantSpec> enumerate_oriented_sets(int n, int k)
{
    std::vector<CirculantSpec> result;
    if (n < 2 || k < 1 || 2 * k + 1 > n)
        return result;
    for_each_subset(n, k, [&](const std::vector<int> & s) {
        CirculantSpec spec(n, s);
        if (set_level_oriented(spec))
            result.push_back(std::move(spec));
    });
    return result;
}

std::vector<int> multiplier_canonical_form(const CirculantSpec & spec)
{
    std::vector<int> best = spec.connection_set();
    for (int a : units_mod(spec.n())) {
        auto candidate = scaled_set(spec.n(), spec.connection_set(), a);
        if (candidate < best)
            best = std::move(candidate);
    }
    return best;
}

bool satisfies_jackson_hypotheses(const CirculantSpec & spec, BoundMode mode)
{
    return in_scope(spec, SearchOptions{.bound_mode = mode});
}

std::vector<int> search_degrees(int n, const SearchOptions & options)
{
    std::vector<int> degrees;
    const int max_k = options.allow_digons ? n - 1 : (n - 1) / 2;
    for (int k = 1; k <= max_k; ++k) {
        if (k == 2 && ! options.include_k2)
            continue;
        if (n <= max_vertices_for(options.bound_mode, k))
            degrees.push_back(k);
    }
    return degrees;
}

SearchReport search_counterexamples(int n_min, int n_max, const SearchOptions & options)
{
    if (n_min < 2 || n_min > n_max || n_max > max_oracle_vertices)
        throw std::invalid_argument("search range must satisfy 2 <= n_min <= n_max <= " + std::to_string(max_oracle_vertices));

    const auto start = std::chrono::steady_clock::now();
    SearchReport report;
    report.n_min = n_min;
    report.n_max = n_max;
    report.options = options;

    struct Task {
        CirculantSpec spec;
        std::size_t layer;
    };
    std::vector<Task> tasks;
    for (int n = n_min; n <= n_max; ++n) {
        SearchLayer layer{.n = n};
        for (int k : search_degrees(n, options)) {
            auto specs = options.allow_digons ? enumerate_sets(n, k) : enumerate_oriented_sets(n, k);
            layer.instances += specs.size();
            for (auto & spec : specs)
                if (multiplier_canonical_form(spec) == spec.connection_set() && in_scope(spec, options)) {
                    ++layer.classes;
                    tasks.push_back(Task{std::move(spec), report.layers.size()});
                }
        }
        report.instances_enumerated += layer.instances;
        report.classes_enumerated += layer.classes;
        report.layers.push_back(layer);
    }

    struct Outcome {
        HamVerdict verdict;
        std::optional<HamVerdict> oracle;
    };
    std::vector<Outcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            const auto g = build_circulant(tasks[i].spec);
            outcomes[i].verdict = find_hamiltonian_cycle(g);
            if (! outcomes[i].verdict.hamiltonian())
                outcomes[i].oracle = held_karp_oracle(g);
        }
    };
    const int workers = std::max(1, options.workers);
    if (workers == 1)
        work();
    else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        auto & outcome = outcomes[i];
        if (outcome.verdict.hamiltonian()) {
            if (! verify_cycle_witness(build_circulant(tasks[i].spec), *outcome.verdict.witness))
                throw std::logic_error("backtracker returned an invalid Hamiltonian circuit");
            continue;
        }
        if (outcome.oracle->hamiltonian())
            throw std::logic_error("oracle found a Hamiltonian circuit the backtracker missed");
        const auto & spec = tasks[i].spec;
        report.counterexamples.push_back(CounterexampleRecord{
            .spec = spec,
            .canonical_set = spec.connection_set(),
            .k = spec.k(),
            .n = spec.n(),
            .verdict = std::move(outcome.verdict),
            .oracle_verdict = std::move(*outcome.oracle),
        });
        ++report.layers[tasks[i].layer].counterexamples;
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end(), [](const auto & a, const auto & b) {
        return std::tie(a.n, a.canonical_set) < std::tie(b.n, b.canonical_set);
    });

    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}
