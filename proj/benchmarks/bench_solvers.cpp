#include "haan/matching.hpp"
#include "haan/reductions.hpp"
#include "haan/solvers.hpp"
#include "haan/source_graphs.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace haan;

namespace {

Instance random_instance(std::size_t n, std::size_t m, std::size_t edges, std::size_t d,
                         std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    RawInstance raw{n, m, {}, std::vector<std::vector<HouseId>>(n)};
    std::vector<Edge> pairs;
    for (AgentId u = 0; u < n; ++u)
        for (AgentId v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    raw.edges.assign(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(
                                                        std::min(edges, pairs.size())));
    std::vector<HouseId> houses(m);
    for (HouseId h = 0; h < m; ++h)
        houses[h] = h;
    for (auto& prefs : raw.preferences) {
        std::shuffle(houses.begin(), houses.end(), rng);
        prefs.assign(houses.begin(), houses.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return validate_instance(raw);
}

SolverConfig single_worker()
{
    SolverConfig cfg;
    cfg.workers = 1;
    cfg.guess_limit = std::nullopt;
    return cfg;
}

void BM_Bruteforce(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Instance inst = random_instance(n, n + 1, n, 2, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_bruteforce(inst, single_worker()));
}
BENCHMARK(BM_Bruteforce)->DenseRange(5, 8);

void BM_D1Matching(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Instance inst = random_instance(n, n + n / 4, 2 * n, 1, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_d1_matching(inst, single_worker()));
}
BENCHMARK(BM_D1Matching)->RangeMultiplier(2)->Range(8, 128);

void BM_EnvyGuess(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Instance inst = random_instance(n, n + 1, n - 2, 2, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_envy_guess(inst, single_worker()));
}
BENCHMARK(BM_EnvyGuess)->DenseRange(6, 10, 2);

void BM_Separator(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Instance inst = random_instance(n, n, n - 1, 2, 4);
    const AnnotatedInstance ann = AnnotatedInstance::unconstrained(inst);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_separator(ann, single_worker()));
}
BENCHMARK(BM_Separator)->DenseRange(4, 7);

void BM_VertexCoverStar(benchmark::State& state)
{
    const auto leaves = static_cast<std::uint32_t>(state.range(0));
    RawInstance raw{leaves + 1, leaves + 10, {}, std::vector<std::vector<HouseId>>(leaves + 1)};
    std::mt19937_64 rng(5);
    for (AgentId leaf = 1; leaf <= leaves; ++leaf)
        raw.edges.push_back({0, leaf});
    for (auto& prefs : raw.preferences)
        prefs.push_back(static_cast<HouseId>(rng() % raw.n_houses));
    for (auto& prefs : raw.preferences)
        if (rng() % 2 == 0 && prefs[0] + 1 < raw.n_houses)
            prefs.push_back(prefs[0] + 1);
    const Instance inst = validate_instance(raw);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_vertex_cover_xp(inst, std::nullopt, single_worker()));
}
BENCHMARK(BM_VertexCoverStar)->RangeMultiplier(2)->Range(8, 64);

void BM_MinCostMatching(benchmark::State& state)
{
    const auto n = static_cast<std::uint32_t>(state.range(0));
    std::mt19937_64 rng(6);
    BipartiteGraph g(n, n);
    for (std::uint32_t l = 0; l < n; ++l)
        for (std::uint32_t r = 0; r < n; ++r)
            if (rng() % 3 != 0)
                g.add_edge(l, r, static_cast<std::int64_t>(rng() % 10));
    for (auto _ : state)
        benchmark::DoNotOptimize(min_cost_max_matching(g));
}
BENCHMARK(BM_MinCostMatching)->RangeMultiplier(2)->Range(8, 256);

void BM_GenerateCliqueBipartite(benchmark::State& state)
{
    const SourceGraph g = random_regular_graph(static_cast<std::size_t>(state.range(0)), 3, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(gen_clique_bipartite_d2(g, 3));
}
BENCHMARK(BM_GenerateCliqueBipartite)->RangeMultiplier(4)->Range(16, 256);

} // namespace

BENCHMARK_MAIN();
