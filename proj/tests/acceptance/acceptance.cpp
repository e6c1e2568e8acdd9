#include "haan/error.hpp"
#include "haan/graphtools.hpp"
#include "haan/io.hpp"
#include "haan/matching.hpp"
#include "haan/reductions.hpp"
#include "haan/solvers.hpp"
#include "haan/source_graphs.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace haan;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
    std::vector<std::string> failures;

    void fail(const std::string& what)
    {
        ok = false;
        if (failures.size() < 5)
            failures.push_back(what);
    }
};

SolverConfig config(Objective obj, std::size_t workers = 1)
{
    SolverConfig cfg;
    cfg.objective = obj;
    cfg.workers = workers;
    cfg.guess_limit = std::nullopt;
    return cfg;
}

std::string describe(const Instance& inst)
{
    std::ostringstream os;
    InstanceDocument doc;
    doc.instance = AnnotatedInstance::unconstrained(inst);
    write_instance(os, doc);
    std::string text = os.str();
    std::replace(text.begin(), text.end(), '\n', ';');
    return text;
}

std::vector<std::string_view> applicable(const Instance& inst)
{
    std::vector<std::string_view> algos = {"envy-guess", "separator", "vc-xp", "auto"};
    if (inst.max_preference_size() <= 1)
        algos.push_back("d1");
    return algos;
}

/// Every applicable solver against solve_bruteforce and the enumeration oracle.
void compare_solvers(const Instance& inst, Outcome& out)
{
    const auto opt = oracle::enumerate(oracle::from_instance(inst));
    for (const Objective obj : {Objective::MinEnvy, Objective::MinEnvyThenMaxHappy}) {
        const SolveResult ref = solve_bruteforce(inst, config(obj));
        if (!opt || ref.min_envy != opt->min_envy ||
            (obj == Objective::MinEnvyThenMaxHappy && ref.happiness != opt->max_happy))
            out.fail("brute vs enumeration on " + describe(inst));
        for (const auto algo : applicable(inst)) {
            const SolveResult r = solve(inst, algo, config(obj));
            const bool same = obj == Objective::MinEnvy
                                  ? r.min_envy == ref.min_envy
                                  : r.min_envy == ref.min_envy && r.happiness == ref.happiness;
            const EnvyReport rep = evaluate(inst, r.allocation);
            if (!same || rep.n_envious != r.min_envy || rep.n_happy != r.happiness)
                out.fail(std::string(algo) + " on " + describe(inst));
        }
    }
}

Outcome criterion_oracle()
{
    Outcome out;
    std::size_t exhaustive = 0;
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto graphs = oracle::all_graphs(n);
        for (std::size_t m = n; m <= n + 1; ++m) {
            std::size_t profiles = 1;
            for (std::size_t a = 0; a < n; ++a)
                profiles *= m + 1;
            for (const SourceGraph& g : graphs) {
                for (std::size_t code = 0; code < profiles; ++code) {
                    RawInstance raw{n, m, g.edges, std::vector<std::vector<HouseId>>(n)};
                    std::size_t c = code;
                    for (std::size_t a = 0; a < n; ++a, c /= m + 1)
                        if (c % (m + 1) != 0)
                            raw.preferences[a].push_back(static_cast<HouseId>(c % (m + 1) - 1));
                    compare_solvers(validate_instance(raw), out);
                    ++exhaustive;
                }
            }
        }
    }
    std::mt19937_64 rng(101);
    const std::size_t random = 600;
    for (std::size_t i = 0; i < random; ++i) {
        const std::size_t n = rng() % 7;
        const std::size_t m = n + rng() % (8 - n);
        compare_solvers(oracle::random_instance(rng, n, m, 0.2 + 0.6 * (rng() % 4) / 3.0, rng() % 4),
                        out);
    }
    out.detail = std::to_string(exhaustive) + " exhaustive + " + std::to_string(random) +
                 " random instances";
    return out;
}

/// Minimum cost among maximum-cardinality matchings, by enumeration.
std::pair<std::size_t, std::int64_t> enumerate_matchings(
    std::size_t nl, std::size_t nr, const std::vector<std::vector<std::int64_t>>& cost)
{
    std::size_t best_size = 0;
    std::int64_t best_cost = 0;
    std::vector<bool> used(nr, false);
    std::function<void(std::size_t, std::size_t, std::int64_t)> rec =
        [&](std::size_t l, std::size_t size, std::int64_t total) {
            if (l == nl) {
                if (size > best_size || (size == best_size && total < best_cost)) {
                    best_size = size;
                    best_cost = total;
                }
                return;
            }
            rec(l + 1, size, total);
            for (std::size_t r = 0; r < nr; ++r) {
                if (used[r] || cost[l][r] < 0)
                    continue;
                used[r] = true;
                rec(l + 1, size + 1, total + cost[l][r]);
                used[r] = false;
            }
        };
    rec(0, 0, 0);
    return {best_size, best_cost};
}

Outcome criterion_matching()
{
    Outcome out;
    std::mt19937_64 rng(202);
    const std::size_t cases = 1500;
    for (std::size_t i = 0; i < cases; ++i) {
        const std::size_t nl = rng() % 7;
        const std::size_t nr = rng() % 7;
        const double density = (1 + rng() % 4) / 4.0;
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        std::vector<std::vector<std::int64_t>> cost(nl, std::vector<std::int64_t>(nr, -1));
        BipartiteGraph g(nl, nr);
        for (std::uint32_t l = 0; l < nl; ++l)
            for (std::uint32_t r = 0; r < nr; ++r)
                if (coin(rng) < density) {
                    cost[l][r] = static_cast<std::int64_t>(rng() % 10);
                    g.add_edge(l, r, cost[l][r]);
                }
        const Matching mt = min_cost_max_matching(g);
        const auto [size, total] = enumerate_matchings(nl, nr, cost);
        std::int64_t recomputed = 0;
        std::vector<bool> seen(nr, false);
        bool valid = true;
        for (const auto& [l, r] : mt.pairs) {
            if (l >= nl || r >= nr || seen[r] || cost[l][r] < 0) {
                valid = false;
                break;
            }
            seen[r] = true;
            recomputed += cost[l][r];
        }
        if (!valid || mt.size() != size || mt.total_cost != total || recomputed != total)
            out.fail("case " + std::to_string(i));
    }
    out.detail = std::to_string(cases) + " random bipartite graphs";
    return out;
}

constexpr std::size_t kAgentCap = 10;

std::size_t min_envy(const Instance& inst)
{
    return solve_bruteforce(inst, config(Objective::MinEnvy, 0)).min_envy;
}

/// Reduced instance answers "yes" iff its min envy is at most the target.
/// Too few houses means no allocation at all, hence "no".
bool reduced_yes(const ReducedInstance& red)
{
    if (red.instance.n_houses() < red.instance.n_agents())
        return false;
    return static_cast<std::int64_t>(min_envy(red.instance)) <= red.target_envy;
}

Outcome criterion_equivalence()
{
    Outcome out;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    const auto check = [&](const std::string& name, const ReducedInstance& red, bool source_yes) {
        if (red.instance.n_agents() > kAgentCap) {
            ++skipped;
            return;
        }
        ++checked;
        if (reduced_yes(red) != source_yes)
            out.fail(name);
    };
    for (std::size_t nv = 1; nv <= 5; ++nv) {
        for (const SourceGraph& g : oracle::all_graphs(nv)) {
            std::string name = "n=" + std::to_string(nv) + " edges=" + std::to_string(g.edges.size());
            for (const Edge& e : g.edges)
                name += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
            const auto degree = is_regular(SimpleGraph(g.n_vertices, g.edges));
            const bool regular = degree.has_value();
            if (degree == std::size_t{3})
                for (std::int64_t k = 0; k <= static_cast<std::int64_t>(nv); ++k)
                    check("halfsep " + name + " k=" + std::to_string(k),
                          gen_halfsep_3regular(g, k),
                          oracle::has_half_separator(g, static_cast<std::size_t>(k)));
            for (std::int64_t k = 1; k <= static_cast<std::int64_t>(nv); ++k) {
                const bool yes = oracle::has_clique(g, static_cast<std::size_t>(k));
                const std::string tag = name + " k=" + std::to_string(k);
                if (regular)
                    check("clique-bip-d2 " + tag, gen_clique_bipartite_d2(g, k), yes);
                check("clique-vc-bip " + tag, gen_clique_vc_bipartite(g, k), yes);
                if (!g.edges.empty())
                    for (std::int64_t t = 1; t <= 2; ++t)
                        check("clique-vc-split t=" + std::to_string(t) + " " + tag,
                              gen_clique_vc_split(g, k, t), yes);
            }
        }
    }
    out.detail = std::to_string(checked) + " reduced instances checked, " +
                 std::to_string(skipped) + " skipped above " + std::to_string(kAgentCap) +
                 " agents";
    return out;
}

Outcome criterion_witnesses()
{
    Outcome out;
    std::size_t witnesses = 0;
    const auto audit = [&](const std::string& name, const ReducedInstance& red,
                           const Allocation& alloc, bool exact) {
        ++witnesses;
        check_allocation(red.instance, alloc);
        const oracle::Plain p = oracle::from_instance(red.instance);
        const auto envy = static_cast<std::int64_t>(oracle::count_envy(p, alloc.houses()));
        if (envy > red.target_envy || (exact && envy != red.target_envy))
            out.fail(name + " envy " + std::to_string(envy) + " target " +
                     std::to_string(red.target_envy));
    };
    const auto prefix = [](std::size_t k) {
        std::vector<std::uint32_t> c(k);
        for (std::size_t i = 0; i < k; ++i)
            c[i] = static_cast<std::uint32_t>(i);
        return c;
    };

    const SourceGraph k4 = complete_graph(4);
    for (std::int64_t k = 1; k <= 3; ++k) {
        const ReducedInstance red = gen_clique_bipartite_d2(k4, k);
        audit("K4 clique-bip-d2 k=" + std::to_string(k), red,
              witness_from_clique(red, prefix(static_cast<std::size_t>(k))), true);
    }
    if (gen_clique_bipartite_d2(k4, 3).target_envy != 6)
        out.fail("K4 k=3 target is not 6");

    // Half separator family on the prism: every valid triple for k=2 and k=4.
    const SourceGraph prism = named_graph("prism");
    std::string prism_note;
    for (std::int64_t k : {2, 4}) {
        const ReducedInstance red = gen_halfsep_3regular(prism, k);
        const auto seps = oracle::half_separators(prism, static_cast<std::size_t>(k));
        for (const HalfSeparator& sep : seps)
            audit("prism halfsep k=" + std::to_string(k), red,
                  witness_from_separator(red, pad_half_separator(prism, k, sep)), false);
        prism_note += " prism k=" + std::to_string(k) + ": " + std::to_string(seps.size()) +
                      " separators";
        if (seps.empty()) {
            const std::size_t envy = min_envy(red.instance);
            prism_note += " (min envy " + std::to_string(envy) + " > target " +
                          std::to_string(red.target_envy) + ")";
            if (static_cast<std::int64_t>(envy) <= red.target_envy)
                out.fail("prism k=" + std::to_string(k) + " reduced yes without a separator");
        }
    }

    const SourceGraph k3 = complete_graph(3);
    for (std::int64_t k = 1; k <= 3; ++k) {
        const auto clique = prefix(static_cast<std::size_t>(k));
        for (std::int64_t pad = 0; pad <= 1; ++pad) {
            const ReducedInstance bip = gen_clique_vc_bipartite(k3, k, pad);
            audit("K3 clique-vc-bip k=" + std::to_string(k), bip,
                  witness_from_clique_vc(bip, clique), false);
        }
        for (std::int64_t t = 1; t <= 2; ++t) {
            const ReducedInstance split = gen_clique_vc_split(k3, k, t);
            audit("K3 clique-vc-split k=" + std::to_string(k), split,
                  witness_from_clique_vc(split, clique), false);
        }
    }
    out.detail = std::to_string(witnesses) + " witnesses;" + prism_note;
    return out;
}

Outcome criterion_happiness()
{
    Outcome out;
    std::mt19937_64 rng(505);
    const std::size_t cases = 300;
    for (std::size_t i = 0; i < cases; ++i) {
        const std::size_t n = 1 + rng() % 5;
        const std::size_t m = n + rng() % 3;
        const Instance inst = oracle::random_instance(rng, n, m, 0.5, 1 + rng() % 3);
        const auto opt = oracle::enumerate(oracle::from_instance(inst));
        std::vector<std::string_view> algos = applicable(inst);
        algos.push_back("brute");
        for (const auto algo : algos) {
            const SolveResult r = solve(inst, algo, config(Objective::MinEnvyThenMaxHappy));
            if (r.min_envy != opt->min_envy || r.happiness != opt->max_happy)
                out.fail(std::string(algo) + " on " + describe(inst));
        }
    }
    out.detail = std::to_string(cases) + " random instances";
    return out;
}

Outcome criterion_monotonicity()
{
    Outcome out;
    std::mt19937_64 rng(606);
    const std::size_t cases = 250;
    for (std::size_t i = 0; i < cases; ++i) {
        const std::size_t n = 1 + rng() % 6;
        const std::size_t m = n + rng() % 2;
        const Instance inst = oracle::random_instance(rng, n, m, 0.5, rng() % 4);
        const std::size_t base = solve(inst, "auto", config(Objective::MinEnvy)).min_envy;

        RawInstance more = inst.to_raw();
        more.n_houses += 1;
        const std::size_t with_dummy =
            solve(validate_instance(more), "auto", config(Objective::MinEnvy)).min_envy;
        if (with_dummy > base)
            out.fail("dummy house on " + describe(inst));

        if (!inst.edges().empty()) {
            RawInstance fewer = inst.to_raw();
            fewer.edges.erase(fewer.edges.begin() +
                              static_cast<std::ptrdiff_t>(rng() % fewer.edges.size()));
            const std::size_t without =
                solve(validate_instance(fewer), "auto", config(Objective::MinEnvy)).min_envy;
            if (without > base)
                out.fail("edge deletion on " + describe(inst));
        } else {
            --i;
        }
    }
    out.detail = std::to_string(cases) + " cases each";
    return out;
}

Outcome criterion_determinism()
{
    Outcome out;
    std::mt19937_64 rng(707);
    const std::size_t corpus = 20;
    for (std::size_t i = 0; i < corpus; ++i) {
        const std::size_t n = 4 + rng() % 4;
        const Instance inst = oracle::random_instance(rng, n, n + rng() % 2, 0.4, 1 + rng() % 3);
        for (const auto algo : {"brute", "envy-guess", "separator", "vc-xp", "auto"}) {
            std::string first;
            for (const std::size_t workers : {1, 2, 8}) {
                ResultDocument doc;
                doc.objective = Objective::MinEnvyThenMaxHappy;
                doc.result = solve(inst, algo, config(doc.objective, workers));
                std::ostringstream os;
                write_result(os, doc);
                if (workers == 1)
                    first = os.str();
                else if (os.str() != first)
                    out.fail(std::string(algo) + " with " + std::to_string(workers) +
                             " workers on instance " + std::to_string(i));
            }
        }
    }
    out.detail = std::to_string(corpus) + " instances x 5 algorithms x {1,2,8} workers";
    return out;
}

Outcome criterion_runtime()
{
    Outcome out;
    std::mt19937_64 rng(808);

    RawInstance raw{10, 11, {}, std::vector<std::vector<HouseId>>(10)};
    std::vector<Edge> pairs;
    for (AgentId u = 0; u < 10; ++u)
        for (AgentId v = u + 1; v < 10; ++v)
            pairs.push_back({u, v});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    raw.edges.assign(pairs.begin(), pairs.begin() + 8);
    for (auto& prefs : raw.preferences)
        for (HouseId h = 0; h < 11; ++h)
            if (rng() % 4 == 0 && prefs.size() < 3)
                prefs.push_back(h);
    const Instance guess = validate_instance(raw);
    SolverConfig budget;
    budget.objective = Objective::MinEnvyThenMaxHappy;
    const auto t0 = Clock::now();
    std::string guess_note;
    try {
        const SolveResult r = solve_envy_guess(guess, budget);
        guess_note = "envy-guess n=10 |E|=8 m=11: " + std::to_string(r.guesses_explored) +
                     " guesses";
    } catch (const Error& e) {
        out.fail(std::string("envy-guess: ") + e.what());
    }
    const double guess_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

    RawInstance star{51, 60, {}, std::vector<std::vector<HouseId>>(51)};
    for (AgentId leaf = 1; leaf <= 50; ++leaf)
        star.edges.push_back({0, leaf});
    for (auto& prefs : star.preferences)
        for (HouseId h = 0; h < 60; ++h)
            if (rng() % 10 == 0 && prefs.size() < 3)
                prefs.push_back(h);
    const Instance star_inst = validate_instance(star);
    const auto t1 = Clock::now();
    try {
        const SolveResult r = solve_vertex_cover_xp(star_inst, std::nullopt, budget);
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t1).count();
        if (ms >= 5000.0)
            out.fail("vc-xp took " + std::to_string(ms) + " ms");
        char buf[160];
        std::snprintf(buf, sizeof buf, "; %.0f ms; vc-xp K_{1,50} m=60: %.0f ms, %llu guesses",
                      guess_ms, ms, static_cast<unsigned long long>(r.guesses_explored));
        guess_note += buf;
    } catch (const Error& e) {
        out.fail(std::string("vc-xp: ") + e.what());
    }
    out.detail = guess_note;
    return out;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"1 oracle agreement", criterion_oracle},
        {"2 matching oracle", criterion_matching},
        {"3 reduction equivalence", criterion_equivalence},
        {"4 witness soundness", criterion_witnesses},
        {"5 happiness tie-break", criterion_happiness},
        {"6 monotonicity", criterion_monotonicity},
        {"7 determinism under parallelism", criterion_determinism},
        {"8 runtime sanity", criterion_runtime},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = Clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("%s criterion %s: %s (%.1f s)\n", out.ok ? "PASS" : "FAIL", c.name,
                    out.detail.c_str(), secs);
        for (const std::string& f : out.failures)
            std::printf("    %s\n", f.c_str());
        std::fflush(stdout);
        failed += !out.ok;
    }
    return failed == 0 ? 0 : 1;
}
