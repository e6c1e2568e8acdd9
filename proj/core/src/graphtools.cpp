#include "haan/graphtools.hpp"

#include "haan/error.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace haan {

SimpleGraph::SimpleGraph(std::size_t n, const std::vector<Edge>& edges)
    : adjacency_(n), matrix_(n, IndexSet(n))
{
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n || e.u == e.v || matrix_[e.u].test(e.v)) {
            std::ostringstream os;
            os << "bad edge (" << e.u << "," << e.v << ") in graph on " << n << " vertices";
            throw Error(ErrorCode::InvalidInstance, os.str());
        }
        matrix_[e.u].set(e.v);
        matrix_[e.v].set(e.u);
        edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::uint32_t v = 0; v < n; ++v)
        adjacency_[v] = to_list(matrix_[v]);
}

SimpleGraph::SimpleGraph(const Instance& inst) : SimpleGraph(inst.n_agents(), inst.edges()) {}

SimpleGraph SimpleGraph::induced(const std::vector<std::uint32_t>& vertices) const
{
    std::vector<std::uint32_t> local(size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = i;
    std::vector<Edge> sub;
    for (const Edge& e : edges_)
        if (local[e.u] != UINT32_MAX && local[e.v] != UINT32_MAX)
            sub.push_back({local[e.u], local[e.v]});
    return SimpleGraph(vertices.size(), sub);
}

std::size_t balanced_part_limit(std::size_t n) noexcept
{
    return (2 * n + 2) / 3;
}

std::vector<std::vector<std::uint32_t>> connected_components(const SimpleGraph& g,
                                                             const IndexSet& removed)
{
    std::vector<std::vector<std::uint32_t>> comps;
    IndexSet seen = removed;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < g.size(); ++s) {
        if (seen.test(s))
            continue;
        comps.emplace_back();
        seen.set(s);
        stack.push_back(s);
        while (!stack.empty()) {
            const std::uint32_t v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (std::uint32_t w : g.neighbors(v)) {
                if (!seen.test(w)) {
                    seen.set(w);
                    stack.push_back(w);
                }
            }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

namespace {

// Best grouping of components into (A1, A2) for a fixed separator, or nullopt.
std::optional<SeparatorDecomposition>
group_components(const std::vector<std::vector<std::uint32_t>>& comps, std::size_t n,
                 const SeparatorOptions& options)
{
    const std::size_t limit = balanced_part_limit(n);
    const std::size_t c = comps.size();
    std::size_t total = 0;
    for (const auto& comp : comps)
        total += comp.size();

    auto fits = [&](std::size_t size) {
        return size <= limit && (!options.require_proper_parts || size < n || n == 0);
    };

    std::optional<SeparatorDecomposition> best;
    std::size_t best_max = SIZE_MAX;
    std::vector<std::uint32_t> a1;
    std::vector<std::uint32_t> a2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
        std::size_t s1 = 0;
        for (std::size_t i = 0; i < c; ++i)
            if (mask >> i & 1)
                s1 += comps[i].size();
        const std::size_t s2 = total - s1;
        if (s1 < s2 || !fits(s1) || !fits(s2) || s1 > best_max)
            continue;
        a1.clear();
        a2.clear();
        for (std::size_t i = 0; i < c; ++i) {
            auto& dst = (mask >> i & 1) ? a1 : a2;
            dst.insert(dst.end(), comps[i].begin(), comps[i].end());
        }
        std::sort(a1.begin(), a1.end());
        std::sort(a2.begin(), a2.end());
        if (!best || s1 < best_max || a1 < best->part1) {
            best_max = s1;
            best = SeparatorDecomposition{{}, a1, a2};
        }
    }
    return best;
}

bool next_combination(std::vector<std::uint32_t>& comb, std::size_t n)
{
    const std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j)
                comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

SeparatorSearch find_balanced_separator(const SimpleGraph& g, std::size_t max_size,
                                        const SeparatorOptions& options)
{
    const std::size_t n = g.size();
    SeparatorSearch out;
    for (std::size_t size = 0; size <= std::min(max_size, n); ++size) {
        std::vector<std::uint32_t> sep(size);
        for (std::uint32_t i = 0; i < size; ++i)
            sep[i] = i;
        do {
            IndexSet removed(n);
            for (std::uint32_t v : sep)
                removed.set(v);
            const auto comps = connected_components(g, removed);
            if (comps.size() > options.max_components) {
                if (!out.skipped_candidates) {
                    std::ostringstream os;
                    os << "skipped separator candidates leaving more than "
                       << options.max_components << " components";
                    out.diagnostic = os.str();
                }
                out.skipped_candidates = true;
                continue;
            }
            if (auto d = group_components(comps, n, options)) {
                d->separator = sep;
                out.decomposition = std::move(d);
                return out;
            }
        } while (next_combination(sep, n));
    }
    return out;
}

std::optional<SeparatorDecomposition> find_balanced_separator(const Instance& inst,
                                                              std::size_t max_size)
{
    return find_balanced_separator(SimpleGraph(inst), max_size).decomposition;
}

bool is_balanced_separator(const SimpleGraph& g, const SeparatorDecomposition& d)
{
    const std::size_t n = g.size();
    std::vector<int> side(n, -1);
    auto mark = [&](const std::vector<std::uint32_t>& list, int s) {
        for (std::uint32_t v : list) {
            if (v >= n || side[v] != -1)
                return false;
            side[v] = s;
        }
        return true;
    };
    if (!mark(d.separator, 0) || !mark(d.part1, 1) || !mark(d.part2, 2))
        return false;
    if (std::count(side.begin(), side.end(), -1) != 0)
        return false;
    const std::size_t limit = balanced_part_limit(n);
    if (d.part1.size() > limit || d.part2.size() > limit)
        return false;
    for (const Edge& e : g.edges())
        if ((side[e.u] == 1 && side[e.v] == 2) || (side[e.u] == 2 && side[e.v] == 1))
            return false;
    return true;
}

namespace {

struct CoverSearch {
    const SimpleGraph& g;
    IndexSet in;
    IndexSet out;

    bool exists(std::size_t budget)
    {
        for (const Edge& e : g.edges()) {
            if (in.test(e.u) || in.test(e.v))
                continue;
            if (budget == 0)
                return false;
            const bool u_ok = !out.test(e.u);
            const bool v_ok = !out.test(e.v);
            if (u_ok) {
                in.set(e.u);
                const bool found = exists(budget - 1);
                in.reset(e.u);
                if (found)
                    return true;
            }
            if (v_ok) {
                // u excluded on this branch; the first branch covered u-in.
                const bool u_was_out = out.test(e.u);
                out.set(e.u);
                in.set(e.v);
                const bool found = exists(budget - 1);
                in.reset(e.v);
                if (!u_was_out)
                    out.reset(e.u);
                if (found)
                    return true;
            }
            return false;
        }
        return true;
    }
};

} // namespace

std::optional<std::vector<std::uint32_t>> find_min_vertex_cover(const SimpleGraph& g,
                                                                std::size_t budget)
{
    const std::size_t n = g.size();
    CoverSearch search{g, IndexSet(n), IndexSet(n)};
    std::size_t k = 0;
    while (!search.exists(k)) {
        if (k >= budget)
            return std::nullopt;
        ++k;
    }
    // Lexicographically smallest cover of size k: include each vertex in turn
    // whenever a size-k cover with the decisions so far still exists.
    std::size_t used = 0;
    for (std::uint32_t v = 0; v < n && used < k; ++v) {
        search.in.set(v);
        if (search.exists(k - used - 1)) {
            ++used;
        } else {
            search.in.reset(v);
            search.out.set(v);
        }
    }
    return to_list(search.in);
}

std::optional<std::vector<std::uint32_t>> find_min_vertex_cover(const Instance& inst,
                                                                std::size_t budget)
{
    return find_min_vertex_cover(SimpleGraph(inst), budget);
}

bool is_vertex_cover(const SimpleGraph& g, const std::vector<std::uint32_t>& cover)
{
    IndexSet in(g.size());
    for (std::uint32_t v : cover) {
        if (v >= g.size())
            return false;
        in.set(v);
    }
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return in.test(e.u) || in.test(e.v); });
}

std::optional<std::size_t> is_regular(const SimpleGraph& g)
{
    if (g.size() == 0)
        return 0;
    const std::size_t d = g.neighbors(0).size();
    for (std::uint32_t v = 1; v < g.size(); ++v)
        if (g.neighbors(v).size() != d)
            return std::nullopt;
    return d;
}

std::optional<std::size_t> is_regular(const Instance& inst)
{
    return is_regular(SimpleGraph(inst));
}

std::optional<Bipartition> is_bipartite(const SimpleGraph& g)
{
    const std::size_t n = g.size();
    std::vector<int> colour(n, -1);
    std::queue<std::uint32_t> q;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (colour[s] != -1)
            continue;
        colour[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const std::uint32_t v = q.front();
            q.pop();
            for (std::uint32_t w : g.neighbors(v)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    q.push(w);
                } else if (colour[w] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (std::uint32_t v = 0; v < n; ++v)
        (colour[v] == 0 ? b.side0 : b.side1).push_back(v);
    return b;
}

std::optional<Bipartition> is_bipartite(const Instance& inst)
{
    return is_bipartite(SimpleGraph(inst));
}

bool is_clique(const SimpleGraph& g, const std::vector<std::uint32_t>& vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.size())
            return false;
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j]))
                return false;
    }
    return true;
}

} // namespace haan
