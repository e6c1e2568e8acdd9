#include "haan/matching.hpp"

#include "haan/error.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

namespace haan {

void BipartiteGraph::reset(std::size_t n_left, std::size_t n_right)
{
    n_left_ = n_left;
    n_right_ = n_right;
    arcs_.clear();
    if (out_.size() < n_left)
        out_.resize(n_left);
    if (present_.size() < n_left)
        present_.resize(n_left);
    for (std::size_t l = 0; l < n_left; ++l) {
        out_[l].clear();
        present_[l].resize(n_right);
        present_[l].reset();
    }
}

void BipartiteGraph::add_edge(std::uint32_t left, std::uint32_t right, std::int64_t cost)
{
    if (left >= n_left_ || right >= n_right_) {
        std::ostringstream os;
        os << "bipartite edge (" << left << "," << right << ") out of range " << n_left_ << "x"
           << n_right_;
        throw Error(ErrorCode::InvalidConfig, os.str());
    }
    if (present_[left].test(right)) {
        std::ostringstream os;
        os << "duplicate bipartite edge (" << left << "," << right << ")";
        throw Error(ErrorCode::InvalidConfig, os.str());
    }
    present_[left].set(right);
    out_[left].push_back(static_cast<std::uint32_t>(arcs_.size()));
    arcs_.push_back({left, right, cost});
}

namespace {

constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();

struct KuhnState {
    const BipartiteGraph& g;
    std::vector<std::uint32_t> match_left;  // left -> arc index
    std::vector<std::uint32_t> match_right; // right -> left
    std::vector<std::uint32_t> seen;
    std::uint32_t stamp = 0;

    bool augment(std::uint32_t l)
    {
        for (std::uint32_t arc : g.out(l)) {
            const std::uint32_t r = g.arcs()[arc].right;
            if (seen[r] == stamp)
                continue;
            seen[r] = stamp;
            if (match_right[r] == kFree || augment(match_right[r])) {
                match_right[r] = l;
                match_left[l] = arc;
                return true;
            }
        }
        return false;
    }
};

Matching collect(const BipartiteGraph& g, const std::vector<std::uint32_t>& match_left)
{
    Matching m;
    for (std::uint32_t l = 0; l < g.n_left(); ++l) {
        if (match_left[l] == kFree)
            continue;
        const auto& arc = g.arcs()[match_left[l]];
        m.pairs.emplace_back(l, arc.right);
        m.total_cost += arc.cost;
    }
    return m;
}

} // namespace

Matching max_cardinality_matching(const BipartiteGraph& g)
{
    KuhnState st{g, std::vector<std::uint32_t>(g.n_left(), kFree),
                 std::vector<std::uint32_t>(g.n_right(), kFree),
                 std::vector<std::uint32_t>(g.n_right(), 0), 0};
    // Greedy pass first; it settles most vertices on the dense graphs solvers build.
    for (std::uint32_t l = 0; l < g.n_left(); ++l) {
        for (std::uint32_t arc : g.out(l)) {
            const std::uint32_t r = g.arcs()[arc].right;
            if (st.match_right[r] == kFree) {
                st.match_right[r] = l;
                st.match_left[l] = arc;
                break;
            }
        }
    }
    for (std::uint32_t l = 0; l < g.n_left(); ++l) {
        if (st.match_left[l] != kFree)
            continue;
        ++st.stamp;
        st.augment(l);
    }
    return collect(g, st.match_left);
}

Matching min_cost_max_matching(const BipartiteGraph& g)
{
    const std::size_t nl = g.n_left();
    const std::size_t nr = g.n_right();
    const auto& arcs = g.arcs();

    // Every maximum matching has the same size, so shifting all costs by a
    // constant preserves the optimum and lets Dijkstra start from zero potentials.
    std::int64_t shift = 0;
    for (const auto& a : arcs)
        shift = std::min(shift, a.cost);

    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::uint32_t> match_left(nl, kFree);  // arc index
    std::vector<std::uint32_t> match_right(nr, kFree); // left vertex
    // Node ids: left l -> l, right r -> nl + r. Potentials of matched-into nodes.
    std::vector<std::int64_t> pot(nl + nr, 0);
    std::vector<std::int64_t> dist(nl + nr);
    std::vector<std::uint32_t> via(nl + nr); // left: unused; right: arc used to reach it
    std::vector<bool> done(nl + nr);

    using Item = std::pair<std::int64_t, std::uint32_t>;
    for (;;) {
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(done.begin(), done.end(), false);
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        for (std::uint32_t l = 0; l < nl; ++l) {
            if (match_left[l] == kFree) {
                dist[l] = 0;
                pq.emplace(0, l);
            }
        }
        std::int64_t best = kInf;
        std::uint32_t best_right = kFree;
        while (!pq.empty()) {
            auto [d, u] = pq.top();
            pq.pop();
            if (done[u] || d != dist[u])
                continue;
            done[u] = true;
            if (u < nl) {
                for (std::uint32_t ai : g.out(u)) {
                    const auto& a = arcs[ai];
                    if (match_left[u] == ai)
                        continue;
                    const std::uint32_t v = static_cast<std::uint32_t>(nl + a.right);
                    const std::int64_t nd = d + (a.cost - shift) + pot[u] - pot[v];
                    if (nd < dist[v]) {
                        dist[v] = nd;
                        via[v] = ai;
                        pq.emplace(nd, v);
                    }
                }
            } else {
                const std::uint32_t r = u - static_cast<std::uint32_t>(nl);
                if (match_right[r] == kFree) {
                    // Free right vertex: candidate endpoint (true distance d - pot correction).
                    const std::int64_t real = d + pot[u];
                    if (real < best) {
                        best = real;
                        best_right = r;
                    }
                    continue;
                }
                const std::uint32_t l = match_right[r];
                const std::int64_t back = -(arcs[match_left[l]].cost - shift);
                const std::int64_t nd = d + back + pot[u] - pot[l];
                if (nd < dist[l]) {
                    dist[l] = nd;
                    pq.emplace(nd, l);
                }
            }
        }
        if (best_right == kFree)
            break;

        // Potentials: pot += dist (capped) keeps reduced costs non-negative.
        for (std::size_t v = 0; v < nl + nr; ++v)
            if (dist[v] < kInf)
                pot[v] += dist[v];

        std::uint32_t r = best_right;
        for (;;) {
            const std::uint32_t ai = via[nl + r];
            const std::uint32_t l = arcs[ai].left;
            const std::uint32_t prev = match_left[l];
            match_left[l] = ai;
            match_right[r] = l;
            if (prev == kFree)
                break;
            r = arcs[prev].right;
        }
    }
    return collect(g, match_left);
}

} // namespace haan
