#include "haan/graphtools.hpp"
#include "search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

namespace haan {

namespace {

// One node of the fixed decomposition tree; positions index `agents`.
struct Node {
    std::vector<AgentId> agents;
    std::vector<std::uint32_t> sep;
    std::vector<std::uint32_t> part1;
    std::vector<std::uint32_t> part2;
    int child1 = -1;
    int child2 = -1;
};

class Tree {
public:
    Tree(const Instance& inst, std::optional<std::size_t> max_size) : inst_(inst), max_size_(max_size)
    {
        std::vector<AgentId> all(inst.n_agents());
        for (AgentId a = 0; a < all.size(); ++a)
            all[a] = a;
        root_ = build(all);
    }

    int root() const noexcept { return root_; }
    const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

private:
    int build(const std::vector<AgentId>& agents)
    {
        if (agents.empty())
            return -1;
        const SimpleGraph local = SimpleGraph(inst_).induced(agents);
        SeparatorOptions options;
        options.require_proper_parts = true;
        const std::size_t cap = max_size_ ? std::min(*max_size_, agents.size()) : agents.size();
        const SeparatorSearch found = find_balanced_separator(local, cap, options);
        if (!found.decomposition) {
            std::ostringstream os;
            os << "no balanced separator of size <= " << cap << " on " << agents.size()
               << " agents";
            if (found.skipped_candidates)
                os << " (" << found.diagnostic << ")";
            throw Error(ErrorCode::SeparatorNotFound, os.str());
        }
        const SeparatorDecomposition& d = *found.decomposition;
        Node node;
        node.agents = agents;
        node.sep = d.separator;
        node.part1 = d.part1;
        node.part2 = d.part2;
        auto globals = [&](const std::vector<std::uint32_t>& pos) {
            std::vector<AgentId> out;
            for (std::uint32_t p : pos)
                out.push_back(agents[p]);
            return out;
        };
        const int child1 = build(globals(d.part1));
        const int child2 = build(globals(d.part2));
        node.child1 = child1;
        node.child2 = child2;
        nodes_.push_back(std::move(node));
        return static_cast<int>(nodes_.size() - 1);
    }

    const Instance& inst_;
    std::optional<std::size_t> max_size_;
    std::vector<Node> nodes_;
    int root_ = -1;
};

// Per-agent data of a subproblem, indexed by position in the node.
struct Sub {
    IndexSet houses;
    std::vector<IndexSet> pref;
    std::vector<IndexSet> feasible;
    std::vector<char> angry;
};

struct Found {
    std::int64_t value = 0;
    std::vector<HouseId> houses;
};

class Recursion {
public:
    Recursion(const Instance& inst, const Tree& tree, std::int64_t weight, bool lex,
              detail::SearchControl& control)
        : inst_(inst), tree_(tree), weight_(weight), lex_(lex), control_(control)
    {
    }

    std::uint64_t guesses = 0;

    // `first_house`, when set, fixes the house of the first separator agent.
    std::optional<Found> solve(int node_index, const Sub& sub,
                               std::optional<HouseId> first_house = std::nullopt)
    {
        if (node_index < 0)
            return Found{};
        const Node& node = tree_.node(node_index);
        const std::size_t k = node.sep.size();
        std::vector<HouseId> phi(k);
        IndexSet taken(inst_.n_houses());
        std::optional<Found> best;

        auto dfs = [&](auto&& self, std::size_t i) -> void {
            if (i == k) {
                after_phi(node, sub, phi, taken, best);
                return;
            }
            const std::uint32_t p = node.sep[i];
            IndexSet options = sub.feasible[p] & sub.houses;
            options -= taken;
            for (auto h = options.find_first(); h != IndexSet::npos; h = options.find_next(h)) {
                if (i == 0 && first_house && h != *first_house)
                    continue;
                phi[i] = static_cast<HouseId>(h);
                taken.set(h);
                self(self, i + 1);
                taken.reset(h);
            }
        };
        dfs(dfs, 0);
        return best;
    }

private:
    std::int64_t part_bound(const std::vector<std::uint32_t>& part) const
    {
        return lex_ ? -static_cast<std::int64_t>(part.size()) : 0;
    }

    void after_phi(const Node& node, const Sub& sub, const std::vector<HouseId>& phi,
                   const IndexSet& taken, std::optional<Found>& best)
    {
        const std::size_t k = node.sep.size();
        const auto agent = [&](std::uint32_t p) { return node.agents[p]; };

        // Classify the separator: C happy, D and Q envious, R undecided.
        std::int64_t n_c = 0;
        std::int64_t n_envious = 0;
        std::vector<std::size_t> r;
        for (std::size_t i = 0; i < k; ++i) {
            const std::uint32_t p = node.sep[i];
            if (sub.pref[p].test(phi[i])) {
                ++n_c;
                continue;
            }
            if (sub.angry[p]) {
                ++n_envious;
                continue;
            }
            bool envious = false;
            for (std::size_t j = 0; j < k && !envious; ++j)
                envious = j != i && inst_.adjacent(agent(p), agent(node.sep[j])) &&
                          sub.pref[p].test(phi[j]);
            if (envious)
                ++n_envious;
            else
                r.push_back(i);
        }

        // B': outside agents with a separator neighbour holding a house they prefer.
        auto angry_after = [&](std::uint32_t p) {
            if (sub.angry[p])
                return true;
            for (std::size_t i = 0; i < k; ++i)
                if (inst_.adjacent(agent(p), agent(node.sep[i])) && sub.pref[p].test(phi[i]))
                    return true;
            return false;
        };

        IndexSet rest = sub.houses;
        rest -= taken;
        const std::vector<std::uint32_t> rest_list = to_list(rest);
        const std::size_t n1 = node.part1.size();

        Sub s1 = make_child(node.part1, sub);
        Sub s2 = make_child(node.part2, sub);
        for (std::size_t i = 0; i < n1; ++i)
            s1.angry[i] = angry_after(node.part1[i]);
        for (std::size_t i = 0; i < node.part2.size(); ++i)
            s2.angry[i] = angry_after(node.part2[i]);

        std::vector<std::uint32_t> comb(n1);
        for (std::uint32_t i = 0; i < n1; ++i)
            comb[i] = i;
        do {
            IndexSet h1(inst_.n_houses());
            for (std::uint32_t c : comb)
                h1.set(rest_list[c]);
            IndexSet h2 = rest;
            h2 -= h1;
            s1.houses = h1;
            s2.houses = h2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r.size()); ++mask) {
                control_.poll();
                control_.charge();
                ++guesses;
                const std::int64_t undecided =
                    static_cast<std::int64_t>(r.size()) - std::popcount(mask);
                const std::int64_t base =
                    weight_ * (n_envious + undecided) - (lex_ ? n_c : 0);
                if (best && base + part_bound(node.part1) + part_bound(node.part2) >= best->value)
                    continue;
                if (!trim(node, sub, r, mask, node.part1, h1, s1) ||
                    !trim(node, sub, r, mask, node.part2, h2, s2))
                    continue;
                const auto x1 = solve(node.child1, s1);
                if (!x1)
                    continue;
                if (best && base + x1->value + part_bound(node.part2) >= best->value)
                    continue;
                const auto x2 = solve(node.child2, s2);
                if (!x2)
                    continue;
                const std::int64_t zeta = base + x1->value + x2->value;
                if (best && zeta >= best->value)
                    continue;
                Found f;
                f.value = zeta;
                f.houses.assign(node.agents.size(), 0);
                for (std::size_t i = 0; i < k; ++i)
                    f.houses[node.sep[i]] = phi[i];
                for (std::size_t i = 0; i < n1; ++i)
                    f.houses[node.part1[i]] = x1->houses[i];
                for (std::size_t i = 0; i < node.part2.size(); ++i)
                    f.houses[node.part2[i]] = x2->houses[i];
                best = std::move(f);
            }
        } while (next_combination(comb, rest_list.size()));
    }

    static Sub make_child(const std::vector<std::uint32_t>& part, const Sub& sub)
    {
        Sub child;
        child.pref.reserve(part.size());
        child.feasible.reserve(part.size());
        for (std::uint32_t p : part) {
            child.pref.push_back(sub.pref[p]);
            child.feasible.push_back(sub.feasible[p]);
        }
        child.angry.assign(part.size(), 0);
        return child;
    }

    // F' and P' for one part; false if some F' is empty.
    bool trim(const Node& node, const Sub& sub, const std::vector<std::size_t>& r, std::uint64_t mask,
              const std::vector<std::uint32_t>& part, const IndexSet& h, Sub& child) const
    {
        for (std::size_t i = 0; i < part.size(); ++i) {
            const std::uint32_t p = part[i];
            child.pref[i] = sub.pref[p] & h;
            child.feasible[i] = sub.feasible[p] & h;
            for (std::size_t b = 0; b < r.size(); ++b) {
                if (!(mask >> b & 1))
                    continue;
                const std::uint32_t q = node.sep[r[b]];
                if (inst_.adjacent(node.agents[p], node.agents[q]))
                    child.feasible[i] -= sub.pref[q];
            }
            if (child.feasible[i].none())
                return false;
        }
        return true;
    }

    static bool next_combination(std::vector<std::uint32_t>& comb, std::size_t n)
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

    const Instance& inst_;
    const Tree& tree_;
    std::int64_t weight_;
    bool lex_;
    detail::SearchControl& control_;
};

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > kSaturated / (n - k + i))
            return kSaturated;
        r = r * (n - k + i) / i;
    }
    return r;
}

// The rank-th k-subset of {0..n-1} in lexicographic order.
std::vector<HouseId> unrank_subset(std::uint64_t rank, std::size_t n, std::size_t k)
{
    std::vector<HouseId> out;
    HouseId x = 0;
    while (out.size() < k) {
        const std::uint64_t with_x = binomial(n - x - 1, k - out.size() - 1);
        if (rank < with_x) {
            out.push_back(x);
        } else {
            rank -= with_x;
        }
        ++x;
    }
    return out;
}

} // namespace

std::optional<SolveResult> solve_separator(const AnnotatedInstance& ann, const SolverConfig& cfg)
{
    detail::SearchControl control(cfg);
    const Instance& inst = ann.base();
    const std::size_t n = inst.n_agents();
    const std::size_t m = inst.n_houses();
    if (m < n)
        return std::nullopt;
    const bool lex = cfg.objective == Objective::MinEnvyThenMaxHappy;
    const std::int64_t weight = detail::envy_weight(inst, cfg.objective);
    const Tree tree(inst, cfg.separator_max_size);

    // Every n-subset of houses is one guess of the houses in use.
    const std::uint64_t n_subsets = binomial(m, n);
    if (cfg.guess_limit && n_subsets > *cfg.guess_limit) {
        std::ostringstream os;
        os << "guessing the used houses needs more than " << *cfg.guess_limit << " guesses";
        throw Error(ErrorCode::BudgetExceeded, os.str());
    }
    control.charge(n_subsets);

    const bool split_first = tree.root() >= 0 && !tree.node(tree.root()).sep.empty();
    const std::size_t per_subset = split_first ? n : 1;

    auto task = [&](std::size_t t, detail::TaskBest& best) {
        const std::vector<HouseId> used = unrank_subset(t / per_subset, m, n);
        Sub sub;
        sub.houses = IndexSet(m);
        for (HouseId h : used)
            sub.houses.set(h);
        for (AgentId a = 0; a < n; ++a) {
            sub.pref.push_back(inst.preferred(a) & sub.houses);
            sub.feasible.push_back(ann.feasible(a) & sub.houses);
            sub.angry.push_back(ann.is_angry(a) ? 1 : 0);
        }
        std::optional<HouseId> first;
        if (split_first)
            first = used[t % per_subset];
        Recursion rec(inst, tree, weight, lex, control);
        const auto found = rec.solve(tree.root(), sub, first);
        best.guesses = rec.guesses;
        if (found) {
            // Root positions are agent indices.
            best.offer(found->value, found->houses);
        }
    };

    if (n_subsets > std::numeric_limits<std::size_t>::max() / per_subset)
        throw Error(ErrorCode::BudgetExceeded, "too many house subsets to enumerate");
    const std::size_t n_tasks = static_cast<std::size_t>(n_subsets) * per_subset;
    const auto outcome = detail::run_tasks(control, n_tasks, resolve_workers(cfg.workers), task);
    if (!outcome.value)
        return std::nullopt;

    SolveResult r;
    r.allocation = Allocation(outcome.allocation);
    const AnnotatedReport report = evaluate_annotated(ann, r.allocation);
    r.min_envy = report.report.n_envious;
    r.happiness = report.report.n_happy;
    r.solver_id = "separator";
    r.guesses_explored = outcome.guesses + n_subsets;
    return r;
}

} // namespace haan
