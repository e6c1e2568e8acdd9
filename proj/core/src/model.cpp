#include "haan/model.hpp"

#include "haan/error.hpp"

#include <algorithm>
#include <sstream>

namespace haan {

namespace {

[[noreturn]] void invalid(const std::string& why)
{
    throw Error(ErrorCode::InvalidInstance, why);
}

IndexSet house_set(std::size_t n_houses, const std::vector<HouseId>& list, const char* what,
                   std::size_t agent)
{
    IndexSet set(n_houses);
    for (HouseId h : list) {
        if (h >= n_houses) {
            std::ostringstream os;
            os << what << " of agent " << agent << " has house index " << h
               << " >= n_houses " << n_houses;
            invalid(os.str());
        }
        if (set.test(h)) {
            std::ostringstream os;
            os << what << " of agent " << agent << " lists house " << h << " twice";
            invalid(os.str());
        }
        set.set(h);
    }
    return set;
}

} // namespace

std::vector<std::uint32_t> to_list(const IndexSet& set)
{
    std::vector<std::uint32_t> out;
    out.reserve(set.count());
    for (auto i = set.find_first(); i != IndexSet::npos; i = set.find_next(i))
        out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

Instance validate_instance(const RawInstance& raw)
{
    const std::size_t n = raw.n_agents;
    if (raw.preferences.size() > n) {
        std::ostringstream os;
        os << raw.preferences.size() << " preference lists for " << n << " agents";
        invalid(os.str());
    }

    Instance inst;
    inst.n_houses_ = raw.n_houses;
    inst.neighbors_.assign(n, {});
    inst.adjacency_.assign(n, IndexSet(n));
    inst.preferred_.reserve(n);
    inst.preference_lists_.reserve(n);

    for (const Edge& e : raw.edges) {
        if (e.u >= n || e.v >= n) {
            std::ostringstream os;
            os << "edge (" << e.u << "," << e.v << ") has an endpoint >= n_agents " << n;
            invalid(os.str());
        }
        if (e.u == e.v) {
            std::ostringstream os;
            os << "self-loop at agent " << e.u;
            invalid(os.str());
        }
        if (inst.adjacency_[e.u].test(e.v)) {
            std::ostringstream os;
            os << "duplicate edge (" << e.u << "," << e.v << ")";
            invalid(os.str());
        }
        inst.adjacency_[e.u].set(e.v);
        inst.adjacency_[e.v].set(e.u);
        inst.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::sort(inst.edges_.begin(), inst.edges_.end());
    for (AgentId a = 0; a < n; ++a)
        inst.neighbors_[a] = to_list(inst.adjacency_[a]);

    static const std::vector<HouseId> empty;
    for (std::size_t a = 0; a < n; ++a) {
        const auto& list = a < raw.preferences.size() ? raw.preferences[a] : empty;
        inst.preferred_.push_back(house_set(raw.n_houses, list, "preference list", a));
        inst.preference_lists_.push_back(to_list(inst.preferred_.back()));
        inst.max_preference_size_ = std::max(inst.max_preference_size_, list.size());
    }
    return inst;
}

RawInstance Instance::to_raw() const
{
    return RawInstance{n_agents(), n_houses_, edges_, preference_lists_};
}

void check_allocation(const Instance& inst, const Allocation& alloc)
{
    if (alloc.size() != inst.n_agents()) {
        std::ostringstream os;
        os << "allocation covers " << alloc.size() << " agents, instance has " << inst.n_agents();
        throw Error(ErrorCode::InvalidAllocation, os.str());
    }
    IndexSet used(inst.n_houses());
    for (AgentId a = 0; a < alloc.size(); ++a) {
        const HouseId h = alloc[a];
        if (h >= inst.n_houses()) {
            std::ostringstream os;
            os << "agent " << a << " assigned house " << h << " >= n_houses " << inst.n_houses();
            throw Error(ErrorCode::InvalidAllocation, os.str());
        }
        if (used.test(h)) {
            std::ostringstream os;
            os << "house " << h << " assigned to more than one agent";
            throw Error(ErrorCode::InvalidAllocation, os.str());
        }
        used.set(h);
    }
}

std::vector<std::optional<AgentId>> occupants(const Allocation& alloc, std::size_t n_houses)
{
    std::vector<std::optional<AgentId>> out(n_houses);
    for (AgentId a = 0; a < alloc.size(); ++a)
        out[alloc[a]] = a;
    return out;
}

namespace {

EnvyReport evaluate_with(const Instance& inst, const Allocation& alloc, const IndexSet* angry)
{
    const std::size_t n = inst.n_agents();
    EnvyReport r;
    r.envy_sets.assign(n, {});
    r.envious.assign(n, false);
    r.happy.assign(n, false);
    for (AgentId a = 0; a < n; ++a) {
        const bool happy = inst.prefers(a, alloc[a]);
        r.happy[a] = happy;
        if (happy) {
            ++r.n_happy;
            continue;
        }
        if (angry && angry->test(a)) {
            r.envious[a] = true;
            ++r.n_envious;
            continue;
        }
        for (AgentId b : inst.neighbors(a))
            if (inst.prefers(a, alloc[b]))
                r.envy_sets[a].push_back(b);
        if (!r.envy_sets[a].empty()) {
            r.envious[a] = true;
            ++r.n_envious;
        }
    }
    return r;
}

} // namespace

EnvyReport evaluate(const Instance& inst, const Allocation& alloc)
{
    check_allocation(inst, alloc);
    return evaluate_with(inst, alloc, nullptr);
}

AnnotatedInstance AnnotatedInstance::unconstrained(Instance base)
{
    return validate_annotated(std::move(base), {}, {});
}

AnnotatedInstance validate_annotated(Instance base,
                                     const std::vector<std::vector<HouseId>>& feasible,
                                     std::vector<AgentId> angry)
{
    const std::size_t n = base.n_agents();
    const std::size_t m = base.n_houses();
    AnnotatedInstance ann;
    if (feasible.empty()) {
        IndexSet all(m);
        all.set();
        ann.feasible_.assign(n, all);
    } else {
        if (feasible.size() != n) {
            std::ostringstream os;
            os << feasible.size() << " feasibility sets for " << n << " agents";
            throw Error(ErrorCode::InvalidInstance, os.str());
        }
        for (std::size_t a = 0; a < n; ++a)
            ann.feasible_.push_back(house_set(m, feasible[a], "feasibility set", a));
    }
    ann.angry_mask_ = IndexSet(n);
    for (AgentId a : angry) {
        if (a >= n) {
            std::ostringstream os;
            os << "angry agent " << a << " >= n_agents " << n;
            throw Error(ErrorCode::InvalidInstance, os.str());
        }
        if (ann.angry_mask_.test(a)) {
            std::ostringstream os;
            os << "angry agent " << a << " listed twice";
            throw Error(ErrorCode::InvalidInstance, os.str());
        }
        ann.angry_mask_.set(a);
    }
    std::sort(angry.begin(), angry.end());
    ann.angry_ = std::move(angry);
    ann.base_ = std::move(base);
    return ann;
}

AnnotatedReport evaluate_annotated(const AnnotatedInstance& ann, const Allocation& alloc)
{
    check_allocation(ann.base(), alloc);
    AnnotatedReport out;
    out.feasible_ok = true;
    for (AgentId a = 0; a < alloc.size(); ++a)
        if (!ann.feasible(a).test(alloc[a]))
            out.feasible_ok = false;
    IndexSet angry(ann.base().n_agents());
    for (AgentId a : ann.angry())
        angry.set(a);
    out.report = evaluate_with(ann.base(), alloc, &angry);
    return out;
}

} // namespace haan
