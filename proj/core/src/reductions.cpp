#include "haan/reductions.hpp"

#include "haan/error.hpp"
#include "haan/graphtools.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace haan {

namespace {

std::int64_t choose2(std::int64_t k)
{
    return k * (k - 1) / 2;
}

void check_k(std::int64_t k, std::int64_t lo, std::size_t n)
{
    if (k < lo || k > static_cast<std::int64_t>(n)) {
        std::ostringstream os;
        os << "k = " << k << " outside [" << lo << ", " << n << "]";
        throw Error(ErrorCode::BadK, os.str());
    }
}

std::int64_t param(const Provenance& p, const std::string& name)
{
    for (const auto& [key, value] : p.params)
        if (key == name)
            return value;
    throw Error(ErrorCode::InvalidInstance, "provenance lacks parameter '" + name + "'");
}

void require_generator(const ReducedInstance& red, std::initializer_list<const char*> names)
{
    for (const char* n : names)
        if (red.provenance.generator == n)
            return;
    throw Error(ErrorCode::WrongSolver,
                "witness does not apply to generator '" + red.provenance.generator + "'");
}

std::vector<std::uint32_t> checked_clique(const ReducedInstance& red,
                                          const std::vector<std::uint32_t>& clique)
{
    const SourceGraph& g = red.provenance.source;
    std::vector<std::uint32_t> c = clique;
    std::sort(c.begin(), c.end());
    const auto k = param(red.provenance, "k");
    const bool distinct = std::adjacent_find(c.begin(), c.end()) == c.end();
    if (static_cast<std::int64_t>(c.size()) != k || !distinct ||
        !is_clique(SimpleGraph(g.n_vertices, g.edges), c)) {
        std::ostringstream os;
        os << "the given vertices are not a " << k << "-clique of the source graph";
        throw Error(ErrorCode::NotAClique, os.str());
    }
    return c;
}

// Fills unassigned agents with dummy houses in order.
Allocation fill_with_dummies(const ReducedInstance& red, std::vector<HouseId> houses,
                             const std::vector<char>& assigned)
{
    std::size_t next = 0;
    for (std::size_t a = 0; a < houses.size(); ++a) {
        if (assigned[a])
            continue;
        if (next >= red.provenance.dummy_houses.size())
            throw Error(ErrorCode::InvalidAllocation, "not enough dummy houses for the witness");
        houses[a] = red.provenance.dummy_houses[next++];
    }
    return Allocation(std::move(houses));
}

std::vector<HouseId> range(HouseId from, HouseId to)
{
    std::vector<HouseId> out;
    for (HouseId h = from; h < to; ++h)
        out.push_back(h);
    return out;
}

} // namespace

SourceGraph make_source_graph(std::size_t n_vertices, std::vector<Edge> edges)
{
    const SimpleGraph g(n_vertices, edges);
    return SourceGraph{n_vertices, g.edges()};
}

ReducedInstance gen_clique_bipartite_d2(const SourceGraph& g, std::int64_t k)
{
    const SimpleGraph sg(g.n_vertices, g.edges);
    const auto degree = is_regular(sg);
    if (!degree)
        throw Error(ErrorCode::NotRegular, "source graph is not regular");
    check_k(k, 1, g.n_vertices);
    const auto big_n = static_cast<std::int64_t>(g.n_vertices);
    const auto big_m = static_cast<std::int64_t>(sg.n_edges());
    const auto delta = static_cast<std::int64_t>(*degree);

    ReducedInstance red;
    Provenance& p = red.provenance;
    p.generator = "clique-bip-d2";
    p.params = {{"k", k}, {"delta", delta}};
    p.trivial = k > delta;
    p.source = SourceGraph{g.n_vertices, sg.edges()};

    const std::int64_t n = delta * big_n + big_m;
    std::int64_t dummies = delta * big_n + big_m - k;
    if (dummies < 0) {
        dummies = 0;
        p.trivial = true;
    }
    RawInstance raw;
    raw.n_agents = static_cast<std::size_t>(n);
    raw.n_houses = static_cast<std::size_t>(big_n + dummies);
    raw.preferences.resize(raw.n_agents);
    p.vertex_agents.resize(g.n_vertices);
    p.vertex_houses.resize(g.n_vertices);
    p.edge_agents.resize(sg.n_edges());
    for (std::uint32_t v = 0; v < g.n_vertices; ++v) {
        p.vertex_houses[v] = {v};
        for (std::int64_t j = 0; j < delta; ++j) {
            const auto a = static_cast<AgentId>(v * delta + j);
            p.vertex_agents[v].push_back(a);
            raw.preferences[a] = {v};
        }
    }
    for (std::size_t e = 0; e < sg.n_edges(); ++e) {
        const auto a = static_cast<AgentId>(delta * big_n + static_cast<std::int64_t>(e));
        p.edge_agents[e] = {a};
        raw.preferences[a] = {sg.edges()[e].u, sg.edges()[e].v};
        for (AgentId b = 0; b < delta * big_n; ++b)
            raw.edges.push_back({b, a});
    }
    p.dummy_houses = range(static_cast<HouseId>(big_n), static_cast<HouseId>(raw.n_houses));
    red.instance = validate_instance(raw);
    red.target_envy = k * delta - choose2(k);
    return red;
}

Allocation witness_from_clique(const ReducedInstance& red, const std::vector<std::uint32_t>& clique)
{
    require_generator(red, {"clique-bip-d2"});
    const auto c = checked_clique(red, clique);
    const std::size_t n = red.instance.n_agents();
    std::vector<HouseId> houses(n, 0);
    std::vector<char> assigned(n, 0);
    for (std::uint32_t v : c) {
        const auto& agents = red.provenance.vertex_agents[v];
        if (agents.empty())
            continue;
        houses[agents.front()] = red.provenance.vertex_houses[v].front();
        assigned[agents.front()] = 1;
    }
    return fill_with_dummies(red, std::move(houses), assigned);
}

ReducedInstance gen_halfsep_3regular(const SourceGraph& g, std::int64_t k)
{
    const SimpleGraph sg(g.n_vertices, g.edges);
    const auto degree = is_regular(sg);
    if (!degree || *degree != 3 || g.n_vertices == 0)
        throw Error(ErrorCode::Not3Regular, "source graph is not 3-regular");
    check_k(k, 0, g.n_vertices);
    const auto n = static_cast<std::int64_t>(g.n_vertices);
    const std::int64_t t = n / 2 - k / 2;

    ReducedInstance red;
    Provenance& p = red.provenance;
    p.generator = "halfsep-3reg";
    p.params = {{"k", k}, {"t", t}};
    p.source = SourceGraph{g.n_vertices, sg.edges()};
    p.shared_houses = range(0, static_cast<HouseId>(t));
    p.dummy_houses = range(static_cast<HouseId>(t), static_cast<HouseId>(n));
    p.vertex_agents.resize(g.n_vertices);
    for (std::uint32_t v = 0; v < g.n_vertices; ++v)
        p.vertex_agents[v] = {v};

    RawInstance raw;
    raw.n_agents = g.n_vertices;
    raw.n_houses = g.n_vertices;
    raw.edges = sg.edges();
    raw.preferences.assign(raw.n_agents, p.shared_houses);
    red.instance = validate_instance(raw);
    red.target_envy = 2 * (k / 2);
    return red;
}

namespace {

void check_half_separator(const SourceGraph& g, const HalfSeparator& sep, std::size_t part_size,
                          std::size_t sep_size)
{
    auto fail = [](const std::string& why) { throw Error(ErrorCode::BadPartition, why); };
    std::vector<int> side(g.n_vertices, -1);
    auto mark = [&](const std::vector<std::uint32_t>& list, int s) {
        for (std::uint32_t v : list) {
            if (v >= g.n_vertices || side[v] != -1)
                fail("S, X and Y do not partition the vertices");
            side[v] = s;
        }
    };
    mark(sep.separator, 0);
    mark(sep.x, 1);
    mark(sep.y, 2);
    if (std::count(side.begin(), side.end(), -1) != 0)
        fail("S, X and Y do not cover every vertex");
    if (sep.x.size() != part_size || sep.y.size() != part_size) {
        std::ostringstream os;
        os << "|X| = " << sep.x.size() << " and |Y| = " << sep.y.size() << " must both be "
           << part_size;
        fail(os.str());
    }
    if (sep.separator.size() > sep_size) {
        std::ostringstream os;
        os << "|S| = " << sep.separator.size() << " exceeds " << sep_size;
        fail(os.str());
    }
    for (const Edge& e : g.edges)
        if ((side[e.u] == 1 && side[e.v] == 2) || (side[e.u] == 2 && side[e.v] == 1))
            fail("an edge joins X and Y");
}

} // namespace

Allocation witness_from_separator(const ReducedInstance& red, const HalfSeparator& sep)
{
    require_generator(red, {"halfsep-3reg"});
    const std::int64_t k = param(red.provenance, "k");
    const std::int64_t t = param(red.provenance, "t");
    check_half_separator(red.provenance.source, sep, static_cast<std::size_t>(t),
                         static_cast<std::size_t>(2 * (k / 2)));
    if (sep.separator.size() != static_cast<std::size_t>(2 * (k / 2)))
        throw Error(ErrorCode::BadPartition, "|S| must equal 2*floor(k/2)");
    std::vector<std::uint32_t> x = sep.x;
    std::sort(x.begin(), x.end());
    const std::size_t n = red.instance.n_agents();
    std::vector<HouseId> houses(n, 0);
    std::vector<char> assigned(n, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        houses[x[i]] = red.provenance.shared_houses[i];
        assigned[x[i]] = 1;
    }
    return fill_with_dummies(red, std::move(houses), assigned);
}

HalfSeparator pad_half_separator(const SourceGraph& g, std::int64_t k, const HalfSeparator& sep)
{
    check_k(k, 0, g.n_vertices);
    const auto n = static_cast<std::int64_t>(g.n_vertices);
    const std::int64_t t = n / 2 - k / 2;
    const auto half = static_cast<std::int64_t>(sep.x.size());
    if (half < t || sep.y.size() != sep.x.size())
        throw Error(ErrorCode::BadPartition, "the separator is larger than 2*floor(k/2)");
    check_half_separator(g, sep, static_cast<std::size_t>(half), static_cast<std::size_t>(k));
    HalfSeparator out = sep;
    std::sort(out.x.begin(), out.x.end());
    std::sort(out.y.begin(), out.y.end());
    const auto gamma = static_cast<std::size_t>(half - t);
    out.separator.insert(out.separator.end(), out.x.begin(), out.x.begin() + gamma);
    out.separator.insert(out.separator.end(), out.y.begin(), out.y.begin() + gamma);
    out.x.erase(out.x.begin(), out.x.begin() + gamma);
    out.y.erase(out.y.begin(), out.y.begin() + gamma);
    std::sort(out.separator.begin(), out.separator.end());
    return out;
}

ReducedInstance gen_clique_vc_bipartite(const SourceGraph& g, std::int64_t k, std::int64_t t_pad)
{
    const SimpleGraph sg(g.n_vertices, g.edges);
    check_k(k, 1, g.n_vertices);
    if (t_pad < 0)
        throw Error(ErrorCode::BadT, "t_pad must be non-negative");
    const std::int64_t big_n = static_cast<std::int64_t>(g.n_vertices) + t_pad;
    const auto big_m = static_cast<std::int64_t>(sg.n_edges());

    ReducedInstance red;
    Provenance& p = red.provenance;
    p.generator = "clique-vc-bip";
    p.params = {{"k", k}, {"t_pad", t_pad}};
    p.source = SourceGraph{g.n_vertices, sg.edges()};

    std::int64_t dummies = big_n + 2 * big_m - choose2(k);
    if (dummies < 0) {
        dummies = 0;
        p.trivial = true;
    }
    RawInstance raw;
    raw.n_agents = static_cast<std::size_t>(big_n + 2 * big_m);
    raw.n_houses = static_cast<std::size_t>(big_m + dummies);
    raw.preferences.resize(raw.n_agents);
    p.vertex_agents.resize(static_cast<std::size_t>(big_n));
    p.edge_agents.resize(sg.n_edges());
    p.edge_houses.resize(sg.n_edges());
    for (std::int64_t v = 0; v < big_n; ++v)
        p.vertex_agents[v] = {static_cast<AgentId>(v)};
    for (std::size_t e = 0; e < sg.n_edges(); ++e) {
        const auto h = static_cast<HouseId>(e);
        const auto a1 = static_cast<AgentId>(big_n + static_cast<std::int64_t>(e));
        const auto a2 = static_cast<AgentId>(big_n + big_m + static_cast<std::int64_t>(e));
        p.edge_agents[e] = {a1, a2};
        p.edge_houses[e] = {h};
        raw.preferences[a1] = {h};
        raw.preferences[a2] = {h};
        raw.preferences[sg.edges()[e].u].push_back(h);
        raw.preferences[sg.edges()[e].v].push_back(h);
    }
    for (AgentId v = 0; v < big_n; ++v)
        for (AgentId a = static_cast<AgentId>(big_n); a < raw.n_agents; ++a)
            raw.edges.push_back({v, a});
    p.dummy_houses = range(static_cast<HouseId>(big_m), static_cast<HouseId>(raw.n_houses));
    red.instance = validate_instance(raw);
    red.target_envy = k;
    return red;
}

ReducedInstance gen_clique_vc_split(const SourceGraph& g, std::int64_t k, std::int64_t t)
{
    const SimpleGraph sg(g.n_vertices, g.edges);
    if (sg.n_edges() == 0)
        throw Error(ErrorCode::BadT, "the split family needs at least one source edge");
    if (t < 1)
        throw Error(ErrorCode::BadT, "t must be at least 1");
    check_k(k, 1, g.n_vertices);
    const auto big_n = static_cast<std::int64_t>(g.n_vertices);
    const auto big_m = static_cast<std::int64_t>(sg.n_edges());

    ReducedInstance red;
    Provenance& p = red.provenance;
    p.generator = "clique-vc-split";
    p.params = {{"k", k}, {"t", t}};
    p.source = SourceGraph{g.n_vertices, sg.edges()};

    std::int64_t dummies = (big_m - choose2(k)) * t + big_n;
    if (dummies < 0) {
        dummies = 0;
        p.trivial = true;
    }
    RawInstance raw;
    raw.n_agents = static_cast<std::size_t>(big_n + big_m * t);
    raw.n_houses = static_cast<std::size_t>(big_m * t + dummies);
    raw.preferences.resize(raw.n_agents);
    p.vertex_agents.resize(g.n_vertices);
    p.edge_agents.resize(sg.n_edges());
    p.edge_houses.resize(sg.n_edges());
    for (std::uint32_t v = 0; v < g.n_vertices; ++v)
        p.vertex_agents[v] = {v};
    for (std::size_t e = 0; e < sg.n_edges(); ++e) {
        for (std::int64_t j = 0; j < t; ++j) {
            const auto h = static_cast<HouseId>(static_cast<std::int64_t>(e) * t + j);
            const auto a = static_cast<AgentId>(big_n + h);
            p.edge_agents[e].push_back(a);
            p.edge_houses[e].push_back(h);
            raw.preferences[a] = {h};
            raw.preferences[sg.edges()[e].u].push_back(h);
            raw.preferences[sg.edges()[e].v].push_back(h);
        }
    }
    for (AgentId u = 0; u < big_n; ++u) {
        for (AgentId v = u + 1; v < big_n; ++v)
            raw.edges.push_back({u, v});
        for (AgentId a = static_cast<AgentId>(big_n); a < raw.n_agents; ++a)
            raw.edges.push_back({u, a});
    }
    p.dummy_houses = range(static_cast<HouseId>(big_m * t), static_cast<HouseId>(raw.n_houses));
    red.instance = validate_instance(raw);
    red.target_envy = k;
    return red;
}

Allocation witness_from_clique_vc(const ReducedInstance& red, const std::vector<std::uint32_t>& clique)
{
    require_generator(red, {"clique-vc-bip", "clique-vc-split"});
    const auto c = checked_clique(red, clique);
    const bool split = red.provenance.generator == "clique-vc-split";
    std::set<std::uint32_t> in(c.begin(), c.end());
    const std::size_t n = red.instance.n_agents();
    std::vector<HouseId> houses(n, 0);
    std::vector<char> assigned(n, 0);
    const auto& edges = red.provenance.source.edges;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!in.count(edges[e].u) || !in.count(edges[e].v))
            continue;
        const auto& agents = red.provenance.edge_agents[e];
        const std::size_t count = split ? agents.size() : 1;
        for (std::size_t j = 0; j < count; ++j) {
            houses[agents[j]] = red.provenance.edge_houses[e][j];
            assigned[agents[j]] = 1;
        }
    }
    return fill_with_dummies(red, std::move(houses), assigned);
}

} // namespace haan
