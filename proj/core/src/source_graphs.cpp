#include "haan/source_graphs.hpp"

#include "haan/error.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace haan {

namespace {

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

std::uint64_t parse_count(const std::string& text, std::string_view descriptor)
{
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || text[0] == '-')
        throw Error(ErrorCode::InvalidConfig, "bad number '" + text + "' in graph '" +
                                                  std::string(descriptor) + "'");
    return v;
}

// Uniform integer in [0, bound) without modulo bias.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

} // namespace

SourceGraph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (AgentId u = 0; u < n; ++u)
        for (AgentId v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return make_source_graph(n, std::move(edges));
}

SourceGraph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw Error(ErrorCode::InvalidConfig, "a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (AgentId v = 0; v < n; ++v)
        edges.push_back({v, static_cast<AgentId>((v + 1) % n)});
    return make_source_graph(n, std::move(edges));
}

SourceGraph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed)
{
    if (d >= n || (n * d) % 2 != 0)
        throw Error(ErrorCode::InvalidConfig, "no simple d-regular graph on n vertices");
    std::mt19937_64 rng(seed);
    std::vector<AgentId> points;
    for (AgentId v = 0; v < n; ++v)
        for (std::size_t j = 0; j < d; ++j)
            points.push_back(v);
    constexpr int kAttempts = 100000;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        for (std::size_t i = points.size(); i > 1; --i)
            std::swap(points[i - 1], points[draw(rng, i)]);
        std::set<std::pair<AgentId, AgentId>> seen;
        std::vector<Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
            const AgentId u = std::min(points[i], points[i + 1]);
            const AgentId v = std::max(points[i], points[i + 1]);
            simple = u != v && seen.insert({u, v}).second;
            edges.push_back({u, v});
        }
        if (simple)
            return make_source_graph(n, std::move(edges));
        std::sort(points.begin(), points.end());
    }
    throw Error(ErrorCode::InvalidConfig, "could not sample a simple regular graph");
}

SourceGraph named_graph(std::string_view descriptor, std::uint64_t seed)
{
    const auto parts = split(descriptor, ':');
    const std::string& name = parts[0];
    auto arity = [&](std::size_t lo, std::size_t hi) {
        if (parts.size() < lo || parts.size() > hi)
            throw Error(ErrorCode::InvalidConfig, "wrong number of parameters in graph '" +
                                                      std::string(descriptor) + "'");
    };
    if (name == "k3" || name == "k4" || name == "k5") {
        arity(1, 1);
        return complete_graph(static_cast<std::size_t>(name[1] - '0'));
    }
    if (name == "prism") {
        arity(1, 1);
        return make_source_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                     {0, 3}, {1, 4}, {2, 5}});
    }
    if (name == "petersen") {
        arity(1, 1);
        std::vector<Edge> edges;
        for (AgentId i = 0; i < 5; ++i) {
            edges.push_back({i, (i + 1) % 5});
            edges.push_back({i, i + 5});
            edges.push_back({i + 5, (i + 2) % 5 + 5});
        }
        return make_source_graph(10, std::move(edges));
    }
    if (name == "cycle") {
        arity(2, 2);
        return cycle_graph(parse_count(parts[1], descriptor));
    }
    if (name == "random-regular") {
        arity(3, 4);
        const std::uint64_t s = parts.size() == 4 ? parse_count(parts[3], descriptor) : seed;
        return random_regular_graph(parse_count(parts[1], descriptor), parse_count(parts[2], descriptor), s);
    }
    throw Error(ErrorCode::InvalidConfig, "unknown graph '" + std::string(descriptor) + "'");
}

SourceGraph read_edge_list(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    std::size_t n = 0;
    std::vector<Edge> edges;
    auto fail = [&](const std::string& why) {
        std::ostringstream os;
        os << "line " << line_no << ": " << why;
        throw Error(ErrorCode::ParseError, os.str());
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue;
        if (first == "vertices") {
            std::size_t v = 0;
            if (!(ls >> v))
                fail("expected a vertex count");
            n = std::max(n, v);
        } else {
            std::istringstream fs(first);
            AgentId u = 0;
            AgentId v = 0;
            if (!(fs >> u) || !fs.eof() || !(ls >> v))
                fail("expected two vertex indices");
            edges.push_back({u, v});
            n = std::max<std::size_t>(n, std::max(u, v) + std::size_t{1});
        }
        std::string extra;
        if (ls >> extra)
            fail("unexpected trailing text");
    }
    try {
        return make_source_graph(n, std::move(edges));
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

} // namespace haan
