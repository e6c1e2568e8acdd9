#include "haan/io.hpp"

#include "haan/error.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

namespace haan {

namespace {

constexpr const char* kVersion = "haan/1";

// Non-empty, comment-stripped lines with their line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& tokens, std::string& rest_after_two)
    {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            std::istringstream ls(line);
            tokens.clear();
            for (std::string t; ls >> t;)
                tokens.push_back(t);
            if (tokens.empty())
                continue;
            rest_after_two = rest(line, 2);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) const
    {
        std::ostringstream os;
        os << "line " << line_no_ << ": " << why;
        throw Error(ErrorCode::ParseError, os.str());
    }

    std::uint64_t number(const std::string& text) const
    {
        if (text.empty() || !std::all_of(text.begin(), text.end(),
                                         [](char c) { return c >= '0' && c <= '9'; }))
            fail("expected a non-negative integer, got '" + text + "'");
        try {
            return std::stoull(text);
        } catch (const std::exception&) {
            fail("integer '" + text + "' out of range");
        }
    }

    std::uint32_t index(const std::string& text) const
    {
        const std::uint64_t v = number(text);
        if (v > std::numeric_limits<std::uint32_t>::max())
            fail("index '" + text + "' out of range");
        return static_cast<std::uint32_t>(v);
    }

private:
    // Text after the first `skip` whitespace-separated words, trimmed.
    static std::string rest(const std::string& line, int skip)
    {
        std::size_t pos = 0;
        for (int i = 0; i < skip; ++i) {
            pos = line.find_first_not_of(" \t", pos);
            if (pos == std::string::npos)
                return {};
            pos = line.find_first_of(" \t", pos);
            if (pos == std::string::npos)
                return {};
        }
        pos = line.find_first_not_of(" \t", pos);
        if (pos == std::string::npos)
            return {};
        std::string out = line.substr(pos);
        while (!out.empty() && (out.back() == ' ' || out.back() == '\t'))
            out.pop_back();
        return out;
    }

    std::istream& in_;
    std::size_t line_no_ = 0;
};

void expect_header(LineReader& reader, const std::string& kind, std::vector<std::string>& tokens,
                   std::string& rest)
{
    if (!reader.next(tokens, rest))
        reader.fail("empty file");
    if (tokens.size() != 2 || tokens[0] != kVersion || tokens[1] != kind)
        reader.fail("expected header '" + std::string(kVersion) + " " + kind + "'");
}

void write_list(std::ostream& out, const std::vector<std::uint32_t>& items)
{
    for (std::uint32_t x : items)
        out << ' ' << x;
}

} // namespace

const std::string* InstanceDocument::find_meta(const std::string& key) const
{
    for (const auto& [k, v] : meta)
        if (k == key)
            return &v;
    return nullptr;
}

InstanceDocument read_instance(std::istream& in)
{
    LineReader reader(in);
    std::vector<std::string> t;
    std::string rest;
    expect_header(reader, "instance", t, rest);

    std::optional<std::size_t> n_agents;
    std::optional<std::size_t> n_houses;
    RawInstance raw;
    std::map<std::uint32_t, std::vector<HouseId>> prefs;
    std::map<std::uint32_t, std::vector<HouseId>> feasible;
    std::vector<AgentId> angry;
    InstanceDocument doc;
    bool ended = false;

    while (reader.next(t, rest)) {
        if (ended)
            reader.fail("content after 'end'");
        const std::string& key = t[0];
        if (key == "agents" || key == "houses") {
            if (t.size() != 2)
                reader.fail("expected '" + key + " COUNT'");
            auto& slot = key == "agents" ? n_agents : n_houses;
            if (slot)
                reader.fail("repeated '" + key + "' line");
            slot = reader.number(t[1]);
        } else if (key == "edge") {
            if (t.size() != 3)
                reader.fail("expected 'edge U V'");
            raw.edges.push_back({reader.index(t[1]), reader.index(t[2])});
        } else if (key == "pref" || key == "feasible") {
            if (t.size() < 2)
                reader.fail("expected '" + key + " AGENT HOUSES...'");
            auto& target = key == "pref" ? prefs : feasible;
            const std::uint32_t a = reader.index(t[1]);
            if (target.count(a))
                reader.fail("repeated '" + key + "' line for agent " + t[1]);
            auto& list = target[a];
            for (std::size_t i = 2; i < t.size(); ++i)
                list.push_back(reader.index(t[i]));
            if (key == "feasible")
                doc.annotated = true;
        } else if (key == "angry") {
            for (std::size_t i = 1; i < t.size(); ++i)
                angry.push_back(reader.index(t[i]));
            doc.annotated = true;
        } else if (key == "meta") {
            if (t.size() < 2)
                reader.fail("expected 'meta KEY VALUE'");
            doc.meta.emplace_back(t[1], rest);
        } else if (key == "label") {
            if (t.size() < 3 || (t[1] != "agent" && t[1] != "house"))
                reader.fail("expected 'label agent|house INDEX TEXT'");
            Label l;
            l.kind = t[1] == "agent" ? Label::Kind::Agent : Label::Kind::House;
            l.index = reader.index(t[2]);
            std::istringstream ls(rest);
            std::string skip;
            ls >> skip;
            std::getline(ls >> std::ws, l.text);
            doc.labels.push_back(std::move(l));
        } else if (key == "end") {
            if (t.size() != 1)
                reader.fail("unexpected text after 'end'");
            ended = true;
        } else {
            reader.fail("unknown keyword '" + key + "'");
        }
    }
    if (!ended)
        reader.fail("missing 'end'");
    if (!n_agents || !n_houses)
        reader.fail("missing 'agents' or 'houses' line");

    raw.n_agents = *n_agents;
    raw.n_houses = *n_houses;
    auto per_agent = [&](const std::map<std::uint32_t, std::vector<HouseId>>& lists,
                         const char* what) {
        std::vector<std::vector<HouseId>> out(raw.n_agents);
        for (const auto& [a, list] : lists) {
            if (a >= raw.n_agents)
                throw Error(ErrorCode::InvalidInstance,
                            std::string(what) + " line for agent " + std::to_string(a) +
                                " out of range");
            out[a] = list;
        }
        return out;
    };
    raw.preferences = per_agent(prefs, "pref");
    Instance base = validate_instance(raw);

    std::vector<std::vector<HouseId>> f;
    if (!feasible.empty()) {
        f = per_agent(feasible, "feasible");
        for (AgentId a = 0; a < raw.n_agents; ++a) {
            if (!feasible.count(a)) {
                f[a].resize(raw.n_houses);
                for (HouseId h = 0; h < raw.n_houses; ++h)
                    f[a][h] = h;
            }
        }
    }
    doc.instance = validate_annotated(std::move(base), f, std::move(angry));
    for (const Label& l : doc.labels) {
        const std::size_t bound = l.kind == Label::Kind::Agent ? raw.n_agents : raw.n_houses;
        if (l.index >= bound)
            throw Error(ErrorCode::InvalidInstance,
                        "label index " + std::to_string(l.index) + " out of range");
    }
    return doc;
}

void write_instance(std::ostream& out, const InstanceDocument& doc)
{
    const Instance& inst = doc.instance.base();
    out << kVersion << " instance\n";
    out << "agents " << inst.n_agents() << '\n';
    out << "houses " << inst.n_houses() << '\n';
    for (const Edge& e : inst.edges())
        out << "edge " << e.u << ' ' << e.v << '\n';
    for (AgentId a = 0; a < inst.n_agents(); ++a) {
        out << "pref " << a;
        for (HouseId h : inst.preference_list(a))
            out << ' ' << h;
        out << '\n';
    }
    if (doc.annotated) {
        for (AgentId a = 0; a < inst.n_agents(); ++a) {
            out << "feasible " << a;
            write_list(out, to_list(doc.instance.feasible(a)));
            out << '\n';
        }
        out << "angry";
        write_list(out, doc.instance.angry());
        out << '\n';
    }
    for (const auto& [k, v] : doc.meta) {
        out << "meta " << k;
        if (!v.empty())
            out << ' ' << v;
        out << '\n';
    }
    std::vector<Label> labels = doc.labels;
    std::stable_sort(labels.begin(), labels.end(), [](const Label& a, const Label& b) {
        return std::pair(a.kind, a.index) < std::pair(b.kind, b.index);
    });
    for (const Label& l : labels)
        out << "label " << (l.kind == Label::Kind::Agent ? "agent " : "house ") << l.index << ' '
            << l.text << '\n';
    out << "end\n";
}

InstanceDocument read_instance_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    return read_instance(in);
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush())
        throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
}

InstanceDocument reduction_document(const ReducedInstance& red)
{
    const Provenance& p = red.provenance;
    InstanceDocument doc;
    doc.instance = AnnotatedInstance::unconstrained(red.instance);
    doc.meta.emplace_back("generator", p.generator);
    for (const auto& [k, v] : p.params)
        doc.meta.emplace_back("param." + k, std::to_string(v));
    doc.meta.emplace_back("target_envy", std::to_string(red.target_envy));
    doc.meta.emplace_back("trivial", p.trivial ? "true" : "false");
    doc.meta.emplace_back("source.vertices", std::to_string(p.source.n_vertices));
    std::ostringstream edges;
    for (std::size_t e = 0; e < p.source.edges.size(); ++e)
        edges << (e ? " " : "") << p.source.edges[e].u << '-' << p.source.edges[e].v;
    doc.meta.emplace_back("source.edges", edges.str());

    auto edge_name = [&](std::size_t e) {
        return std::to_string(p.source.edges[e].u) + "-" + std::to_string(p.source.edges[e].v);
    };
    auto add = [&](Label::Kind kind, std::uint32_t index, std::string text) {
        doc.labels.push_back({kind, index, std::move(text)});
    };
    for (std::size_t v = 0; v < p.vertex_agents.size(); ++v)
        for (std::size_t j = 0; j < p.vertex_agents[v].size(); ++j)
            add(Label::Kind::Agent, p.vertex_agents[v][j],
                "vertex " + std::to_string(v) + " copy " + std::to_string(j));
    for (std::size_t e = 0; e < p.edge_agents.size(); ++e)
        for (std::size_t j = 0; j < p.edge_agents[e].size(); ++j)
            add(Label::Kind::Agent, p.edge_agents[e][j],
                "edge " + edge_name(e) + " copy " + std::to_string(j));
    for (std::size_t v = 0; v < p.vertex_houses.size(); ++v)
        for (HouseId h : p.vertex_houses[v])
            add(Label::Kind::House, h, "vertex " + std::to_string(v));
    for (std::size_t e = 0; e < p.edge_houses.size(); ++e)
        for (std::size_t j = 0; j < p.edge_houses[e].size(); ++j)
            add(Label::Kind::House, p.edge_houses[e][j],
                "edge " + edge_name(e) + " copy " + std::to_string(j));
    for (HouseId h : p.shared_houses)
        add(Label::Kind::House, h, "shared");
    for (HouseId h : p.dummy_houses)
        add(Label::Kind::House, h, "dummy");
    return doc;
}

std::string_view to_string(Objective objective) noexcept
{
    return objective == Objective::MinEnvy ? "min-envy" : "envy-happy";
}

Objective parse_objective(std::string_view text)
{
    if (text == "min-envy")
        return Objective::MinEnvy;
    if (text == "envy-happy")
        return Objective::MinEnvyThenMaxHappy;
    throw Error(ErrorCode::InvalidConfig, "unknown objective '" + std::string(text) + "'");
}

void write_result(std::ostream& out, const ResultDocument& doc)
{
    const SolveResult& r = doc.result;
    out << kVersion << " result\n";
    out << "solver " << r.solver_id << '\n';
    out << "objective " << to_string(doc.objective) << '\n';
    out << "min_envy " << r.min_envy << '\n';
    out << "happiness " << r.happiness << '\n';
    out << "allocation";
    write_list(out, r.allocation.houses());
    out << '\n';
    out << "guesses " << r.guesses_explored << '\n';
    if (doc.wall_ms) {
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(3) << *doc.wall_ms;
        out << "wall_ms " << ms.str() << '\n';
    }
    out << "end\n";
}

namespace {

std::vector<HouseId> parse_allocation_line(const LineReader& reader,
                                           const std::vector<std::string>& t)
{
    std::vector<HouseId> houses;
    for (std::size_t i = 1; i < t.size(); ++i)
        houses.push_back(reader.index(t[i]));
    return houses;
}

} // namespace

ResultDocument read_result(std::istream& in)
{
    LineReader reader(in);
    std::vector<std::string> t;
    std::string rest;
    expect_header(reader, "result", t, rest);
    ResultDocument doc;
    bool ended = false;
    bool have_alloc = false;
    while (reader.next(t, rest)) {
        if (ended)
            reader.fail("content after 'end'");
        const std::string& key = t[0];
        auto single = [&] {
            if (t.size() != 2)
                reader.fail("expected '" + key + " VALUE'");
            return t[1];
        };
        if (key == "solver") {
            doc.result.solver_id = single();
        } else if (key == "objective") {
            try {
                doc.objective = parse_objective(single());
            } catch (const Error& e) {
                reader.fail(e.what());
            }
        } else if (key == "min_envy") {
            doc.result.min_envy = reader.number(single());
        } else if (key == "happiness") {
            doc.result.happiness = reader.number(single());
        } else if (key == "guesses") {
            doc.result.guesses_explored = reader.number(single());
        } else if (key == "allocation") {
            doc.result.allocation = Allocation(parse_allocation_line(reader, t));
            have_alloc = true;
        } else if (key == "wall_ms") {
            try {
                doc.wall_ms = std::stod(single());
            } catch (const std::exception&) {
                reader.fail("bad wall_ms value");
            }
        } else if (key == "end") {
            ended = true;
        } else {
            reader.fail("unknown keyword '" + key + "'");
        }
    }
    if (!ended)
        reader.fail("missing 'end'");
    if (!have_alloc)
        reader.fail("missing 'allocation' line");
    return doc;
}

void write_allocation(std::ostream& out, const Allocation& alloc)
{
    out << kVersion << " allocation\nallocation";
    write_list(out, alloc.houses());
    out << "\nend\n";
}

Allocation read_allocation(std::istream& in)
{
    const std::string text(std::istreambuf_iterator<char>(in), {});
    std::istringstream probe(text);
    LineReader reader(probe);
    std::vector<std::string> t;
    std::string rest;
    if (!reader.next(t, rest))
        reader.fail("empty file");
    if (t.size() == 2 && t[0] == kVersion && t[1] == "result") {
        std::istringstream again(text);
        return read_result(again).result.allocation;
    }
    if (t.size() != 2 || t[0] != kVersion || t[1] != "allocation")
        reader.fail("expected an allocation or result header");
    std::optional<Allocation> alloc;
    bool ended = false;
    while (reader.next(t, rest)) {
        if (ended)
            reader.fail("content after 'end'");
        if (t[0] == "allocation") {
            if (alloc)
                reader.fail("repeated 'allocation' line");
            alloc = Allocation(parse_allocation_line(reader, t));
        } else if (t[0] == "end" && t.size() == 1) {
            ended = true;
        } else {
            reader.fail("unknown keyword '" + t[0] + "'");
        }
    }
    if (!ended)
        reader.fail("missing 'end'");
    if (!alloc)
        reader.fail("missing 'allocation' line");
    return *alloc;
}

} // namespace haan
