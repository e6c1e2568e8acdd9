#include "haan_cli/commands.hpp"

#include "haan/error.hpp"
#include "haan/io.hpp"
#include "haan/reductions.hpp"
#include "haan/source_graphs.hpp"
#include "haan_cli/exit_codes.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

namespace haan::cli {

namespace {

using Clock = std::chrono::steady_clock;

int report(const Error& e, std::ostream& err)
{
    err << "haan: " << e.what() << '\n';
    return exit_code(e.code());
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn)
{
    try {
        return fn();
    } catch (const Error& e) {
        return report(e, err);
    } catch (const std::exception& e) {
        err << "haan: internal error: " << e.what() << '\n';
        return kInternal;
    }
}

void emit(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-")
        out << text;
    else
        write_text_file(path, text);
}

std::optional<std::uint64_t> parse_guess_limit(const std::string& text)
{
    if (text == "none")
        return std::nullopt;
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw Error(ErrorCode::InvalidConfig, "bad guess limit '" + text + "'");
    return value;
}

std::optional<Clock::time_point> deadline_after(const std::optional<std::uint64_t>& ms)
{
    if (!ms)
        return std::nullopt;
    return Clock::now() + std::chrono::milliseconds(*ms);
}

/// Plain instances go through solve(); annotated ones need the separator solver.
SolveResult run_solver(const InstanceDocument& doc, const std::string& algo,
                       const std::optional<std::vector<AgentId>>& cover, const SolverConfig& cfg)
{
    if (doc.annotated) {
        if (algo != "separator" && algo != "auto")
            throw Error(ErrorCode::WrongSolver,
                        "annotated instances are only solved by the separator solver");
        validate_config(cfg);
        auto result = solve_separator(doc.instance, cfg);
        if (!result)
            throw Error(ErrorCode::InstanceInfeasible,
                        "no allocation respects the feasibility sets");
        return std::move(*result);
    }
    if (cover) {
        if (algo != "vc-xp")
            throw Error(ErrorCode::InvalidConfig, "--cover only applies to --algo vc-xp");
        return solve_vertex_cover_xp(doc.instance.base(), cover, cfg);
    }
    return solve(doc.instance.base(), algo, cfg);
}

std::string format_list(const std::vector<std::uint32_t>& items)
{
    std::string s;
    for (const auto v : items)
        s += ' ' + std::to_string(v);
    return s;
}

std::vector<std::uint32_t> flags_to_list(const std::vector<bool>& flags)
{
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i])
            out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

SourceGraph load_graph(const GenerateOptions& opt)
{
    if (!opt.graph.empty() && !opt.graph_file.empty())
        throw Error(ErrorCode::InvalidConfig, "give either --graph or --graph-file");
    if (!opt.graph_file.empty()) {
        std::ifstream in(opt.graph_file);
        if (!in)
            throw Error(ErrorCode::IoError, "cannot open '" + opt.graph_file + "'");
        return read_edge_list(in);
    }
    if (opt.graph.empty())
        throw Error(ErrorCode::InvalidConfig, "missing --graph or --graph-file");
    return named_graph(opt.graph, opt.seed);
}

struct BenchRow {
    std::string instance;
    std::string algo;
    std::string status;
    std::size_t min_envy = 0;
    std::size_t happiness = 0;
    std::uint64_t guesses = 0;
    double wall_ms = 0;
    bool failure = false;
};

std::string status_of(ErrorCode code)
{
    switch (code) {
    case ErrorCode::Timeout: return "timeout";
    case ErrorCode::BudgetExceeded: return "budget";
    case ErrorCode::WrongSolver: return "wrong-solver";
    case ErrorCode::InstanceInfeasible: return "infeasible";
    case ErrorCode::SeparatorNotFound: return "no-separator";
    default: return "error";
    }
}

std::vector<BenchRow> bench_instance(const std::filesystem::path& file, const BenchOptions& opt,
                                     Objective objective)
{
    std::vector<BenchRow> rows;
    const std::string name = file.filename().string();
    InstanceDocument doc;
    try {
        doc = read_instance_file(file.string());
    } catch (const Error& e) {
        rows.push_back({name, "-", "parse-error"});
        return rows;
    }
    for (const std::string& algo : opt.algos) {
        BenchRow row{name, algo, "ok"};
        SolverConfig cfg;
        cfg.objective = objective;
        cfg.workers = opt.workers;
        cfg.deadline = deadline_after(opt.timeout_ms);
        const auto start = Clock::now();
        try {
            const SolveResult r = run_solver(doc, algo, std::nullopt, cfg);
            row.min_envy = r.min_envy;
            row.happiness = r.happiness;
            row.guesses = r.guesses_explored;
        } catch (const Error& e) {
            row.status = status_of(e.code());
        }
        row.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        rows.push_back(row);
    }
    const auto first_ok = std::find_if(rows.begin(), rows.end(),
                                       [](const BenchRow& r) { return r.status == "ok"; });
    if (first_ok != rows.end()) {
        bool disagree = false;
        for (const BenchRow& r : rows)
            if (r.status == "ok" &&
                (r.min_envy != first_ok->min_envy ||
                 (objective == Objective::MinEnvyThenMaxHappy && r.happiness != first_ok->happiness)))
                disagree = true;
        if (disagree)
            for (BenchRow& r : rows)
                r.failure = r.status == "ok";
    }
    return rows;
}

} // namespace

std::vector<std::uint32_t> parse_index_list(const std::string& text)
{
    std::vector<std::uint32_t> items;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::uint32_t value = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        const auto [end, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || end != last || first == last)
            throw Error(ErrorCode::ParseError, "bad index list '" + text + "'");
        items.push_back(value);
        pos = comma + 1;
        if (comma + 1 == text.size())
            throw Error(ErrorCode::ParseError, "bad index list '" + text + "'");
    }
    return items;
}

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const InstanceDocument doc = read_instance_file(opt.input);
        SolverConfig cfg;
        cfg.objective = parse_objective(opt.objective);
        cfg.workers = opt.workers;
        cfg.guess_limit = parse_guess_limit(opt.guess_limit);
        cfg.separator_max_size = opt.separator_max;
        cfg.auto_cover_threshold = opt.cover_threshold;
        cfg.deadline = deadline_after(opt.timeout_ms);

        const auto start = Clock::now();
        ResultDocument res;
        res.objective = cfg.objective;
        res.result = run_solver(doc, opt.algo, opt.cover, cfg);
        if (opt.timing)
            res.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        std::ostringstream text;
        write_result(text, res);
        emit(opt.output, text.str(), out);
        return int{kOk};
    });
}

int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const SourceGraph g = load_graph(opt);
        ReducedInstance red;
        if (opt.family == "clique-bip-d2")
            red = gen_clique_bipartite_d2(g, opt.k);
        else if (opt.family == "halfsep-3reg")
            red = gen_halfsep_3regular(g, opt.k);
        else if (opt.family == "clique-vc-bip")
            red = gen_clique_vc_bipartite(g, opt.k, opt.pad);
        else if (opt.family == "clique-vc-split")
            red = gen_clique_vc_split(g, opt.k, opt.t);
        else
            throw Error(ErrorCode::InvalidConfig, "unknown family '" + opt.family + "'");

        std::optional<Allocation> witness;
        if (opt.clique) {
            witness = opt.family == "clique-bip-d2" ? witness_from_clique(red, *opt.clique)
                                                    : witness_from_clique_vc(red, *opt.clique);
        } else if (opt.separator || opt.x || opt.y) {
            if (opt.family != "halfsep-3reg")
                throw Error(ErrorCode::InvalidConfig, "--separator/--x/--y need halfsep-3reg");
            const HalfSeparator sep{opt.separator.value_or(std::vector<std::uint32_t>{}),
                                    opt.x.value_or(std::vector<std::uint32_t>{}),
                                    opt.y.value_or(std::vector<std::uint32_t>{})};
            witness = witness_from_separator(red, pad_half_separator(g, opt.k, sep));
        }
        if (witness.has_value() != !opt.witness_output.empty())
            throw Error(ErrorCode::InvalidConfig,
                        "--witness-output goes together with a witness source");

        std::ostringstream text;
        write_instance(text, reduction_document(red));
        emit(opt.output, text.str(), out);
        if (witness) {
            std::ostringstream wtext;
            write_allocation(wtext, *witness);
            emit(opt.witness_output, wtext.str(), out);
        }
        return int{kOk};
    });
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const InstanceDocument doc = read_instance_file(opt.instance);
        std::ifstream in(opt.allocation);
        if (!in)
            throw Error(ErrorCode::IoError, "cannot open '" + opt.allocation + "'");
        const Allocation alloc = read_allocation(in);
        try {
            check_allocation(doc.instance.base(), alloc);
        } catch (const Error& e) {
            out << "valid no\n";
            return report(e, err);
        }
        const AnnotatedReport ann = evaluate_annotated(doc.instance, alloc);
        if (!ann.feasible_ok) {
            out << "valid no\n";
            return report(Error(ErrorCode::InvalidAllocation,
                                "allocation leaves some agent's feasibility set"),
                          err);
        }
        const EnvyReport& rep = ann.report;
        out << "valid yes\n";
        out << "envy " << rep.n_envious << '\n';
        out << "happiness " << rep.n_happy << '\n';
        out << "envious" << format_list(flags_to_list(rep.envious)) << '\n';
        out << "happy" << format_list(flags_to_list(rep.happy)) << '\n';
        if (const std::string* target = doc.find_meta("target_envy"))
            out << "target_envy " << *target << '\n';
        return int{kOk};
    });
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const Objective objective = parse_objective(opt.objective);
        for (const std::string& algo : opt.algos)
            if (std::find(std::begin(kAlgorithms), std::end(kAlgorithms), algo) ==
                std::end(kAlgorithms))
                throw Error(ErrorCode::UnknownAlgorithm, "unknown algorithm '" + algo + "'");
        namespace fs = std::filesystem;
        std::error_code ec;
        if (!fs::is_directory(opt.corpus, ec))
            throw Error(ErrorCode::IoError, "'" + opt.corpus + "' is not a directory");
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(opt.corpus))
            if (entry.is_regular_file())
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());

        std::vector<std::vector<BenchRow>> rows(files.size());
        std::atomic<std::size_t> next{0};
        const auto worker = [&] {
            for (std::size_t i = next++; i < files.size(); i = next++)
                rows[i] = bench_instance(files[i], opt, objective);
        };
        {
            std::vector<std::jthread> pool;
            for (std::size_t j = 1; j < std::max<std::size_t>(opt.jobs, 1); ++j)
                pool.emplace_back(worker);
            worker();
        }

        std::ostringstream table;
        table << "instance\talgo\tstatus\tmin_envy\thappiness\tguesses\twall_ms\tflag\n";
        bool disagreement = false;
        for (const auto& group : rows) {
            for (const BenchRow& r : group) {
                table << r.instance << '\t' << r.algo << '\t' << r.status << '\t';
                if (r.status == "ok")
                    table << r.min_envy << '\t' << r.happiness << '\t' << r.guesses;
                else
                    table << "-\t-\t-";
                char ms[32];
                std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
                table << '\t' << ms << '\t' << (r.failure ? "FAILURE" : "-") << '\n';
                disagreement = disagreement || r.failure;
            }
        }
        emit(opt.output, table.str(), out);
        if (disagreement) {
            err << "haan: solvers disagree on at least one instance\n";
            return int{kBenchDisagreement};
        }
        return int{kOk};
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact envy minimization for graphical house allocation"};
    app.require_subcommand(1);

    const auto list_option = [](CLI::App* cmd, const std::string& name,
                                std::optional<std::vector<std::uint32_t>>& target,
                                const std::string& help) {
        cmd->add_option_function<std::string>(
            name, [&target](const std::string& v) { target = parse_index_list(v); }, help);
    };

    SolveOptions so;
    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
    solve_cmd->add_option("input", so.input, "Instance file")->required();
    solve_cmd->add_option("--algo", so.algo, "brute|d1|envy-guess|separator|vc-xp|auto");
    solve_cmd->add_option("--objective", so.objective, "min-envy|envy-happy");
    solve_cmd->add_option("--workers", so.workers, "Worker threads (0 = HAAN_WORKERS or all)");
    solve_cmd->add_option("--guess-limit", so.guess_limit, "Guess cap, or 'none'");
    solve_cmd->add_option("--separator-max", so.separator_max, "Largest separator size");
    solve_cmd->add_option("--cover-threshold", so.cover_threshold, "Cover size auto accepts");
    solve_cmd->add_option("--timeout-ms", so.timeout_ms, "Wall-clock limit");
    solve_cmd->add_flag("--timing", so.timing, "Record wall time in the result");
    solve_cmd->add_option("-o,--output", so.output, "Result file (default stdout)");
    std::optional<std::vector<std::uint32_t>> cover;
    list_option(solve_cmd, "--cover", cover, "Vertex cover for vc-xp, e.g. 0,3");

    GenerateOptions go;
    auto* gen_cmd = app.add_subcommand("generate", "Generate a reduction instance");
    gen_cmd->add_option("family", go.family,
                        "clique-bip-d2|halfsep-3reg|clique-vc-bip|clique-vc-split")
        ->required();
    gen_cmd->add_option("--graph", go.graph,
                        "k3|k4|k5|prism|petersen|cycle:N|random-regular:N:D[:SEED]");
    gen_cmd->add_option("--graph-file", go.graph_file, "Edge-list file");
    gen_cmd->add_option("--k", go.k, "Clique size or separator bound")->required();
    gen_cmd->add_option("--t", go.t, "Agents per edge (clique-vc-split)");
    gen_cmd->add_option("--pad", go.pad, "Isolated vertices added (clique-vc-bip)");
    gen_cmd->add_option("--seed", go.seed, "Seed for random source graphs");
    gen_cmd->add_option("-o,--output", go.output, "Instance file (default stdout)");
    list_option(gen_cmd, "--clique", go.clique, "Clique for a witness, e.g. 0,1,2");
    list_option(gen_cmd, "--separator", go.separator, "Separator S for a witness");
    list_option(gen_cmd, "--x", go.x, "Half X for a witness");
    list_option(gen_cmd, "--y", go.y, "Half Y for a witness");
    gen_cmd->add_option("--witness-output", go.witness_output, "Witness allocation file");

    VerifyOptions vo;
    auto* verify_cmd = app.add_subcommand("verify", "Check an allocation and report envy");
    verify_cmd->add_option("instance", vo.instance, "Instance file")->required();
    verify_cmd->add_option("allocation", vo.allocation, "Allocation or result file")
        ->required();

    BenchOptions bo;
    auto* bench_cmd = app.add_subcommand("bench", "Run solvers over a corpus directory");
    bench_cmd->add_option("corpus", bo.corpus, "Directory of instance files")->required();
    bench_cmd->add_option("--algos", bo.algos, "Algorithms to run")->delimiter(',');
    bench_cmd->add_option("--objective", bo.objective, "min-envy|envy-happy");
    bench_cmd->add_option("--timeout-ms", bo.timeout_ms, "Per-run wall-clock limit");
    bench_cmd->add_option("--workers", bo.workers, "Solver worker threads");
    bench_cmd->add_option("--jobs", bo.jobs, "Instances run concurrently");
    bench_cmd->add_option("-o,--output", bo.output, "Table file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? int{kOk} : int{kUsage};
    } catch (const Error& e) {
        return report(e, err);
    }

    if (solve_cmd->parsed()) {
        so.cover = cover;
        return cmd_solve(so, out, err);
    }
    if (gen_cmd->parsed())
        return cmd_generate(go, out, err);
    if (verify_cmd->parsed())
        return cmd_verify(vo, out, err);
    return cmd_bench(bo, out, err);
}

} // namespace haan::cli
