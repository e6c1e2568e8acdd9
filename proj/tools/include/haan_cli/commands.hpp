#pragma once

#include "haan/solvers.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace haan::cli {

struct SolveOptions {
    std::string input;
    std::string algo = "auto";
    std::string objective = "min-envy";
    std::size_t workers = 0;
    /// "none" disables the cap.
    std::string guess_limit = std::to_string(kDefaultGuessLimit);
    std::optional<std::size_t> separator_max;
    std::optional<std::vector<AgentId>> cover;
    std::size_t cover_threshold = 8;
    std::optional<std::uint64_t> timeout_ms;
    bool timing = false;
    std::string output;
};

struct GenerateOptions {
    std::string family;
    std::string graph;
    std::string graph_file;
    std::int64_t k = 0;
    std::int64_t t = 1;
    std::int64_t pad = 0;
    std::uint64_t seed = 0;
    std::string output;
    std::optional<std::vector<std::uint32_t>> clique;
    std::optional<std::vector<std::uint32_t>> separator;
    std::optional<std::vector<std::uint32_t>> x;
    std::optional<std::vector<std::uint32_t>> y;
    std::string witness_output;
};

struct VerifyOptions {
    std::string instance;
    std::string allocation;
};

struct BenchOptions {
    std::string corpus;
    std::vector<std::string> algos = {"brute", "d1", "envy-guess", "separator", "vc-xp"};
    std::string objective = "min-envy";
    std::optional<std::uint64_t> timeout_ms;
    std::size_t workers = 0;
    /// Instances solved concurrently; 1 keeps timings stable.
    std::size_t jobs = 1;
    std::string output;
};

/// Each command writes machine-readable output to `out` (or its output file)
/// and diagnostics to `err`, and returns a process exit code.
int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);
int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

/// Parses "1,2,3" (empty string is the empty list). Throws Error(ParseError).
std::vector<std::uint32_t> parse_index_list(const std::string& text);

/// Full argument parsing and dispatch.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace haan::cli
