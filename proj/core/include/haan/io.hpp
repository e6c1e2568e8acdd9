#pragma once

#include "haan/model.hpp"
#include "haan/reductions.hpp"
#include "haan/solvers.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace haan {

struct Label {
    enum class Kind { Agent, House };
    Kind kind = Kind::Agent;
    std::uint32_t index = 0;
    std::string text;

    friend bool operator==(const Label&, const Label&) = default;
};

/// Parsed "haan/1 instance" file.
struct InstanceDocument {
    AnnotatedInstance instance;
    /// True when the file carried feasible or angry lines.
    bool annotated = false;
    /// Metadata in file order; keys contain no whitespace.
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<Label> labels;

    const std::string* find_meta(const std::string& key) const;
};

/// Line-oriented format:
///   haan/1 instance
///   agents N / houses M
///   edge U V            one per edge, sorted
///   pref A H...         one per agent
///   feasible A H...     annotated files; absent agents may use every house
///   angry A...          annotated files
///   meta KEY VALUE...   free text to end of line
///   label agent|house I TEXT...
///   end
/// Lines may come in any order; '#' starts a comment. Throws Error(ParseError)
/// or Error(InvalidInstance).
InstanceDocument read_instance(std::istream& in);
/// Canonical form: the order above, edges and labels sorted.
void write_instance(std::ostream& out, const InstanceDocument& doc);

InstanceDocument read_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Document for a generated instance: provenance and target in metadata,
/// role labels for agents and houses.
InstanceDocument reduction_document(const ReducedInstance& red);

std::string_view to_string(Objective objective) noexcept;
/// Accepts "min-envy" and "envy-happy". Throws Error(InvalidConfig).
Objective parse_objective(std::string_view text);

struct ResultDocument {
    SolveResult result;
    Objective objective = Objective::MinEnvy;
    std::optional<double> wall_ms;
};

void write_result(std::ostream& out, const ResultDocument& doc);
ResultDocument read_result(std::istream& in);

void write_allocation(std::ostream& out, const Allocation& alloc);
/// Reads an allocation file or the allocation of a result file.
Allocation read_allocation(std::istream& in);

} // namespace haan
