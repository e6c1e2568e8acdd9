#include "haan/solvers.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

#include <random>

using namespace haan;
using haan::test::error_of;
using haan::test::make;
using haan::test::triangle_all_h0;

namespace {

SolverConfig config(Objective obj, std::size_t workers = 1)
{
    SolverConfig cfg;
    cfg.objective = obj;
    cfg.workers = workers;
    return cfg;
}

void check_against_oracle(const Instance& inst, const SolveResult& r, Objective obj)
{
    const oracle::Plain p = oracle::from_instance(inst);
    const auto opt = oracle::enumerate(p);
    REQUIRE(opt);
    CHECK(r.min_envy == opt->min_envy);
    check_allocation(inst, r.allocation);
    CHECK(oracle::count_envy(p, r.allocation.houses()) == r.min_envy);
    CHECK(oracle::count_happy(p, r.allocation.houses()) == r.happiness);
    if (obj == Objective::MinEnvyThenMaxHappy)
        CHECK(r.happiness == opt->max_happy);
}

} // namespace

TEST_CASE("small examples for every solver")
{
    // Path 0-1-2, all want house 0; only the holder's neighbours can envy.
    const Instance path = make(3, 3, {{0, 1}, {1, 2}}, {{0}, {0}, {0}});
    for (const auto algo : {"brute", "d1", "envy-guess", "separator", "vc-xp", "auto"}) {
        CAPTURE(algo);
        const SolveResult r = solve(path, algo, config(Objective::MinEnvy));
        CHECK(r.min_envy == 1);
        check_against_oracle(path, r, Objective::MinEnvy);
    }
    const Instance tri = triangle_all_h0(3);
    for (const auto algo : {"brute", "d1", "envy-guess", "separator", "vc-xp"}) {
        CAPTURE(algo);
        CHECK(solve(tri, algo, config(Objective::MinEnvy)).min_envy == 2);
    }
}

TEST_CASE("solver ids")
{
    const Instance inst = make(2, 2, {{0, 1}}, {{0}, {1}});
    CHECK(solve_bruteforce(inst).solver_id == "brute");
    CHECK(solve_d1_matching(inst).solver_id == "d1");
    CHECK(solve_envy_guess(inst).solver_id == "envy-guess");
    CHECK(solve_vertex_cover_xp(inst, std::nullopt).solver_id == "vc-xp");
    CHECK(solve(inst, "separator").solver_id == "separator");
    CHECK(solve(inst, "auto").min_envy == 0);
}

TEST_CASE("empty instance")
{
    const Instance empty = make(0, 0, {}, {});
    for (const auto algo : {"brute", "d1", "envy-guess", "separator", "vc-xp", "auto"}) {
        CAPTURE(algo);
        const SolveResult r = solve(empty, algo);
        CHECK(r.min_envy == 0);
        CHECK(r.allocation.size() == 0);
    }
}

TEST_CASE("errors")
{
    const Instance tri = triangle_all_h0(2);
    for (const auto algo : {"brute", "d1", "envy-guess", "separator", "vc-xp"})
        CHECK(error_of([&] { solve(tri, algo); }) == ErrorCode::InstanceInfeasible);
    CHECK(error_of([] { solve(triangle_all_h0(3), "magic"); }) == ErrorCode::UnknownAlgorithm);
    const Instance d2 = make(2, 2, {{0, 1}}, {{0, 1}, {}});
    CHECK(error_of([&] { solve_d1_matching(d2); }) == ErrorCode::WrongSolver);
    CHECK(error_of([&] { solve_vertex_cover_xp(d2, std::vector<AgentId>{}); }) ==
          ErrorCode::NotACover);
    SolverConfig zero;
    zero.guess_limit = 0;
    CHECK(error_of([&] { solve(d2, "brute", zero); }) == ErrorCode::InvalidConfig);
    SolverConfig cap;
    cap.separator_max_size = 0;
    CHECK(error_of([&] { solve(triangle_all_h0(3), "separator", cap); }) ==
          ErrorCode::SeparatorNotFound);
}

TEST_CASE("guess budget")
{
    SolverConfig cfg = config(Objective::MinEnvyThenMaxHappy, 2);
    cfg.guess_limit = 1;
    const Instance tri = triangle_all_h0(3);
    for (const auto algo : {"brute", "envy-guess", "separator", "vc-xp"}) {
        CAPTURE(algo);
        CHECK(error_of([&] { solve(tri, algo, cfg); }) == ErrorCode::BudgetExceeded);
    }
    cfg.guess_limit = std::nullopt;
    for (const auto algo : {"brute", "envy-guess", "separator", "vc-xp"})
        CHECK(solve(tri, algo, cfg).min_envy == 2);
}

TEST_CASE("deadline and cancellation")
{
    const Instance tri = triangle_all_h0(3);
    SolverConfig past = config(Objective::MinEnvy, 2);
    past.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    for (const auto algo : {"brute", "envy-guess", "separator", "vc-xp"}) {
        CAPTURE(algo);
        CHECK(error_of([&] { solve(tri, algo, past); }) == ErrorCode::Timeout);
    }
    std::atomic<bool> cancel{true};
    SolverConfig cancelled = config(Objective::MinEnvy, 2);
    cancelled.cancel = &cancel;
    CHECK(error_of([&] { solve(tri, "brute", cancelled); }) == ErrorCode::Timeout);
}

TEST_CASE("explicit vertex cover")
{
    // Star centred on agent 0.
    const Instance star = make(4, 5, {{0, 1}, {0, 2}, {0, 3}}, {{0, 1}, {0}, {1}, {0, 1}});
    const SolveResult with = solve_vertex_cover_xp(star, std::vector<AgentId>{0});
    const SolveResult leaves = solve_vertex_cover_xp(star, std::vector<AgentId>{1, 2, 3});
    const SolveResult none = solve_vertex_cover_xp(star, std::nullopt);
    CHECK(with.min_envy == leaves.min_envy);
    CHECK(with.min_envy == none.min_envy);
    check_against_oracle(star, with, Objective::MinEnvy);
}

TEST_CASE("auto dispatch")
{
    CHECK(auto_algorithm(make(2, 2, {{0, 1}}, {{0}, {1}})) == "d1");
    const Instance star = make(3, 4, {{0, 1}, {0, 2}}, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(auto_algorithm(star) == "vc-xp");
}

TEST_CASE("random instances agree with enumeration")
{
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 120; ++iter) {
        const std::size_t n = rng() % 6;
        const std::size_t m = n + rng() % 2;
        const std::size_t d = rng() % 4;
        const Instance inst = oracle::random_instance(rng, n, m, 0.5, d);
        for (const Objective obj : {Objective::MinEnvy, Objective::MinEnvyThenMaxHappy}) {
            std::vector<std::string_view> algos = {"brute", "envy-guess", "separator", "vc-xp",
                                                   "auto"};
            if (inst.max_preference_size() <= 1)
                algos.push_back("d1");
            for (const auto algo : algos) {
                CAPTURE(iter);
                CAPTURE(algo);
                check_against_oracle(inst, solve(inst, algo, config(obj, 1 + iter % 3)), obj);
            }
        }
    }
}

TEST_CASE("separator solver on annotated instances")
{
    std::mt19937_64 rng(23);
    int infeasible = 0;
    for (int iter = 0; iter < 150; ++iter) {
        const std::size_t n = 1 + rng() % 5;
        const std::size_t m = n + rng() % 2;
        const Instance base = oracle::random_instance(rng, n, m, 0.5, 2);
        std::vector<std::vector<HouseId>> feasible(n);
        for (auto& f : feasible)
            for (HouseId h = 0; h < m; ++h)
                if (rng() % 4 != 0)
                    f.push_back(h);
        std::vector<AgentId> angry;
        for (AgentId a = 0; a < n; ++a)
            if (rng() % 4 == 0)
                angry.push_back(a);
        const AnnotatedInstance ann = validate_annotated(base, feasible, angry);
        const auto opt = oracle::enumerate(oracle::from_annotated(ann));
        for (const Objective obj : {Objective::MinEnvy, Objective::MinEnvyThenMaxHappy}) {
            CAPTURE(iter);
            const auto r = solve_separator(ann, config(obj, 2));
            REQUIRE(r.has_value() == opt.has_value());
            if (!r) {
                ++infeasible;
                continue;
            }
            CHECK(r->min_envy == opt->min_envy);
            const AnnotatedReport rep = evaluate_annotated(ann, r->allocation);
            CHECK(rep.feasible_ok);
            CHECK(rep.report.n_envious == r->min_envy);
            if (obj == Objective::MinEnvyThenMaxHappy)
                CHECK(r->happiness == opt->max_happy);
        }
    }
    CHECK(infeasible > 0);
}

TEST_CASE("results do not depend on the worker count")
{
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 30; ++iter) {
        const Instance inst = oracle::random_instance(rng, 5, 6, 0.5, 2);
        for (const auto algo : {"brute", "envy-guess", "separator", "vc-xp"}) {
            CAPTURE(algo);
            const SolveResult a = solve(inst, algo, config(Objective::MinEnvyThenMaxHappy, 1));
            const SolveResult b = solve(inst, algo, config(Objective::MinEnvyThenMaxHappy, 5));
            CHECK(a.allocation == b.allocation);
            CHECK(a.guesses_explored == b.guesses_explored);
        }
    }
}

TEST_CASE("worker resolution")
{
    CHECK(resolve_workers(3) == 3);
    CHECK(resolve_workers(0) >= 1);
}
