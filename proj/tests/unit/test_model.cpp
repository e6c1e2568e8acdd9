#include "helpers.hpp"
#include "oracle.hpp"

#include <random>

using namespace haan;
using haan::test::error_of;
using haan::test::make;

TEST_CASE("validate_instance accepts the empty instance")
{
    const Instance inst = make(0, 0, {}, {});
    CHECK(inst.n_agents() == 0);
    CHECK(inst.n_houses() == 0);
    CHECK(inst.max_preference_size() == 0);
}

TEST_CASE("validate_instance rejects malformed data")
{
    CHECK(error_of([] { make(1, 1, {{0, 0}}, {{}}); }) == ErrorCode::InvalidInstance);
    CHECK(error_of([] { make(1, 3, {}, {{5}}); }) == ErrorCode::InvalidInstance);
    CHECK(error_of([] { make(2, 1, {{0, 2}}, {}); }) == ErrorCode::InvalidInstance);
    CHECK(error_of([] { make(2, 1, {{0, 1}, {1, 0}}, {}); }) == ErrorCode::InvalidInstance);
    CHECK(error_of([] { make(1, 2, {}, {{1, 1}}); }) == ErrorCode::InvalidInstance);
    CHECK(error_of([] { make(1, 2, {}, {{}, {}}); }) == ErrorCode::InvalidInstance);
}

TEST_CASE("instances normalize edges and preferences")
{
    const Instance inst = make(3, 3, {{2, 0}, {1, 0}}, {{2, 0}, {}, {1}});
    REQUIRE(inst.n_edges() == 2);
    CHECK(inst.edges()[0] == Edge{0, 1});
    CHECK(inst.edges()[1] == Edge{0, 2});
    CHECK(inst.adjacent(2, 0));
    CHECK(!inst.adjacent(1, 2));
    CHECK(inst.degree(0) == 2);
    CHECK(inst.preference_list(0)[0] == 0);
    CHECK(inst.max_preference_size() == 2);
    CHECK(validate_instance(inst.to_raw()) == inst);
}

TEST_CASE("check_allocation enforces injectivity and range")
{
    const Instance inst = make(2, 2, {}, {});
    CHECK(error_of([&] { check_allocation(inst, Allocation({0, 0})); }) ==
          ErrorCode::InvalidAllocation);
    CHECK(error_of([&] { check_allocation(inst, Allocation({0, 2})); }) ==
          ErrorCode::InvalidAllocation);
    CHECK(error_of([&] { check_allocation(inst, Allocation({0})); }) ==
          ErrorCode::InvalidAllocation);
    CHECK_NOTHROW(check_allocation(inst, Allocation({1, 0})));
}

TEST_CASE("evaluate on an edgeless instance has no envy")
{
    const Instance inst = make(3, 3, {}, {{0}, {0}, {0}});
    const EnvyReport r = evaluate(inst, Allocation({1, 0, 2}));
    CHECK(r.n_envious == 0);
    CHECK(r.n_happy == 1);
}

TEST_CASE("evaluate on a path with a shared favourite")
{
    const Instance inst = make(2, 2, {{0, 1}}, {{0}, {0}});
    const EnvyReport r = evaluate(inst, Allocation({0, 1}));
    CHECK(r.n_envious == 1);
    CHECK(r.n_happy == 1);
    CHECK(r.happy[0]);
    CHECK(r.envy_sets[1] == std::vector<AgentId>{0});
    CHECK(r.envy_sets[0].empty());
}

TEST_CASE("evaluate on the triangle matches the enumerated minimum")
{
    const Instance inst = test::triangle_all_h0(3);
    const EnvyReport r = evaluate(inst, Allocation({0, 1, 2}));
    CHECK(r.envy_sets[0].empty());
    CHECK(r.envy_sets[1] == std::vector<AgentId>{0});
    CHECK(r.envy_sets[2] == std::vector<AgentId>{0});
    CHECK(r.n_envious == 2);
    const auto opt = oracle::enumerate(oracle::from_instance(inst));
    REQUIRE(opt);
    CHECK(opt->allocations == 6);
    CHECK(opt->min_envy == 2);
}

TEST_CASE("evaluate_annotated treats angry agents by their own house only")
{
    const Instance base = make(1, 2, {}, {{0}});
    const AnnotatedInstance ann = validate_annotated(base, {{1}}, {0});
    const AnnotatedReport bad = evaluate_annotated(ann, Allocation({1}));
    CHECK(bad.feasible_ok);
    CHECK(bad.report.envious[0]);
    CHECK(bad.report.n_envious == 1);
    const AnnotatedReport good = evaluate_annotated(ann, Allocation({0}));
    CHECK(!good.feasible_ok);
    CHECK(!good.report.envious[0]);
}

TEST_CASE("validate_annotated rejects bad feasible and angry entries")
{
    const Instance base = make(2, 2, {}, {});
    CHECK(error_of([&] { validate_annotated(base, {{2}, {}}, {}); }) ==
          ErrorCode::InvalidInstance);
    CHECK(error_of([&] { validate_annotated(base, {{0, 0}, {}}, {}); }) ==
          ErrorCode::InvalidInstance);
    CHECK(error_of([&] { validate_annotated(base, {}, {2}); }) == ErrorCode::InvalidInstance);
}

TEST_CASE("properties of evaluate on random instances")
{
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = 1 + rng() % 6;
        const std::size_t m = n + rng() % 3;
        const Instance inst = oracle::random_instance(rng, n, m, 0.5, 3);
        std::vector<HouseId> houses(m);
        for (HouseId h = 0; h < m; ++h)
            houses[h] = h;
        std::shuffle(houses.begin(), houses.end(), rng);
        houses.resize(n);
        const Allocation alloc(houses);
        const EnvyReport r = evaluate(inst, alloc);
        const auto plain = oracle::from_instance(inst);
        CHECK(r.n_envious == oracle::count_envy(plain, houses));
        CHECK(r.n_happy == oracle::count_happy(plain, houses));
        for (AgentId a = 0; a < n; ++a) {
            CHECK(r.envious[a] == !r.envy_sets[a].empty());
            CHECK(r.happy[a] == inst.prefers(a, houses[a]));
            if (r.happy[a])
                CHECK(r.envy_sets[a].empty());
            for (AgentId b : r.envy_sets[a]) {
                CHECK(inst.adjacent(a, b));
                CHECK(!inst.prefers(a, houses[a]));
                CHECK(inst.prefers(a, houses[b]));
            }
        }
        const AnnotatedReport ar =
            evaluate_annotated(AnnotatedInstance::unconstrained(inst), alloc);
        CHECK(ar.feasible_ok);
        CHECK(ar.report.envy_sets == r.envy_sets);
        CHECK(ar.report.n_envious == r.n_envious);

        // Deleting an edge never increases the envy of a fixed allocation.
        if (inst.n_edges() > 0) {
            RawInstance raw = inst.to_raw();
            raw.edges.erase(raw.edges.begin() + static_cast<std::ptrdiff_t>(rng() % raw.edges.size()));
            CHECK(evaluate(validate_instance(raw), alloc).n_envious <= r.n_envious);
        }
    }
}
