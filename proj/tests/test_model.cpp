#include "tdart/model.hpp"
#include "tdart/modelgen.hpp"

#include <doctest.h>

#include <algorithm>

using namespace tdart;

TEST_CASE("interval membership respects closed bounds")
{
    TimeInterval iv{2, NatInf(5)};
    CHECK(iv.contains(2));
    CHECK(iv.contains(5));
    CHECK_FALSE(iv.contains(1));
    CHECK_FALSE(iv.contains(6));

    TimeInterval open{3, NatInf::inf()};
    CHECK(open.contains(3));
    CHECK(open.contains(1000000));
    CHECK_FALSE(open.contains(2));

    CHECK(TimeInterval{}.is_unconstrained());
    CHECK_FALSE(iv.is_unconstrained());
}

TEST_CASE("extended naturals order infinity above every number")
{
    CHECK(NatInf(3) < NatInf::inf());
    CHECK(NatInf::inf() == NatInf::inf());
    CHECK_FALSE(NatInf::inf() < NatInf::inf());
    CHECK(NatInf(0) != NatInf::inf());
    CHECK(min(NatInf(4), NatInf::inf()) == NatInf(4));
    CHECK(min(NatInf::inf(), NatInf::inf()).is_inf());
    CHECK(NatInf(2) <= NatInf(2));
    CHECK(NatInf::inf() > NatInf(1u << 30));
}

TEST_CASE("normalize_guard fills unmentioned clocks with [0, inf)")
{
    const Guard all_free = normalize_guard({}, 3);
    REQUIRE(all_free.size() == 3);
    for (const TimeInterval& iv : all_free)
        CHECK(iv.is_unconstrained());

    const Guard g = normalize_guard({{1, TimeInterval{2, NatInf(5)}}}, 3);
    CHECK(g[0].is_unconstrained());
    CHECK(g[1] == TimeInterval{2, NatInf(5)});
    CHECK(g[2].is_unconstrained());

    const Guard h =
        normalize_guard({{0, TimeInterval{1, NatInf::inf()}}, {1, TimeInterval{0, NatInf(0)}}}, 2);
    CHECK(h[0] == TimeInterval{1, NatInf::inf()});
    CHECK(h[1] == TimeInterval{0, NatInf(0)});
}

TEST_CASE("max_constant scans guard bounds")
{
    CHECK(max_constant(gen_fig4()) == 2);

    TimedAutomaton free_model;
    free_model.clocks = {"x"};
    free_model.locations = {"a", "b"};
    free_model.edges.push_back({0, 1, normalize_guard({}, 1), {}});
    CHECK(max_constant(free_model) == 0);

    // Independent scan of the generated ladder model.
    const TimedAutomaton lcm = gen_lcm(5, NatInf::inf());
    ClockValue by_hand = 0;
    for (const Edge& e : lcm.edges)
        for (const TimeInterval& iv : e.guard) {
            by_hand = std::max(by_hand, iv.lower);
            if (!iv.upper.is_inf())
                by_hand = std::max<ClockValue>(by_hand, ClockValue(iv.upper.value()));
        }
    CHECK(by_hand == 5);
    CHECK(max_constant(lcm) == by_hand);
}

TEST_CASE("validate accepts the four-location cycle and derives its index")
{
    const ValidatedModel vm = validate(gen_fig4());
    CHECK(vm.location_count() == 4);
    CHECK(vm.clock_count() == 2);
    CHECK(vm.max_constant() == 2);

    const auto from_l1 = vm.edges_from(1);
    REQUIRE(from_l1.size() == 2);
    CHECK(from_l1[0] == 1); // ordinal order survives bucketing
    CHECK(from_l1[1] == 2);
    CHECK(vm.edges_from(3).empty());
    CHECK(vm.location_name(2) == "l2");
    CHECK(vm.clock_name(1) == "y");
}

TEST_CASE("validate rejects inverted intervals")
{
    TimedAutomaton m = gen_fig4();
    m.edges[0].guard[0] = TimeInterval{3, NatInf(2)};
    CHECK_THROWS_WITH_AS(validate(std::move(m)), doctest::Contains("lower 3 > upper 2"),
                         ValidationError);
}

TEST_CASE("validate rejects dangling location references")
{
    TimedAutomaton m = gen_fig4();
    m.edges[2].to = 9;
    CHECK_THROWS_WITH_AS(validate(std::move(m)), doctest::Contains("dangling"), ValidationError);
}

TEST_CASE("validate rejects duplicate names")
{
    TimedAutomaton m = gen_fig4();
    m.clocks[1] = "x";
    CHECK_THROWS_WITH_AS(validate(std::move(m)), doctest::Contains("duplicate clock"),
                         ValidationError);

    TimedAutomaton m2 = gen_fig4();
    m2.locations[3] = "l0";
    CHECK_THROWS_WITH_AS(validate(std::move(m2)), doctest::Contains("duplicate location"),
                         ValidationError);
}

TEST_CASE("validate rejects guards that do not cover every clock")
{
    TimedAutomaton m = gen_fig4();
    m.edges[1].guard.pop_back();
    CHECK_THROWS_WITH_AS(validate(std::move(m)), doctest::Contains("covers 1 of 2"),
                         ValidationError);
}

TEST_CASE("validate rejects out-of-range pieces and collects every violation")
{
    TimedAutomaton m = gen_fig4();
    m.initial = 7;
    m.edges[0].from = 11;
    m.edges[1].reset = {5};
    m.edges[3].reset = {1, 0}; // order violation
    try {
        validate(std::move(m));
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.violations().size() == 4);
    }
}

TEST_CASE("name lookup by index")
{
    const TimedAutomaton m = gen_fig4();
    CHECK(m.find_clock("y") == ClockIndex(1));
    CHECK_FALSE(m.find_clock("z").has_value());
    CHECK(m.find_location("l3") == LocationIndex(3));
    CHECK_FALSE(m.find_location("l9").has_value());
}
