#include "tdart/modelgen.hpp"
#include "tdart/semantics.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace tdart;
using test::pick;
using test::val;

TEST_CASE("delay shifts every clock by the same amount")
{
    CHECK(delay(val({0, 0}), 3) == val({3, 3}));
    CHECK(delay(val({2, 0}), 4) == val({6, 4}));
    CHECK(delay(val({3, 0}), 4) == val({7, 4}));
    CHECK(delay(val({1, 5, 2}), 0) == val({1, 5, 2}));
}

TEST_CASE("bounded addition saturates just above the max constant")
{
    CHECK(bounded_add(val({3, 0}), 4, 5) == val({6, 4}));
    CHECK(bounded_add(val({0, 2}), 2, 2) == val({2, 3}));
    CHECK(bounded_add(3, 0, 2) == 3);  // stays at the cap
    CHECK(bounded_add(3, 5, 2) == 3);
    CHECK(bounded_add(2, 0, 2) == 2);  // exactly mc is kept
    CHECK(bounded_add(0, 0, 0) == 0);
    CHECK(bounded_add(0, 1, 0) == 1);  // mc = 0 still has a distinct cap
    CHECK(bounded_add(7, 0, 2) == 3);  // values beyond the cap collapse onto it
}

TEST_CASE("bounded addition composes across splits of the delay")
{
    std::mt19937_64 rng(42);
    for (int i = 0; i < 500; ++i) {
        const ClockValue mc = ClockValue(pick(rng, 7));
        ClockValuation v(1 + pick(rng, 4));
        for (auto& x : v)
            x = ClockValue(pick(rng, std::uint64_t(mc) + 2));
        const ClockValue d1 = ClockValue(pick(rng, std::uint64_t(mc) + 3));
        const ClockValue d2 = ClockValue(pick(rng, std::uint64_t(mc) + 3));
        CHECK(bounded_add(v, d1 + d2, mc) == bounded_add(bounded_add(v, d1, mc), d2, mc));
    }
}

TEST_CASE("reset zeroes exactly the chosen clocks")
{
    const std::vector<ClockIndex> both{0, 1};
    const std::vector<ClockIndex> first{0};
    CHECK(reset(val({2, 3}), both) == val({0, 0}));
    CHECK(reset(val({1, 1}), first) == val({0, 1}));
    CHECK(reset(val({4, 5}), {}) == val({4, 5}));

    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        ClockValuation v(3);
        for (auto& x : v)
            x = ClockValue(pick(rng, 9));
        const std::vector<ClockIndex> r1{0};
        const std::vector<ClockIndex> r2{2};
        CHECK(reset(reset(v, r1), r1) == reset(v, r1)); // idempotent
        CHECK(reset(reset(v, r1), r2) == reset(reset(v, r2), r1)); // disjoint sets commute
        CHECK(reset(v, r1)[1] == v[1]); // untouched clocks keep their value
    }
}

TEST_CASE("guard satisfaction checks every clock's interval")
{
    const Guard g = normalize_guard({{0, {3, NatInf(7)}}, {1, {4, NatInf::inf()}}}, 2);
    CHECK(satisfies(val({6, 4}), g));
    CHECK(satisfies(val({3, 100}), g));
    CHECK_FALSE(satisfies(val({2, 4}), g));
    CHECK_FALSE(satisfies(val({8, 4}), g));
    CHECK_FALSE(satisfies(val({6, 3}), g));

    const Guard fig4_e0 = gen_fig4().edges[0].guard;
    CHECK_FALSE(satisfies(val({0, 0}), fig4_e0));
    CHECK(satisfies(val({2, 0}), fig4_e0));

    std::mt19937_64 rng(44);
    const Guard free_guard = normalize_guard({}, 2);
    for (int i = 0; i < 50; ++i)
        CHECK(satisfies(val({ClockValue(pick(rng, 50)), ClockValue(pick(rng, 50))}), free_guard));
}

TEST_CASE("equivalence at the max constant ignores values past it")
{
    CHECK(mc_equivalent(val({3, 1}), val({5, 1}), 2));
    CHECK_FALSE(mc_equivalent(val({2, 1}), val({3, 1}), 2));
    CHECK(mc_equivalent(val({0, 0}), val({0, 0}), 0));
    CHECK(mc_equivalent(val({1, 7}), val({9, 7}), 0));
    CHECK_FALSE(mc_equivalent(val({0, 7}), val({9, 7}), 0));

    std::mt19937_64 rng(45);
    for (int i = 0; i < 300; ++i) {
        const ClockValue mc = ClockValue(pick(rng, 5));
        auto draw = [&] {
            ClockValuation v(2);
            for (auto& x : v)
                x = ClockValue(pick(rng, std::uint64_t(mc) + 4));
            return v;
        };
        const auto a = draw(), b = draw(), c = draw();
        CHECK(mc_equivalent(a, a, mc));
        CHECK(mc_equivalent(a, b, mc) == mc_equivalent(b, a, mc));
        if (mc_equivalent(a, b, mc) && mc_equivalent(b, c, mc))
            CHECK(mc_equivalent(a, c, mc));
    }
}

TEST_CASE("canonical form collapses everything past the constant onto it")
{
    CHECK(mc_canonical(val({5, 1}), 2) == val({3, 1}));
    CHECK(mc_canonical(val({2, 3}), 2) == val({2, 3}));
    std::mt19937_64 rng(46);
    for (int i = 0; i < 200; ++i) {
        const ClockValue mc = ClockValue(pick(rng, 5));
        ClockValuation v(3);
        for (auto& x : v)
            x = ClockValue(pick(rng, 12));
        const auto canon = mc_canonical(v, mc);
        CHECK(mc_equivalent(v, canon, mc));
        CHECK(mc_canonical(canon, mc) == canon);
        for (ClockValue x : canon)
            CHECK(x <= mc + 1);
    }
}

TEST_CASE("guards cannot distinguish equivalent valuations")
{
    std::mt19937_64 rng(47);
    for (int i = 0; i < 500; ++i) {
        const ClockValue mc = 1 + ClockValue(pick(rng, 5));
        const std::size_t n = 1 + pick(rng, 3);

        Guard g(n);
        for (auto& iv : g) {
            iv.lower = ClockValue(pick(rng, mc + 1)); // bounds never exceed mc
            iv.upper = pick(rng, 2) ? NatInf::inf()
                                    : NatInf(iv.lower + pick(rng, mc - iv.lower + 1));
        }

        ClockValuation v(n), bumped(n);
        for (std::size_t c = 0; c < n; ++c) {
            v[c] = ClockValue(pick(rng, std::uint64_t(mc) + 4));
            bumped[c] = v[c] > mc ? v[c] + ClockValue(pick(rng, 5)) : v[c];
        }
        REQUIRE(mc_equivalent(v, bumped, mc));
        CHECK(satisfies(v, g) == satisfies(bumped, g));
    }
}

TEST_CASE("equivalence survives one delay or reset step")
{
    std::mt19937_64 rng(48);
    for (int i = 0; i < 500; ++i) {
        const ClockValue mc = ClockValue(pick(rng, 5));
        const std::size_t n = 1 + pick(rng, 3);
        ClockValuation v(n), w(n);
        for (std::size_t c = 0; c < n; ++c) {
            v[c] = ClockValue(pick(rng, std::uint64_t(mc) + 4));
            w[c] = v[c] > mc ? v[c] + ClockValue(pick(rng, 5)) : v[c];
        }
        REQUIRE(mc_equivalent(v, w, mc));

        const ClockValue d = ClockValue(pick(rng, std::uint64_t(mc) + 3));
        CHECK(mc_equivalent(bounded_add(v, d, mc), bounded_add(w, d, mc), mc));

        std::vector<ClockIndex> r;
        for (std::size_t c = 0; c < n; ++c)
            if (pick(rng, 2))
                r.push_back(ClockIndex(c));
        CHECK(mc_equivalent(reset(v, r), reset(w, r), mc));
    }
}

TEST_CASE("switch successors follow edge declaration order")
{
    const ValidatedModel vm = validate(gen_fig4());

    CHECK(switch_successors({0, val({0, 0})}, vm).empty());

    const auto from_l0 = switch_successors({0, val({2, 2})}, vm);
    REQUIRE(from_l0.size() == 1);
    CHECK(from_l0[0].first == 0);
    CHECK(from_l0[0].second == Configuration{1, val({2, 2})});

    const auto from_l1 = switch_successors({1, val({3, 3})}, vm);
    REQUIRE(from_l1.size() == 2);
    CHECK(from_l1[0].first == 1);
    CHECK(from_l1[0].second == Configuration{1, val({0, 3})});
    CHECK(from_l1[1].first == 2);
    CHECK(from_l1[1].second == Configuration{2, val({0, 0})});

    CHECK(switch_successors({3, val({0, 0})}, vm).empty());
}

TEST_CASE("hash functors are stable and spread locations")
{
    const ClockValuation a = val({1, 2, 3});
    CHECK(ValuationHash{}(a) == ValuationHash{}(val({1, 2, 3})));
    CHECK(ConfigurationHash{}({0, a}) != ConfigurationHash{}({1, a}));
}
