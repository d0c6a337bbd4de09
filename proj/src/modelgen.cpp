#include "tdart/modelgen.hpp"

#include <cassert>
#include <random>
#include <stdexcept>
#include <string>

namespace tdart {

namespace {

Guard guard_over(std::size_t clock_count,
                 std::initializer_list<std::pair<ClockIndex, TimeInterval>> parts)
{
    return normalize_guard(std::vector<std::pair<ClockIndex, TimeInterval>>(parts), clock_count);
}

} // namespace

TimedAutomaton gen_fig4()
{
    TimedAutomaton m;
    m.clocks = {"x", "y"};
    m.locations = {"l0", "l1", "l2", "l3"};
    m.initial = 0;

    const NatInf inf = NatInf::inf();
    m.edges.push_back({0, 1, guard_over(2, {{0, {2, inf}}}), {}});
    m.edges.push_back({1, 1, guard_over(2, {}), {0}});
    m.edges.push_back({1, 2, guard_over(2, {{0, {2, inf}}, {1, {2, inf}}}), {0, 1}});
    m.edges.push_back({2, 1, guard_over(2, {{0, {1, inf}}}), {}});
    m.edges.push_back({2, 3, guard_over(2, {{0, {0, 1}}, {1, {2, inf}}}), {}});
    return m;
}

TimedAutomaton gen_lcm(std::uint32_t n, NatInf bound)
{
    if (n < 1)
        throw std::invalid_argument("gen_lcm: n must be at least 1");
    if (bound < NatInf(1))
        throw std::invalid_argument("gen_lcm: bound must be at least 1");

    TimedAutomaton m;
    for (std::uint32_t i = 1; i <= n; ++i)
        m.clocks.push_back("x" + std::to_string(i));
    m.clocks.push_back("y");
    m.locations = {"l0", "Goal"};
    m.initial = 0;

    const std::size_t k = m.clocks.size();
    for (std::uint32_t i = 1; i <= n; ++i)
        m.edges.push_back({0, 0, guard_over(k, {{i - 1, {i, NatInf(i)}}}), {i - 1}});

    Guard all_zero(k);
    for (std::uint32_t i = 0; i < n; ++i)
        all_zero[i] = {0, NatInf(0)};
    all_zero[n] = {1, bound};
    m.edges.push_back({0, 1, std::move(all_zero), {}});
    return m;
}

namespace {

// Per-process phases of the lock protocol.
enum Phase : std::uint32_t { Idle = 0, Req = 1, Wait = 2, Cs = 3 };

const char* phase_name(std::uint32_t p)
{
    switch (p) {
    case Idle: return "idle";
    case Req: return "req";
    case Wait: return "wait";
    default: return "cs";
    }
}

} // namespace

TimedAutomaton gen_fischer(ClockValue k)
{
    if (k < 2)
        throw std::invalid_argument("gen_fischer: k must be at least 2");

    TimedAutomaton m;
    m.clocks = {"x1", "x2"};

    // Product location (phase1, phase2, id); id is the shared lock word.
    auto loc = [](std::uint32_t p1, std::uint32_t p2, std::uint32_t id) {
        return LocationIndex((p1 * 4 + p2) * 3 + id);
    };
    for (std::uint32_t p1 = 0; p1 < 4; ++p1)
        for (std::uint32_t p2 = 0; p2 < 4; ++p2)
            for (std::uint32_t id = 0; id < 3; ++id)
                m.locations.push_back(std::string(phase_name(p1)) + "_" + phase_name(p2) + "_"
                                      + std::to_string(id));
    const LocationIndex violation = LocationIndex(m.locations.size());
    m.locations.push_back("violation");
    m.initial = loc(Idle, Idle, 0);

    const NatInf inf = NatInf::inf();
    const TimeInterval write_window{0, NatInf(k - 1)};
    const TimeInterval read_delay{k, inf};

    // One interleaved step of the process owning clock x (index me, lock
    // word value mine). The other process's phase is untouched.
    for (std::uint32_t p1 = 0; p1 < 4; ++p1) {
        for (std::uint32_t p2 = 0; p2 < 4; ++p2) {
            for (std::uint32_t id = 0; id < 3; ++id) {
                const LocationIndex src = loc(p1, p2, id);
                auto step = [&](std::uint32_t phase, std::uint32_t other, ClockIndex me,
                                std::uint32_t mine, auto make_target) {
                    if (phase == Idle && id == 0)
                        m.edges.push_back({src, make_target(Req, 0), guard_over(2, {}), {me}});
                    if (phase == Req)
                        m.edges.push_back({src, make_target(Wait, mine),
                                           guard_over(2, {{me, write_window}}),
                                           {me}});
                    if (phase == Wait && id == mine) {
                        const LocationIndex tgt =
                            other == Cs ? violation : make_target(Cs, mine);
                        m.edges.push_back({src, tgt, guard_over(2, {{me, read_delay}}), {}});
                    }
                    if (phase == Wait && id == 0)
                        m.edges.push_back({src, make_target(Req, 0), guard_over(2, {}), {me}});
                    if (phase == Cs)
                        m.edges.push_back({src, make_target(Idle, 0), guard_over(2, {}), {me}});
                };
                step(p1, p2, 0, 1, [&](std::uint32_t ph, std::uint32_t nid) {
                    return loc(ph, p2, nid);
                });
                step(p2, p1, 1, 2, [&](std::uint32_t ph, std::uint32_t nid) {
                    return loc(p1, ph, nid);
                });
            }
        }
    }
    return m;
}

namespace {

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n)
{
    assert(n > 0);
    return rng() % n;
}

bool chance(std::mt19937_64& rng, double prob)
{
    return double(rng() >> 11) * 0x1.0p-53 < prob;
}

TimedAutomaton gen_random_impl(const RandomModelParams& p, std::mt19937_64& rng)
{
    if (p.clocks < 1 || p.clocks > 4)
        throw std::invalid_argument("gen_random: clocks must be in 1..4");
    if (p.locations < 2 || p.locations > 8)
        throw std::invalid_argument("gen_random: locations must be in 2..8");
    if (p.max_bound > 6)
        throw std::invalid_argument("gen_random: max_bound must be at most 6");
    if (p.edges > 4096)
        throw std::invalid_argument("gen_random: too many edges");
    if (p.reset_prob < 0.0 || p.reset_prob > 1.0 || p.guard_density < 0.0
        || p.guard_density > 1.0)
        throw std::invalid_argument("gen_random: probabilities must be in [0, 1]");

    TimedAutomaton m;
    for (std::uint32_t c = 1; c <= p.clocks; ++c)
        m.clocks.push_back("x" + std::to_string(c));
    for (std::uint32_t l = 0; l < p.locations; ++l)
        m.locations.push_back("l" + std::to_string(l));
    m.initial = 0;

    for (std::uint32_t e = 0; e < p.edges; ++e) {
        Edge edge;
        edge.from = LocationIndex(next_below(rng, p.locations));
        edge.to = LocationIndex(next_below(rng, p.locations));
        edge.guard.assign(p.clocks, TimeInterval{});

        auto constrain = [&](std::size_t c) {
            TimeInterval iv;
            iv.lower = ClockValue(next_below(rng, std::uint64_t(p.max_bound) + 1));
            if (chance(rng, 0.5))
                iv.upper = NatInf::inf();
            else
                iv.upper = NatInf(iv.lower + next_below(rng, p.max_bound - iv.lower + 1));
            edge.guard[c] = iv;
        };

        bool any = false;
        for (std::size_t c = 0; c < p.clocks; ++c) {
            if (chance(rng, p.guard_density)) {
                constrain(c);
                any = true;
            }
        }
        if (p.guard_density > 0.0 && !any)
            constrain(next_below(rng, p.clocks));

        for (std::size_t c = 0; c < p.clocks; ++c)
            if (chance(rng, p.reset_prob))
                edge.reset.push_back(ClockIndex(c));

        m.edges.push_back(std::move(edge));
    }
    return m;
}

} // namespace

TimedAutomaton gen_random(const RandomModelParams& params)
{
    std::mt19937_64 rng(params.seed);
    return gen_random_impl(params, rng);
}

std::pair<TimedAutomaton, LocationIndex> gen_random_with_goal(const RandomModelParams& params)
{
    std::mt19937_64 rng(params.seed);
    TimedAutomaton m = gen_random_impl(params, rng);
    const LocationIndex goal = LocationIndex(1 + next_below(rng, params.locations - 1));
    return {std::move(m), goal};
}

} // namespace tdart
