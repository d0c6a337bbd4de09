#pragma once

#include "tdart/model.hpp"
#include "tdart/nat.hpp"

#include <cstdint>
#include <utility>

namespace tdart {

// The 4-location, 2-clock cycle whose dart search needs exactly seven
// iterations; its l3 corner is unreachable because the x <= 1 window is
// gone by the time y >= 2 can hold.
TimedAutomaton gen_fig4();

// Scheduling ladder: clocks x1..xn each spin on a self-loop of period i,
// plus a never-reset clock y. The edge to Goal demands every xi be exactly
// 0 and y lie in [1, bound], so Goal is reachable iff lcm(1..n) <= bound.
TimedAutomaton gen_lcm(std::uint32_t n, NatInf bound);

// Two-process Fischer mutual exclusion, flattened: product locations carry
// both process phases and the shared lock variable. Writes are guarded by
// x <= k-1, reads wait for x >= k, so the "violation" location (both
// processes critical) stays unreachable while every constant scales with k.
TimedAutomaton gen_fischer(ClockValue k);

struct RandomModelParams {
    std::uint32_t clocks = 2;    // 1..4
    std::uint32_t locations = 4; // 2..8
    std::uint32_t edges = 6;
    ClockValue max_bound = 4; // <= 6
    double reset_prob = 0.3;
    double guard_density = 0.5;
    std::uint64_t seed = 0;
};

// Deterministic pseudo-random model: same params, same model, bit for bit.
TimedAutomaton gen_random(const RandomModelParams& params);

// Same stream as gen_random, continued by one draw picking a goal uniformly
// among the non-initial locations.
std::pair<TimedAutomaton, LocationIndex> gen_random_with_goal(const RandomModelParams& params);

} // namespace tdart
