#pragma once

#include "tdart/model.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace tdart {

// Dense clock valuation, one value per ClockIndex.
using ClockValuation = std::vector<ClockValue>;

struct Configuration {
    LocationIndex location = 0;
    ClockValuation valuation;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Plain pointwise delay, no saturation.
ClockValuation delay(const ClockValuation& v, ClockValue d);

// Addition saturating just above the max constant: n (+) d = n + d when the
// sum stays <= mc, and mc + 1 otherwise. Total on naturals, so values
// already past the cap stay at mc + 1.
ClockValue bounded_add(ClockValue n, ClockValue d, ClockValue mc);
ClockValuation bounded_add(const ClockValuation& v, ClockValue d, ClockValue mc);

ClockValuation reset(const ClockValuation& v, std::span<const ClockIndex> clocks);

bool satisfies(const ClockValuation& v, const Guard& g);

// Valuations agree on every clock at or below mc and are jointly above mc
// elsewhere. Guards with constants <= mc cannot tell such valuations apart.
bool mc_equivalent(const ClockValuation& a, const ClockValuation& b, ClockValue mc);

// Canonical representative of the mc-equivalence class: entries above mc
// collapse to mc + 1. Maps any valuation into the bounded state space.
ClockValuation mc_canonical(const ClockValuation& v, ClockValue mc);

// All one-switch successors of c, paired with the edge taken, in edge
// ordinal order.
std::vector<std::pair<EdgeIndex, Configuration>> switch_successors(const Configuration& c,
                                                                   const ValidatedModel& model);

struct ValuationHash {
    std::size_t operator()(const ClockValuation& v) const;
};

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const;
};

} // namespace tdart
