#pragma once

#include "tdart/engine.hpp"
#include "tdart/model.hpp"
#include "tdart/nat.hpp"
#include "tdart/semantics.hpp"

#include <unordered_set>

namespace tdart {

using ConfigurationSet = std::unordered_set<Configuration, ConfigurationHash>;

// Explicit-state search over the bounded discrete semantics. Every popped
// configuration is expanded by its switch successors (edge ordinal order)
// and then by a unit delay; duplicates are dropped against one hash set
// holding passed and waiting configurations alike.
ReachResult reach_naive(const ValidatedModel& model, LocationIndex goal,
                        SearchOrder order = SearchOrder::Fifo, const ReachLimits& limits = {});

// Minimum accumulated delay over all runs reaching the goal location, inf
// when unreachable. Switch steps cost 0, unit delays cost 1. Throws
// ResourceLimitError when limits are hit.
NatInf min_goal_delay(const ValidatedModel& model, LocationIndex goal,
                      const ReachLimits& limits = {});

// Every configuration of the bounded semantics reachable from the initial
// one. Exhaustive reference enumeration; throws ResourceLimitError when
// limits are hit.
ConfigurationSet reachable_configurations(const ValidatedModel& model,
                                          const ReachLimits& limits = {});

} // namespace tdart
