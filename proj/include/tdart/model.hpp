#pragma once

#include "tdart/nat.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tdart {

using ClockIndex = std::uint32_t;
using LocationIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;
using ClockValue = std::uint32_t;

// Closed interval [lower, upper], upper possibly infinite. Guards are built
// exclusively from these, so every constraint in a model is nonstrict.
struct TimeInterval {
    ClockValue lower = 0;
    NatInf upper = NatInf::inf();

    bool contains(ClockValue v) const { return v >= lower && NatInf(v) <= upper; }
    bool is_unconstrained() const { return lower == 0 && upper.is_inf(); }

    friend bool operator==(const TimeInterval&, const TimeInterval&) = default;
};

// Total guard: one interval per clock, indexed by ClockIndex. Clocks a guard
// does not mention carry [0, inf).
using Guard = std::vector<TimeInterval>;

struct Edge {
    LocationIndex from = 0;
    LocationIndex to = 0;
    Guard guard;
    std::vector<ClockIndex> reset; // sorted, duplicate-free

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct TimedAutomaton {
    std::vector<std::string> clocks;
    std::vector<std::string> locations;
    LocationIndex initial = 0;
    std::vector<Edge> edges; // array position is the exploration ordinal

    std::optional<ClockIndex> find_clock(std::string_view name) const;
    std::optional<LocationIndex> find_location(std::string_view name) const;

    friend bool operator==(const TimedAutomaton&, const TimedAutomaton&) = default;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

// Expand a sparse clock->interval mapping into a total guard over
// clock_count clocks. Entries must use in-range clock indices; a clock
// listed twice keeps the last interval given for it.
Guard normalize_guard(const std::vector<std::pair<ClockIndex, TimeInterval>>& partial,
                      std::size_t clock_count);

// Largest finite constant appearing in any guard bound; 0 when no guard
// constrains anything.
ClockValue max_constant(const TimedAutomaton& model);

// Structurally checked automaton plus the data both engines derive from it:
// the max constant and a per-location edge index, ordinal order preserved.
class ValidatedModel {
public:
    const TimedAutomaton& automaton() const { return ta_; }
    ClockValue max_constant() const { return mc_; }
    std::size_t clock_count() const { return ta_.clocks.size(); }
    std::size_t location_count() const { return ta_.locations.size(); }

    std::span<const EdgeIndex> edges_from(LocationIndex loc) const
    {
        return {out_edges_.data() + out_offsets_[loc],
                out_edges_.data() + out_offsets_[loc + 1]};
    }

    const Edge& edge(EdgeIndex e) const { return ta_.edges[e]; }
    const std::string& location_name(LocationIndex l) const { return ta_.locations[l]; }
    const std::string& clock_name(ClockIndex c) const { return ta_.clocks[c]; }

private:
    friend ValidatedModel validate(TimedAutomaton model);

    TimedAutomaton ta_;
    ClockValue mc_ = 0;
    std::vector<EdgeIndex> out_edges_;
    std::vector<std::uint32_t> out_offsets_;
};

// Check referential integrity, name uniqueness, guard totality and interval
// sanity. Throws ValidationError listing every violation found.
ValidatedModel validate(TimedAutomaton model);

} // namespace tdart
