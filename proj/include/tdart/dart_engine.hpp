#pragma once

#include "tdart/engine.hpp"
#include "tdart/model.hpp"
#include "tdart/nat.hpp"
#include "tdart/semantics.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tdart {

// A time dart covers a whole delay ray through one anchor valuation: the
// delays in [w, p) are still waiting to be explored, those in [p, inf) have
// been passed already. The anchor always has at least one zero clock.
struct TimeDart {
    ClockValuation anchor;
    ClockValue w = 0; // waiting distance
    NatInf p;         // passed distance, w <= p

    friend bool operator==(const TimeDart&, const TimeDart&) = default;
};

// Concrete valuations a dart still has to explore, anchor + d for
// d in [w, min(p, cutoff)).
std::vector<ClockValuation> waiting_points(const TimeDart& dart, ClockValue cutoff);

// Concrete valuations a dart has already explored, anchor + d for
// d in [p, cutoff).
std::vector<ClockValuation> passed_points(const TimeDart& dart, ClockValue cutoff);

// Delay window in which an edge guard holds along a dart's ray. start is
// the earliest delay worth considering (never below w); end is the latest
// delay any upper bound admits, unbounded when every upper bound is.
// end is signed: a guard already violated for good yields end < start.
struct SuccessorWindow {
    ClockValue start = 0;
    std::optional<std::int64_t> end; // nullopt = unbounded

    bool enabled(NatInf p) const
    {
        return NatInf(start) < p && (!end || static_cast<std::int64_t>(start) <= *end);
    }

    friend bool operator==(const SuccessorWindow&, const SuccessorWindow&) = default;
};

SuccessorWindow successor_window(const ClockValuation& anchor, ClockValue w, const Guard& g);

enum class AddOutcome { GoalHit, Stored };

// The dart engine's entire search state: (location, anchor) -> (w, p),
// plus a queue of keys whose waiting range is nonempty. Keys sit in the
// queue at most once; a key re-dirtied by a later merge is re-enqueued
// once its flag is clear again.
class PassedWaitingList {
public:
    struct Key {
        LocationIndex location = 0;
        ClockValuation anchor;

        friend bool operator==(const Key&, const Key&) = default;
    };

    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };

    struct Entry {
        ClockValue w = 0;
        NatInf p;
        bool queued = false;
    };

    struct AddResult {
        AddOutcome outcome = AddOutcome::Stored;
        bool inserted = false;       // key was absent before the call
        ClockValue prev_w = 0;       // pre-merge values, valid when an
        NatInf prev_p;               // existing entry was merged into
        ClockValue new_w = 0;
        NatInf new_p;
    };

    // Store or min-merge a dart; a goal location short-circuits without
    // touching the structure. Counts every call as a discovery.
    AddResult add(LocationIndex loc, const ClockValuation& anchor, ClockValue w, NatInf p,
                  LocationIndex goal);

    // pw(key) := (w, w), marking every delay from w on as passed.
    void mark_explored(const Key& key, ClockValue w);

    std::optional<std::pair<ClockValue, NatInf>> lookup(LocationIndex loc,
                                                        const ClockValuation& anchor) const;

    // Pop the next queued key (front for Fifo, back for Lifo) and clear its
    // flag. Returns nothing when the queue is empty. The caller re-checks
    // w < p: merges since enqueue time may have gone stale.
    std::optional<Key> pop_dirty(SearchOrder order);

    std::size_t size() const { return entries_.size(); }
    std::uint64_t discovered() const { return discovered_; }
    bool queue_empty() const { return dirty_.empty(); }

    const std::unordered_map<Key, Entry, KeyHash>& entries() const { return entries_; }

    // Number of entries violating the list invariant: anchors need a zero
    // clock and entries <= mc + 1, distances need w <= p, w <= mc and
    // p <= mc unless infinite.
    std::uint64_t count_invariant_violations(ClockValue mc) const;

private:
    std::unordered_map<Key, Entry, KeyHash> entries_;
    std::deque<Key> dirty_;
    std::uint64_t discovered_ = 0;
};

// One dart successor emission: the add call an edge asks for.
struct DartEmit {
    LocationIndex location = 0;
    ClockValuation anchor;
    ClockValue w = 0;
    NatInf p;

    friend bool operator==(const DartEmit&, const DartEmit&) = default;
};

// Expand one picked dart (anchor, w, p) at location from: for every
// outgoing edge whose window is enabled, either shift the anchor along the
// ray (no resets) or fan out one anchor per relevant delay (with resets).
// Pure successor enumeration; storing and goal testing stay with the
// caller. mc is passed explicitly so single-edge fragments can be driven
// under the constant of a larger model.
std::vector<DartEmit> dart_successors(const ValidatedModel& model, ClockValue mc,
                                      LocationIndex from, const ClockValuation& anchor,
                                      ClockValue w, NatInf p);

struct DartTraceEvent {
    std::uint64_t iteration = 0;
    LocationIndex location = 0;
    const ClockValuation& anchor;
    const PassedWaitingList& pwl;
};

struct DartOptions {
    SearchOrder order = SearchOrder::Fifo;
    ReachLimits limits{};
    // Called after each completed iteration with the picked key and the
    // list state the iteration left behind.
    std::function<void(const DartTraceEvent&)> trace;
    // Called after every mutating add with the stored post-state.
    std::function<void(LocationIndex, const ClockValuation&, ClockValue, NatInf)> on_store;
    // Re-validate the whole list after every mutation instead of only the
    // touched entry. Quadratic; meant for small models under test.
    bool paranoid = false;
};

struct DartRun {
    ReachResult result;
    PassedWaitingList pwl; // final list state
    std::uint64_t invariant_violations = 0;
};

DartRun run_darts(const ValidatedModel& model, LocationIndex goal, const DartOptions& options = {});

ReachResult reach_darts(const ValidatedModel& model, LocationIndex goal,
                        SearchOrder order = SearchOrder::Fifo, const ReachLimits& limits = {});

// "iter=<k> picked=<loc>,<anchor> pw={...}" with entries sorted by location
// index, then anchor.
std::string render_trace_line(const DartTraceEvent& event, const ValidatedModel& model);

} // namespace tdart
