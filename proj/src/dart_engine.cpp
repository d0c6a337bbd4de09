#include "tdart/dart_engine.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace tdart {

namespace {

using Clock = std::chrono::steady_clock;

bool anchor_ok(const ClockValuation& anchor, ClockValue mc)
{
    bool has_zero = false;
    for (ClockValue x : anchor) {
        if (x == 0)
            has_zero = true;
        if (x > std::uint64_t(mc) + 1)
            return false;
    }
    return has_zero;
}

bool entry_ok(ClockValue w, NatInf p, ClockValue mc)
{
    return NatInf(w) <= p && w <= mc && (p.is_inf() || p <= NatInf(mc));
}

} // namespace

std::vector<ClockValuation> waiting_points(const TimeDart& dart, ClockValue cutoff)
{
    std::vector<ClockValuation> out;
    const NatInf stop = min(dart.p, NatInf(cutoff));
    for (std::uint64_t d = dart.w; NatInf(d) < stop; ++d)
        out.push_back(delay(dart.anchor, static_cast<ClockValue>(d)));
    return out;
}

std::vector<ClockValuation> passed_points(const TimeDart& dart, ClockValue cutoff)
{
    std::vector<ClockValuation> out;
    if (dart.p.is_inf())
        return out;
    for (std::uint64_t d = dart.p.value(); d < cutoff; ++d)
        out.push_back(delay(dart.anchor, static_cast<ClockValue>(d)));
    return out;
}

SuccessorWindow successor_window(const ClockValuation& anchor, ClockValue w, const Guard& g)
{
    assert(anchor.size() == g.size());
    std::int64_t start = w;
    std::optional<std::int64_t> end;
    for (std::size_t i = 0; i < g.size(); ++i) {
        start = std::max(start, std::int64_t(g[i].lower) - std::int64_t(anchor[i]));
        if (!g[i].upper.is_inf()) {
            const std::int64_t hi = std::int64_t(g[i].upper.value()) - std::int64_t(anchor[i]);
            end = end ? std::min(*end, hi) : hi;
        }
    }
    return {static_cast<ClockValue>(start), end};
}

std::size_t PassedWaitingList::KeyHash::operator()(const Key& k) const
{
    std::uint64_t h = 0xcbf29ce484222325ULL ^ (std::uint64_t(k.location) * 0x9e3779b97f4a7c15ULL);
    for (ClockValue x : k.anchor) {
        h ^= x;
        h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
}

PassedWaitingList::AddResult PassedWaitingList::add(LocationIndex loc,
                                                    const ClockValuation& anchor, ClockValue w,
                                                    NatInf p, LocationIndex goal)
{
    ++discovered_;
    AddResult r;
    r.new_w = w;
    r.new_p = p;
    if (loc == goal) {
        r.outcome = AddOutcome::GoalHit;
        return r;
    }

    auto [it, fresh] = entries_.try_emplace(Key{loc, anchor}, Entry{w, p, false});
    Entry& e = it->second;
    r.inserted = fresh;
    if (!fresh) {
        r.prev_w = e.w;
        r.prev_p = e.p;
        e.w = std::min(e.w, w);
        e.p = min(e.p, p);
        r.new_w = e.w;
        r.new_p = e.p;
    }
    if (NatInf(e.w) < e.p && !e.queued) {
        e.queued = true;
        dirty_.push_back(it->first);
    }
    return r;
}

void PassedWaitingList::mark_explored(const Key& key, ClockValue w)
{
    auto it = entries_.find(key);
    assert(it != entries_.end());
    it->second.w = w;
    it->second.p = NatInf(w);
}

std::optional<std::pair<ClockValue, NatInf>> PassedWaitingList::lookup(
    LocationIndex loc, const ClockValuation& anchor) const
{
    auto it = entries_.find(Key{loc, anchor});
    if (it == entries_.end())
        return std::nullopt;
    return std::make_pair(it->second.w, it->second.p);
}

std::optional<PassedWaitingList::Key> PassedWaitingList::pop_dirty(SearchOrder order)
{
    if (dirty_.empty())
        return std::nullopt;
    Key key;
    if (order == SearchOrder::Fifo) {
        key = std::move(dirty_.front());
        dirty_.pop_front();
    } else {
        key = std::move(dirty_.back());
        dirty_.pop_back();
    }
    auto it = entries_.find(key);
    assert(it != entries_.end());
    it->second.queued = false;
    return key;
}

std::uint64_t PassedWaitingList::count_invariant_violations(ClockValue mc) const
{
    std::uint64_t bad = 0;
    for (const auto& [key, e] : entries_)
        if (!anchor_ok(key.anchor, mc) || !entry_ok(e.w, e.p, mc))
            ++bad;
    return bad;
}

std::vector<DartEmit> dart_successors(const ValidatedModel& model, ClockValue mc,
                                      LocationIndex from, const ClockValuation& anchor,
                                      ClockValue w, NatInf p)
{
    std::vector<DartEmit> out;
    for (EdgeIndex ei : model.edges_from(from)) {
        const Edge& e = model.edge(ei);
        const SuccessorWindow win = successor_window(anchor, w, e.guard);
        if (!win.enabled(p))
            continue;
        assert(win.start <= mc); // w <= mc and every lower bound <= mc

        if (e.reset.empty()) {
            // Shift the anchor: saturate along the ray at delay start, then
            // step back so the zero clock stays zero.
            ClockValuation shifted(anchor.size());
            for (std::size_t i = 0; i < anchor.size(); ++i)
                shifted[i] = bounded_add(anchor[i], win.start, mc) - win.start;
            out.push_back({e.to, std::move(shifted), win.start, NatInf::inf()});
        } else {
            // Past stop every unreset clock is saturated, so later delays
            // repeat the same successor anchors.
            std::optional<std::uint64_t> min_unreset;
            for (std::size_t i = 0; i < anchor.size(); ++i) {
                if (std::binary_search(e.reset.begin(), e.reset.end(), ClockIndex(i)))
                    continue;
                min_unreset = min_unreset ? std::min(*min_unreset, std::uint64_t(anchor[i]))
                                          : anchor[i];
            }
            std::uint64_t stop = win.start;
            if (min_unreset && std::uint64_t(mc) + 1 > *min_unreset)
                stop = std::max<std::uint64_t>(stop, std::uint64_t(mc) + 1 - *min_unreset);

            std::uint64_t last = stop;
            if (win.end)
                last = std::min<std::uint64_t>(last, static_cast<std::uint64_t>(*win.end));
            if (!p.is_inf())
                last = std::min<std::uint64_t>(last, p.value() - 1);

            for (std::uint64_t n = win.start; n <= last; ++n) {
                ClockValuation a = bounded_add(anchor, static_cast<ClockValue>(n), mc);
                for (ClockIndex r : e.reset)
                    a[r] = 0;
                out.push_back({e.to, std::move(a), 0, NatInf::inf()});
            }
        }
    }
    return out;
}

DartRun run_darts(const ValidatedModel& model, LocationIndex goal, const DartOptions& options)
{
    const auto start = Clock::now();
    const ClockValue mc = model.max_constant();

    DartRun run;
    PassedWaitingList& pwl = run.pwl;
    ReachResult& res = run.result;

    auto finish = [&](bool reachable, RunStatus status) {
        res.reachable = reachable;
        res.status = status;
        res.discovered = pwl.discovered();
        res.stored = pwl.size();
        res.elapsed = Clock::now() - start;
    };

    auto note_mutation = [&](const PassedWaitingList::AddResult& ar, LocationIndex loc,
                             const ClockValuation& anchor) {
        bool ok = anchor_ok(anchor, mc) && entry_ok(ar.new_w, ar.new_p, mc);
        if (!ar.inserted && (ar.new_w > ar.prev_w || ar.new_p > ar.prev_p))
            ok = false; // a merge may never widen the waiting range upward
        if (!ok)
            ++run.invariant_violations;
        if (options.paranoid)
            run.invariant_violations += pwl.count_invariant_violations(mc);
        if (options.on_store)
            options.on_store(loc, anchor, ar.new_w, ar.new_p);
    };

    {
        const ClockValuation origin(model.clock_count(), 0);
        auto ar = pwl.add(model.automaton().initial, origin, 0, NatInf::inf(), goal);
        if (ar.outcome == AddOutcome::GoalHit) {
            finish(true, RunStatus::Complete);
            return run;
        }
        note_mutation(ar, model.automaton().initial, origin);
    }

    while (auto picked = pwl.pop_dirty(options.order)) {
        if ((res.iterations & 63) == 0 && Clock::now() - start >= options.limits.timeout) {
            finish(false, RunStatus::Timeout);
            return run;
        }
        if (pwl.size() > options.limits.max_stored) {
            finish(false, RunStatus::StoredCap);
            return run;
        }

        const auto wp = pwl.lookup(picked->location, picked->anchor);
        assert(wp.has_value());
        const auto [w, p] = *wp;
        if (!(NatInf(w) < p))
            continue; // stale: a merge since enqueue time emptied the range
        ++res.iterations;

        pwl.mark_explored(*picked, w);

        // Edge scan works with w and p as captured at pick time; the stored
        // entry already reads (w, w).
        for (DartEmit& em : dart_successors(model, mc, picked->location, picked->anchor, w, p)) {
            auto ar = pwl.add(em.location, em.anchor, em.w, em.p, goal);
            if (ar.outcome == AddOutcome::GoalHit) {
                finish(true, RunStatus::Complete);
                return run;
            }
            note_mutation(ar, em.location, em.anchor);
        }

        if (options.trace)
            options.trace(DartTraceEvent{res.iterations, picked->location, picked->anchor, pwl});
    }

    finish(false, RunStatus::Complete);
    return run;
}

ReachResult reach_darts(const ValidatedModel& model, LocationIndex goal, SearchOrder order,
                        const ReachLimits& limits)
{
    DartOptions options;
    options.order = order;
    options.limits = limits;
    return run_darts(model, goal, options).result;
}

namespace {

void write_tuple(std::ostream& os, const ClockValuation& v)
{
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ',';
        os << v[i];
    }
    os << ')';
}

} // namespace

std::string render_trace_line(const DartTraceEvent& event, const ValidatedModel& model)
{
    std::ostringstream os;
    os << "iter=" << event.iteration << " picked=" << model.location_name(event.location) << ',';
    write_tuple(os, event.anchor);

    std::map<std::pair<LocationIndex, ClockValuation>, std::pair<ClockValue, NatInf>> sorted;
    for (const auto& [key, e] : event.pwl.entries())
        sorted.emplace(std::make_pair(key.location, key.anchor), std::make_pair(e.w, e.p));

    os << " pw={";
    bool first = true;
    for (const auto& [key, wp] : sorted) {
        if (!first)
            os << ", ";
        first = false;
        os << model.location_name(key.first) << ',';
        write_tuple(os, key.second);
        os << "->(" << wp.first << ',' << wp.second << ')';
    }
    os << '}';
    return os.str();
}

} // namespace tdart
