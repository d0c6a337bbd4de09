#include "tdart/naive_engine.hpp"

#include <chrono>
#include <deque>
#include <unordered_map>

namespace tdart {

namespace {

using Clock = std::chrono::steady_clock;

} // namespace

ReachResult reach_naive(const ValidatedModel& model, LocationIndex goal, SearchOrder order,
                        const ReachLimits& limits)
{
    const auto start = Clock::now();
    const ClockValue mc = model.max_constant();

    ReachResult res;
    ConfigurationSet seen; // passed and waiting together
    std::deque<Configuration> waiting;

    auto finish = [&](bool reachable, RunStatus status) {
        res.reachable = reachable;
        res.status = status;
        res.stored = seen.size();
        res.elapsed = Clock::now() - start;
        return res;
    };

    // Membership first, then the goal test: goal configurations terminate
    // the search and are never stored.
    auto add = [&](Configuration&& c) -> bool {
        ++res.discovered;
        if (seen.contains(c))
            return false;
        if (c.location == goal)
            return true;
        waiting.push_back(c);
        seen.insert(std::move(c));
        return false;
    };

    if (add(Configuration{model.automaton().initial, ClockValuation(model.clock_count(), 0)}))
        return finish(true, RunStatus::Complete);

    while (!waiting.empty()) {
        if ((res.iterations & 63) == 0 && Clock::now() - start >= limits.timeout)
            return finish(false, RunStatus::Timeout);
        if (seen.size() > limits.max_stored)
            return finish(false, RunStatus::StoredCap);

        Configuration c;
        if (order == SearchOrder::Fifo) {
            c = std::move(waiting.front());
            waiting.pop_front();
        } else {
            c = std::move(waiting.back());
            waiting.pop_back();
        }
        ++res.iterations;

        for (auto& [edge, succ] : switch_successors(c, model)) {
            (void)edge;
            if (add(std::move(succ)))
                return finish(true, RunStatus::Complete);
        }
        if (add(Configuration{c.location, bounded_add(c.valuation, 1, mc)}))
            return finish(true, RunStatus::Complete);
    }

    return finish(false, RunStatus::Complete);
}

NatInf min_goal_delay(const ValidatedModel& model, LocationIndex goal, const ReachLimits& limits)
{
    const auto start = Clock::now();
    const ClockValue mc = model.max_constant();

    // 0-1 breadth-first search: switch steps are free, unit delays cost one.
    std::unordered_map<Configuration, std::uint64_t, ConfigurationHash> dist;
    std::deque<std::pair<Configuration, std::uint64_t>> queue;

    Configuration init{model.automaton().initial, ClockValuation(model.clock_count(), 0)};
    dist.emplace(init, 0);
    queue.emplace_back(std::move(init), 0);

    std::uint64_t pops = 0;
    while (!queue.empty()) {
        if ((pops++ & 63) == 0 && Clock::now() - start >= limits.timeout)
            throw ResourceLimitError("min_goal_delay: timeout");
        if (dist.size() > limits.max_stored)
            throw ResourceLimitError("min_goal_delay: stored cap exceeded");

        auto [c, d] = std::move(queue.front());
        queue.pop_front();
        if (d > dist.at(c))
            continue; // superseded by a cheaper path
        if (c.location == goal)
            return d;

        for (auto& [edge, succ] : switch_successors(c, model)) {
            (void)edge;
            auto [it, fresh] = dist.try_emplace(succ, d);
            if (fresh || it->second > d) {
                it->second = d;
                queue.emplace_front(std::move(succ), d);
            }
        }

        Configuration delayed{c.location, bounded_add(c.valuation, 1, mc)};
        auto [it, fresh] = dist.try_emplace(delayed, d + 1);
        if (fresh || it->second > d + 1) {
            it->second = d + 1;
            queue.emplace_back(std::move(delayed), d + 1);
        }
    }

    return NatInf::inf();
}

ConfigurationSet reachable_configurations(const ValidatedModel& model, const ReachLimits& limits)
{
    const auto start = Clock::now();
    const ClockValue mc = model.max_constant();

    ConfigurationSet seen;
    std::deque<Configuration> waiting;

    auto add = [&](Configuration&& c) {
        if (seen.insert(c).second)
            waiting.push_back(std::move(c));
    };

    add(Configuration{model.automaton().initial, ClockValuation(model.clock_count(), 0)});

    std::uint64_t pops = 0;
    while (!waiting.empty()) {
        if ((pops++ & 63) == 0 && Clock::now() - start >= limits.timeout)
            throw ResourceLimitError("reachable_configurations: timeout");
        if (seen.size() > limits.max_stored)
            throw ResourceLimitError("reachable_configurations: stored cap exceeded");

        Configuration c = std::move(waiting.front());
        waiting.pop_front();

        for (auto& [edge, succ] : switch_successors(c, model)) {
            (void)edge;
            add(std::move(succ));
        }
        add(Configuration{c.location, bounded_add(c.valuation, 1, mc)});
    }

    return seen;
}

} // namespace tdart
