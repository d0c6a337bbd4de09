#include "tdart/bench.hpp"

#include "tdart/dart_engine.hpp"
#include "tdart/naive_engine.hpp"

#include <chrono>
#include <deque>
#include <future>
#include <sstream>
#include <stdexcept>

namespace tdart {

std::string csv_header() { return "model,param,engine,reachable,discovered,stored,time_ms,status"; }

std::string to_csv(const BenchRow& row)
{
    std::ostringstream os;
    os << row.model << ',' << row.param << ',' << row.engine << ',';
    if (row.reachable)
        os << (*row.reachable ? "true" : "false");
    os << ',' << row.discovered << ',' << row.stored << ',' << row.time_ms << ',' << row.status;
    return os.str();
}

BenchRow run_cell(const BenchCell& cell, const ReachLimits& limits)
{
    const ValidatedModel model = cell.make_model();
    const auto goal = model.automaton().find_location(cell.goal);
    if (!goal)
        throw std::invalid_argument("bench: goal '" + cell.goal + "' not in model '"
                                    + cell.model_name + "'");

    ReachResult res;
    if (cell.engine == "naive")
        res = reach_naive(model, *goal, SearchOrder::Fifo, limits);
    else if (cell.engine == "darts")
        res = reach_darts(model, *goal, SearchOrder::Fifo, limits);
    else
        throw std::invalid_argument("bench: unknown engine '" + cell.engine + "'");

    BenchRow row;
    row.model = cell.model_name;
    row.param = cell.param;
    row.engine = cell.engine;
    row.discovered = res.discovered;
    row.stored = res.stored;
    row.time_ms = std::uint64_t(
        std::chrono::duration_cast<std::chrono::milliseconds>(res.elapsed).count());
    switch (res.status) {
    case RunStatus::Complete:
        row.status = "ok";
        row.reachable = res.reachable;
        break;
    case RunStatus::Timeout:
        row.status = "timeout";
        break;
    case RunStatus::StoredCap:
        row.status = "oom-cap";
        break;
    }
    return row;
}

void run_bench(const std::vector<BenchCell>& cells, const ReachLimits& limits, std::size_t jobs,
               const std::function<void(const BenchRow&)>& sink)
{
    if (jobs <= 1) {
        for (const BenchCell& cell : cells)
            sink(run_cell(cell, limits));
        return;
    }

    // Sliding window of async cells; consuming in launch order keeps the
    // row order deterministic while later cells run concurrently.
    std::deque<std::future<BenchRow>> window;
    for (const BenchCell& cell : cells) {
        if (window.size() == jobs) {
            sink(window.front().get());
            window.pop_front();
        }
        window.push_back(std::async(std::launch::async,
                                    [&cell, &limits] { return run_cell(cell, limits); }));
    }
    while (!window.empty()) {
        sink(window.front().get());
        window.pop_front();
    }
}

} // namespace tdart
