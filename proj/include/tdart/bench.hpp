#pragma once

#include "tdart/engine.hpp"
#include "tdart/model.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tdart {

struct BenchRow {
    std::string model;
    std::uint64_t param = 0;
    std::string engine;            // "naive" or "darts"
    std::optional<bool> reachable; // empty when the run was cut short
    std::uint64_t discovered = 0;
    std::uint64_t stored = 0;
    std::uint64_t time_ms = 0;
    std::string status; // "ok", "timeout" or "oom-cap"
};

std::string csv_header();
std::string to_csv(const BenchRow& row);

// One benchmark cell: model construction is deferred into the cell so
// parallel runners can build their own copies, and so setup time stays out
// of the measurement.
struct BenchCell {
    std::string model_name;
    std::uint64_t param = 0;
    std::string engine;
    std::function<ValidatedModel()> make_model;
    std::string goal;
};

BenchRow run_cell(const BenchCell& cell, const ReachLimits& limits);

// Run cells and hand each finished row to sink, in cell order. jobs > 1
// runs up to that many cells concurrently; rows still arrive in order.
void run_bench(const std::vector<BenchCell>& cells, const ReachLimits& limits, std::size_t jobs,
               const std::function<void(const BenchRow&)>& sink);

} // namespace tdart
