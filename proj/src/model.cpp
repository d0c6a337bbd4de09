#include "tdart/model.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace tdart {

std::optional<ClockIndex> TimedAutomaton::find_clock(std::string_view name) const
{
    for (std::size_t i = 0; i < clocks.size(); ++i)
        if (clocks[i] == name)
            return static_cast<ClockIndex>(i);
    return std::nullopt;
}

std::optional<LocationIndex> TimedAutomaton::find_location(std::string_view name) const
{
    for (std::size_t i = 0; i < locations.size(); ++i)
        if (locations[i] == name)
            return static_cast<LocationIndex>(i);
    return std::nullopt;
}

namespace {

std::string join_violations(const std::vector<std::string>& violations)
{
    std::ostringstream os;
    os << "invalid model:";
    for (const auto& v : violations)
        os << "\n  " << v;
    return os.str();
}

} // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations))
{
}

Guard normalize_guard(const std::vector<std::pair<ClockIndex, TimeInterval>>& partial,
                      std::size_t clock_count)
{
    Guard g(clock_count);
    for (const auto& [clock, interval] : partial) {
        assert(clock < clock_count);
        g[clock] = interval;
    }
    return g;
}

ClockValue max_constant(const TimedAutomaton& model)
{
    std::uint64_t mc = 0;
    for (const Edge& e : model.edges) {
        for (const TimeInterval& iv : e.guard) {
            mc = std::max<std::uint64_t>(mc, iv.lower);
            if (!iv.upper.is_inf())
                mc = std::max(mc, iv.upper.value());
        }
    }
    return static_cast<ClockValue>(mc);
}

ValidatedModel validate(TimedAutomaton model)
{
    std::vector<std::string> violations;
    auto report = [&](std::string msg) { violations.push_back(std::move(msg)); };

    if (model.clocks.empty())
        report("model has no clocks");
    if (model.locations.empty())
        report("model has no locations");

    auto check_unique = [&](const std::vector<std::string>& names, const char* what) {
        std::unordered_set<std::string_view> seen;
        for (const auto& n : names) {
            if (n.empty())
                report(std::string("empty ") + what + " name");
            if (!seen.insert(n).second)
                report(std::string("duplicate ") + what + " name '" + n + "'");
        }
    };
    check_unique(model.clocks, "clock");
    check_unique(model.locations, "location");

    if (model.initial >= model.locations.size())
        report("initial location index out of range");

    const std::size_t n_clocks = model.clocks.size();
    const std::size_t n_locations = model.locations.size();

    for (std::size_t i = 0; i < model.edges.size(); ++i) {
        const Edge& e = model.edges[i];
        const std::string at = "edge " + std::to_string(i);

        if (e.from >= n_locations)
            report(at + ": dangling source location");
        if (e.to >= n_locations)
            report(at + ": dangling target location");

        if (e.guard.size() != n_clocks) {
            report(at + ": guard covers " + std::to_string(e.guard.size()) + " of "
                   + std::to_string(n_clocks) + " clocks");
        } else {
            for (std::size_t c = 0; c < n_clocks; ++c) {
                const TimeInterval& iv = e.guard[c];
                if (!iv.upper.is_inf() && iv.upper < NatInf(iv.lower)) {
                    std::ostringstream os;
                    os << at << ": clock '" << model.clocks[c] << "' interval lower "
                       << iv.lower << " > upper " << iv.upper;
                    report(os.str());
                }
            }
        }

        for (ClockIndex r : e.reset)
            if (r >= n_clocks)
                report(at + ": reset of unknown clock index " + std::to_string(r));
        if (!std::is_sorted(e.reset.begin(), e.reset.end())
            || std::adjacent_find(e.reset.begin(), e.reset.end()) != e.reset.end())
            report(at + ": reset set not sorted and duplicate-free");
    }

    if (!violations.empty())
        throw ValidationError(std::move(violations));

    ValidatedModel vm;
    vm.mc_ = max_constant(model);
    vm.ta_ = std::move(model);

    // Bucket edges by source, keeping ordinal order within each bucket.
    const std::size_t n_loc = vm.ta_.locations.size();
    vm.out_offsets_.assign(n_loc + 1, 0);
    for (const Edge& e : vm.ta_.edges)
        ++vm.out_offsets_[e.from + 1];
    for (std::size_t l = 0; l < n_loc; ++l)
        vm.out_offsets_[l + 1] += vm.out_offsets_[l];
    vm.out_edges_.resize(vm.ta_.edges.size());
    std::vector<std::uint32_t> cursor(vm.out_offsets_.begin(), vm.out_offsets_.end() - 1);
    for (std::size_t i = 0; i < vm.ta_.edges.size(); ++i)
        vm.out_edges_[cursor[vm.ta_.edges[i].from]++] = static_cast<EdgeIndex>(i);

    return vm;
}

} // namespace tdart
