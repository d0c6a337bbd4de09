#include "tdart/model_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

namespace tdart {

namespace {

using nlohmann::json;

// Upper cap on guard bounds; keeps mc + 1 inside ClockValue.
constexpr std::uint64_t kMaxBound = std::numeric_limits<ClockValue>::max() - 1;

[[noreturn]] void fail(const std::string& what) { throw ParseError("model parse: " + what); }

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& where)
{
    for (const auto& item : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* k) { return item.key() == k; })
            == allowed.end())
            fail("unknown field '" + item.key() + "' in " + where);
    }
}

std::vector<std::string> parse_name_array(const json& arr, const std::string& what)
{
    if (!arr.is_array())
        fail("'" + what + "' must be an array");
    std::vector<std::string> names;
    std::unordered_set<std::string> seen;
    for (const auto& item : arr) {
        if (!item.is_string() || item.get<std::string>().empty())
            fail("'" + what + "' entries must be nonempty strings");
        auto name = item.get<std::string>();
        if (!seen.insert(name).second)
            fail("duplicate " + what + " name '" + name + "'");
        names.push_back(std::move(name));
    }
    return names;
}

ClockValue parse_bound(const json& v, const std::string& where)
{
    if (!v.is_number_unsigned())
        fail("bound in " + where + " must be a natural number");
    const std::uint64_t raw = v.get<std::uint64_t>();
    if (raw > kMaxBound)
        fail("bound in " + where + " exceeds " + std::to_string(kMaxBound));
    return static_cast<ClockValue>(raw);
}

} // namespace

TimedAutomaton load_model(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model parse: ") + e.what());
    }

    if (!doc.is_object())
        fail("document must be an object");
    require_keys(doc, {"clocks", "locations", "initial", "edges"}, "document");
    for (const char* key : {"clocks", "locations", "initial", "edges"})
        if (!doc.contains(key))
            fail(std::string("missing field '") + key + "'");

    TimedAutomaton model;
    model.clocks = parse_name_array(doc["clocks"], "clock");
    model.locations = parse_name_array(doc["locations"], "location");

    auto resolve_location = [&](const json& v, const std::string& where) {
        if (!v.is_string())
            fail(where + " must be a location name");
        auto loc = model.find_location(v.get<std::string>());
        if (!loc)
            fail("unknown location '" + v.get<std::string>() + "' in " + where);
        return *loc;
    };

    model.initial = resolve_location(doc["initial"], "'initial'");

    if (!doc["edges"].is_array())
        fail("'edges' must be an array");

    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
        const json& ed = doc["edges"][i];
        const std::string at = "edge " + std::to_string(i);
        if (!ed.is_object())
            fail(at + " must be an object");
        require_keys(ed, {"from", "to", "guard", "reset"}, at);
        for (const char* key : {"from", "to"})
            if (!ed.contains(key))
                fail(at + " is missing '" + std::string(key) + "'");

        Edge edge;
        edge.from = resolve_location(ed["from"], at + " 'from'");
        edge.to = resolve_location(ed["to"], at + " 'to'");

        std::vector<std::pair<ClockIndex, TimeInterval>> partial;
        if (ed.contains("guard")) {
            if (!ed["guard"].is_object())
                fail(at + " 'guard' must be an object");
            for (const auto& item : ed["guard"].items()) {
                auto clock = model.find_clock(item.key());
                if (!clock)
                    fail("unknown clock '" + item.key() + "' in " + at + " guard");
                const json& iv = item.value();
                if (!iv.is_array() || iv.size() != 2)
                    fail(at + " guard for '" + item.key() + "' must be [lower, upper]");
                TimeInterval interval;
                interval.lower = parse_bound(iv[0], at + " guard '" + item.key() + "'");
                if (iv[1].is_null())
                    interval.upper = NatInf::inf();
                else
                    interval.upper = parse_bound(iv[1], at + " guard '" + item.key() + "'");
                partial.emplace_back(*clock, interval);
            }
        }
        edge.guard = normalize_guard(partial, model.clocks.size());

        if (ed.contains("reset")) {
            if (!ed["reset"].is_array())
                fail(at + " 'reset' must be an array");
            for (const auto& item : ed["reset"]) {
                if (!item.is_string())
                    fail(at + " reset entries must be clock names");
                auto clock = model.find_clock(item.get<std::string>());
                if (!clock)
                    fail("unknown clock '" + item.get<std::string>() + "' in " + at + " reset");
                edge.reset.push_back(*clock);
            }
            std::sort(edge.reset.begin(), edge.reset.end());
            if (std::adjacent_find(edge.reset.begin(), edge.reset.end()) != edge.reset.end())
                fail(at + " reset lists a clock twice");
        }

        model.edges.push_back(std::move(edge));
    }

    return model;
}

std::string dump_model(const TimedAutomaton& model)
{
    json doc;
    doc["clocks"] = model.clocks;
    doc["locations"] = model.locations;
    doc["initial"] = model.locations[model.initial];

    json edges = json::array();
    for (const Edge& e : model.edges) {
        json ed;
        ed["from"] = model.locations[e.from];
        ed["to"] = model.locations[e.to];
        json guard = json::object();
        for (std::size_t c = 0; c < e.guard.size(); ++c) {
            const TimeInterval& iv = e.guard[c];
            if (iv.is_unconstrained())
                continue;
            guard[model.clocks[c]] =
                json::array({iv.lower, iv.upper.is_inf() ? json(nullptr) : json(iv.upper.value())});
        }
        if (!guard.empty())
            ed["guard"] = std::move(guard);
        if (!e.reset.empty()) {
            json reset = json::array();
            for (ClockIndex r : e.reset)
                reset.push_back(model.clocks[r]);
            ed["reset"] = std::move(reset);
        }
        edges.push_back(std::move(ed));
    }
    doc["edges"] = std::move(edges);

    return doc.dump(2) + "\n";
}

} // namespace tdart
