#include "tdart/semantics.hpp"

namespace tdart {

ClockValuation delay(const ClockValuation& v, ClockValue d)
{
    ClockValuation out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] + d;
    return out;
}

ClockValue bounded_add(ClockValue n, ClockValue d, ClockValue mc)
{
    const std::uint64_t sum = std::uint64_t(n) + d;
    return sum > mc ? mc + 1 : static_cast<ClockValue>(sum);
}

ClockValuation bounded_add(const ClockValuation& v, ClockValue d, ClockValue mc)
{
    ClockValuation out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = bounded_add(v[i], d, mc);
    return out;
}

ClockValuation reset(const ClockValuation& v, std::span<const ClockIndex> clocks)
{
    ClockValuation out = v;
    for (ClockIndex c : clocks)
        out[c] = 0;
    return out;
}

bool satisfies(const ClockValuation& v, const Guard& g)
{
    assert(v.size() == g.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!g[i].contains(v[i]))
            return false;
    return true;
}

bool mc_equivalent(const ClockValuation& a, const ClockValuation& b, ClockValue mc)
{
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i] && (a[i] <= mc || b[i] <= mc))
            return false;
    return true;
}

ClockValuation mc_canonical(const ClockValuation& v, ClockValue mc)
{
    ClockValuation out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] > mc ? mc + 1 : v[i];
    return out;
}

std::vector<std::pair<EdgeIndex, Configuration>> switch_successors(const Configuration& c,
                                                                   const ValidatedModel& model)
{
    std::vector<std::pair<EdgeIndex, Configuration>> out;
    for (EdgeIndex ei : model.edges_from(c.location)) {
        const Edge& e = model.edge(ei);
        if (satisfies(c.valuation, e.guard))
            out.emplace_back(ei, Configuration{e.to, reset(c.valuation, e.reset)});
    }
    return out;
}

namespace {

// FNV-1a over the value words.
std::size_t hash_words(std::size_t seed, const ClockValuation& v)
{
    std::uint64_t h = seed ^ 0xcbf29ce484222325ULL;
    for (ClockValue x : v) {
        h ^= x;
        h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
}

} // namespace

std::size_t ValuationHash::operator()(const ClockValuation& v) const { return hash_words(0, v); }

std::size_t ConfigurationHash::operator()(const Configuration& c) const
{
    return hash_words(std::size_t(c.location) * 0x9e3779b97f4a7c15ULL, c.valuation);
}

} // namespace tdart
