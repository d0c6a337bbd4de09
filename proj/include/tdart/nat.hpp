#pragma once

#include <cassert>
#include <cstdint>
#include <ostream>

namespace tdart {

// Nonnegative integer extended with infinity.
//
// Infinity is a real variant, not a reserved numeric value: the saturation
// constant MC+1 of the bounded semantics must stay distinguishable from an
// unbounded interval even when MC == 0.
class NatInf {
public:
    constexpr NatInf() = default;
    constexpr NatInf(std::uint64_t value) : value_(value) {}

    static constexpr NatInf inf()
    {
        NatInf n;
        n.infinite_ = true;
        return n;
    }

    constexpr bool is_inf() const { return infinite_; }

    constexpr std::uint64_t value() const
    {
        assert(!infinite_);
        return value_;
    }

    friend constexpr bool operator==(NatInf a, NatInf b)
    {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

    friend constexpr bool operator<(NatInf a, NatInf b)
    {
        if (a.infinite_)
            return false;
        return b.infinite_ || a.value_ < b.value_;
    }

    friend constexpr bool operator!=(NatInf a, NatInf b) { return !(a == b); }
    friend constexpr bool operator>(NatInf a, NatInf b) { return b < a; }
    friend constexpr bool operator<=(NatInf a, NatInf b) { return !(b < a); }
    friend constexpr bool operator>=(NatInf a, NatInf b) { return !(a < b); }

    friend constexpr NatInf min(NatInf a, NatInf b) { return a < b ? a : b; }

    friend std::ostream& operator<<(std::ostream& os, NatInf n)
    {
        if (n.infinite_)
            return os << "inf";
        return os << n.value_;
    }

private:
    std::uint64_t value_ = 0;
    bool infinite_ = false;
};

} // namespace tdart
