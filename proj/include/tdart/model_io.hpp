#pragma once

#include "tdart/model.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace tdart {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parse a model document. The document is a JSON object with exactly the
// keys "clocks", "locations", "initial" and "edges"; unknown keys anywhere
// are rejected. Guard bounds are naturals, an upper bound of null means
// unbounded. Throws ParseError with the offending context.
TimedAutomaton load_model(std::string_view text);

// Serialize a model. Unconstrained guard entries and empty reset sets are
// omitted; load_model(dump_model(m)) reproduces m exactly. Output is
// deterministic (sorted object keys).
std::string dump_model(const TimedAutomaton& model);

} // namespace tdart
