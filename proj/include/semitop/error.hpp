#pragma once

#include <stdexcept>
#include <string>

namespace semitop {

// Malformed input: unknown ids, duplicate ids, schema violations.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured cap was exceeded (e.g. union-closure blowup).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace semitop
