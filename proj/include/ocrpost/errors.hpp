#pragma once

#include <stdexcept>

namespace ocrpost {

// Malformed content in an otherwise readable file; distinct from plain I/O
// failure so the CLI can map it to its own exit code.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ocrpost
