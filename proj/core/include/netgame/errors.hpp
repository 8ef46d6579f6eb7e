#pragma once

#include <stdexcept>

namespace netgame {

/// Bad configuration: unknown keys, missing or inconsistent settings.
/// The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad input data: unreadable or malformed files. Exit code 3.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace netgame
