#pragma once

#include <stdexcept>
#include <string>

namespace media {

/// Malformed or out-of-contract input: unknown labels, broken invariants,
/// violated preconditions. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace media
