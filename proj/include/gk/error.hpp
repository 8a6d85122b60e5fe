#pragma once

#include <stdexcept>

namespace gk {

/// Invalid input: non-prime characteristic, zero divisor, gap passed to a
/// decomposition, and similar precondition violations.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (field size, closure size) would be exceeded.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gk
