#pragma once

#include <stdexcept>
#include <string>

namespace borough {

/// A configured resource limit (cycle cap, branch budget) was exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace borough
