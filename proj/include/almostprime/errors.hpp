#pragma once

#include <stdexcept>
#include <string>

namespace almostprime {

// Thrown when a requested build would exceed the configured memory budget.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace almostprime
