#pragma once

#include <stdexcept>

namespace circulant {

// Precondition failures use std::invalid_argument. Searches that would exceed
// their configured state or word budget throw this instead.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace circulant
