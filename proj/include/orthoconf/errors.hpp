#pragma once

#include <stdexcept>
#include <string>

namespace orthoconf {

// A request exceeded a configured enumeration or search budget.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace orthoconf
