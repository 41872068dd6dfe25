#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

// Violated operation precondition (CLI exit code 3).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace weyl
