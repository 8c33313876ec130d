#pragma once

#include <stdexcept>
#include <string>

namespace lorext {

/// Two inputs live on incompatible grids (different n or interval length).
class grid_mismatch_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented operation precondition does not hold for the given inputs.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation requested outside the admissible domain.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace lorext
