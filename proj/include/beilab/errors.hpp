#pragma once

#include <stdexcept>
#include <string>

namespace beilab {

// Thrown when an operation is asked to run past its documented size limit.
// The CLI maps this to exit code 2 (configuration error) rather than 1
// (verification failure).
class ScaleGuardError : public std::runtime_error {
public:
    explicit ScaleGuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace beilab
