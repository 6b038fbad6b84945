#pragma once

#include <stdexcept>
#include <string>

namespace spincurve {

// Precondition violations on inputs (bad parameters, non-orthogonal
// matrices, profiles with the wrong sign pattern, ...).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical check failed (round trip out of tolerance, ambiguous
// pivot, lift jump after refinement, root-find residual too large).
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IOError : std::runtime_error {
    explicit IOError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace spincurve
