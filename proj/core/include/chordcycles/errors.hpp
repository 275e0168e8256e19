#pragma once

#include <stdexcept>
#include <string>

namespace chordcycles {

// Thrown when an exact computation is requested on an instance larger than
// the configured desk-scale cap. Refusal, never silent approximation.
struct SizeCapExceeded : std::runtime_error {
    explicit SizeCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the bounded fallback search when no decomposition exists (or none
// was found within the exhaustive bounds).
struct DecompositionInfeasible : std::runtime_error {
    explicit DecompositionInfeasible(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chordcycles
