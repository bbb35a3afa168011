#ifndef MATKIT_ERRORS_HPP
#define MATKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "matkit/mask.hpp"

namespace matkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidMatroid : Error { using Error::Error; };
struct EmptyGroundSet : Error { using Error::Error; };
struct AllLoops : Error { using Error::Error; };
struct BadParameters : Error { using Error::Error; };
struct LabelCollision : Error { using Error::Error; };
struct DisjointnessViolated : Error { using Error::Error; };
struct NotCircuitHyperplane : Error { using Error::Error; };
struct NotModular : Error { using Error::Error; };
struct NotATriangle : Error { using Error::Error; };
struct NotModularInEither : Error { using Error::Error; };
struct GroupTooLarge : Error { using Error::Error; };
struct ConstructionFailed : Error { using Error::Error; };
struct UnsupportedField : Error { using Error::Error; };
struct MustUseNotInHost : Error { using Error::Error; };
struct BadSpec : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };

/// Thrown when a generating family of flats cannot be closed into a valid
/// modular cut; carries one violating modular pair.
struct NotAModularCut : Error {
    Mask first, second;
    NotAModularCut(const std::string& msg, Mask a, Mask b)
        : Error(msg), first(a), second(b) {}
};

}  // namespace matkit

#endif
