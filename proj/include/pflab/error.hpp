#pragma once

#include <stdexcept>
#include <string>

namespace pflab {

// Error taxonomy shared across the library. Conditions a caller can
// distinguish get their own type; verification-level failures (a would-be
// counterexample) are reported through WitnessReport, not thrown.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error { using Error::Error; };
struct InvalidSize : Error { using Error::Error; };
struct NotSpecial : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct PairingImpossible : Error { using Error::Error; };
struct ParityViolation : Error { using Error::Error; };
struct UnsupportedPair : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct OddSize : Error { using Error::Error; };
struct NotSoForm : Error { using Error::Error; };
struct MissingAssignment : Error { using Error::Error; };
struct NotAConjectureIndex : Error { using Error::Error; };
struct PairingViolation : Error { using Error::Error; };
struct OddTypeIICount : Error { using Error::Error; };

}  // namespace pflab
