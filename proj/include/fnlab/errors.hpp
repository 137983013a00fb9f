#pragma once

#include <stdexcept>
#include <string>

namespace fnlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// poset / structure construction
struct CycleError : Error { using Error::Error; };
struct UnknownElement : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };
struct SizeLimitExceeded : Error { using Error::Error; };

// boolean algebra
struct ArityMismatch : Error { using Error::Error; };
struct NotBelow : Error { using Error::Error; };
struct FamilyTooLarge : Error { using Error::Error; };

// fn mappings and transfers
struct CarrierMismatch : Error { using Error::Error; };
struct NotAnEnumeration : Error { using Error::Error; };
struct WitnessInvalid : Error { using Error::Error; };
struct PreconditionFailed : Error { using Error::Error; };
struct NotARetraction : Error { using Error::Error; };
struct NotAChain : Error { using Error::Error; };
struct NotExtending : Error { using Error::Error; };
struct NotAnIdeal : Error { using Error::Error; };

// substructure
struct NotASubstructure : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };

// games
struct IllegalMove : Error { using Error::Error; };
struct ClosureExceedsBound : Error { using Error::Error; };
struct NotALinearOrder : Error { using Error::Error; };

// interval algebra
struct OrderMismatch : Error { using Error::Error; };

// text formats
struct FormatError : Error { using Error::Error; };

}  // namespace fnlab
