#pragma once

#include <stdexcept>
#include <string>

namespace kita {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field / scalar
struct DegenerateInput : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct BadField : Error { using Error::Error; };

// linear algebra
struct AmbientMismatch : Error { using Error::Error; };
struct NotASubspace : Error { using Error::Error; };
struct SingularGram : Error { using Error::Error; };

// algebra construction / structure
struct InvalidAlgebra : Error { using Error::Error; };
struct RadicalFailure : Error { using Error::Error; };
struct NoPresentation : Error { using Error::Error; };

// presentation builders
struct BoundTooSmall : Error { using Error::Error; };
struct NonAdmissible : Error { using Error::Error; };
struct SoclePathFailure : Error { using Error::Error; };
struct BadCayleyTable : Error { using Error::Error; };

// forms
struct DegenerateForm : Error { using Error::Error; };
struct NotMultiplicative : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };

// tower / quotients
struct RouteMismatch : Error { using Error::Error; };
struct NotIdeal : Error { using Error::Error; };
struct SearchBoundExceeded : Error { using Error::Error; };

// registry / cli
struct ParamOutOfRange : Error { using Error::Error; };
struct UnknownFamily : Error { using Error::Error; };
struct BadInput : Error { using Error::Error; };

} // namespace kita
