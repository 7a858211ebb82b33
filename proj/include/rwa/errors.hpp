#pragma once

#include <stdexcept>
#include <string>

namespace rwa {

// Bad arguments, malformed configs, violated preconditions. CLI exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The computation itself failed (divergence, singularity, ...). CLI exit code 3.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergence : NumericalError {
    using NumericalError::NumericalError;
};

struct SingularJacobian : NumericalError {
    using NumericalError::NumericalError;
};

struct RootCollision : NumericalError {
    using NumericalError::NumericalError;
};

struct ZeroRoot : NumericalError {
    using NumericalError::NumericalError;
};

struct ResidualTooLarge : NumericalError {
    using NumericalError::NumericalError;
};

struct NonRealEnergy : NumericalError {
    using NumericalError::NumericalError;
};

struct QuadratureError : NumericalError {
    using NumericalError::NumericalError;
};

struct CutoffTooSmall : ValidationError {
    using ValidationError::ValidationError;
};

struct EmptyDomain : ValidationError {
    using ValidationError::ValidationError;
};

struct MissingColumn : ValidationError {
    using ValidationError::ValidationError;
};

} // namespace rwa
