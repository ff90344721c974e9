#pragma once

#include <stdexcept>
#include <string>

namespace hblock {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: wrong shapes, non-finite entries, bad indices, unparsable files.
class InputError : public Error {
public:
    using Error::Error;
};

// A mathematical precondition on the data is violated (e.g. matrix not PSD).
class DomainError : public Error {
public:
    using Error::Error;
};

// A theorem hypothesis fails (e.g. an off-diagonal block is not Hermitian).
// Kept distinct from DomainError so callers can tell "wrong class of matrix"
// from "numerically broken".
class HypothesisError : public Error {
public:
    using Error::Error;
};

// Spectral routine failed to converge or produced an out-of-contract result.
class NumericalError : public Error {
public:
    using Error::Error;
};

// A decomposition certificate whose parts do not fit together.
class MalformedCertificate : public InputError {
public:
    using InputError::InputError;
};

}  // namespace hblock
