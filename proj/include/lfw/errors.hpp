#pragma once

#include <stdexcept>
#include <string>

namespace lfw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible or unsupported field parameters.
struct ParamError : Error {
  using Error::Error;
};

// Input outside an operation's domain (non-lattice point, s in qN_0, ...).
struct DomainError : Error {
  using Error::Error;
};

// Window shrink would lose information, or cell count exceeds the cap.
struct ResolutionError : Error {
  using Error::Error;
};

// Family lacks the zero-neighborhood vanishing certificate; the requested
// sum or integral has no finite truncation.
struct CertificateError : Error {
  using Error::Error;
};

// A precondition gate was violated (e.g. MRA recovery on a non-wavelet).
struct ContractError : Error {
  using Error::Error;
};

// Malformed input file.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace lfw
