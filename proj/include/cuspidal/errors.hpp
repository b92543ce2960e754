#pragma once

#include <stdexcept>
#include <string>

namespace cusp {

/// Base for all domain errors raised by the library.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration validation.
struct NotPseudoHomogeneous : DomainError { using DomainError::DomainError; };
struct RankDeficient : DomainError { using DomainError::DomainError; };
struct DeletionDropsRank : DomainError { using DomainError::DomainError; };

// Cuspidal-form evaluation.
struct ExceptionalParameter : DomainError { using DomainError::DomainError; };
struct WrongCodimension : DomainError { using DomainError::DomainError; };

// The exhaustive Gale-minor consistency check; firing indicates a bug.
struct ConsistencyFailure : DomainError { using DomainError::DomainError; };

// Dual-defect classification; firing indicates a bug.
struct InconsistencyDetected : DomainError { using DomainError::DomainError; };

// Bivariate classification.
struct DegenerateConfiguration : DomainError { using DomainError::DomainError; };
struct UnrecognizedSignature : DomainError { using DomainError::DomainError; };
struct TooFewPoints : DomainError { using DomainError::DomainError; };

/// Malformed input documents (CLI and file parsing).
struct ParseError : DomainError {
  explicit ParseError(const std::string& what) : DomainError(what) {}
};

}  // namespace cusp
