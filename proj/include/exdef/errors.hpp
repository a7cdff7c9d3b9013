#pragma once

#include <stdexcept>
#include <string>

namespace exdef {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched variable counts, degrees or weights between operands.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Operation requested outside its mathematical domain (e.g. the
/// radial/exact split at weight 0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input lies below the truncation threshold n_r of a deformed action.
class TruncationError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A deformation coefficient denominator vanished.  Unreachable when
/// thresholds come from min_truncation; reaching it means a custom
/// coefficient table is inconsistent with its thresholds.
class CoefficientDomainError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Evaluation outside the declared range of a black-box operator.
class BoundsError : public Error {
public:
    using Error::Error;
};

/// A black box handed to decompose turned out not to be an order-1
/// operator; the message carries the offending probe.
class NotOrderOneError : public Error {
public:
    NotOrderOneError(const std::string& msg, std::string witness)
        : Error(msg), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

/// A degreewise family handed to generator_degrees is not closed under
/// the action; the message carries the first violating image.
class NotASubmoduleError : public Error {
public:
    using Error::Error;
};

/// The degree-reduction hypotheses fail (alpha^2 = beta^2, or the
/// threshold does not exceed the variable count).
class ReductionUnavailableError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Expression syntax or homogeneity failure, with a source position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_ = 0;
};

}  // namespace exdef
