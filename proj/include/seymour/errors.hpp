#ifndef SEYMOUR_ERRORS_HPP
#define SEYMOUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seymour {

/// Base for all library errors. Catching this (or a subclass) separates
/// bad-input conditions from genuine bugs, which surface as assertions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadLabelError : Error {
    using Error::Error;
};
struct DuplicateLabelError : Error {
    using Error::Error;
};
struct UnknownLabelError : Error {
    using Error::Error;
};
struct LabelMismatchError : Error {
    using Error::Error;
};
struct LabelOverlapError : Error {
    using Error::Error;
};
struct NonSquareError : Error {
    using Error::Error;
};
struct ZeroPivotError : Error {
    using Error::Error;
};
struct SingularMatrixError : Error {
    using Error::Error;
};
struct BadFactorError : Error {
    using Error::Error;
};
struct SizeLimitError : Error {
    using Error::Error;
};
struct ZeroRowError : Error {
    using Error::Error;
};
struct ZeroColError : Error {
    using Error::Error;
};
struct NotABaseError : Error {
    using Error::Error;
};
struct NotTuError : Error {
    using Error::Error;
};
struct GroundMismatchError : Error {
    using Error::Error;
};
struct NotCanonicalFormError : Error {
    using Error::Error;
};
struct ZeroFactorError : Error {
    using Error::Error;
};
struct PartitionMismatchError : Error {
    using Error::Error;
};

/// First failed border/shape condition of a 3-sum candidate, in the
/// documented check order.
struct PatternViolationError : Error {
    using Error::Error;
};

/// Raised by good-tree evaluation; `path` locates the offending node.
struct CertError : Error {
    std::string path;
    CertError(std::string p, const std::string& what)
        : Error("certificate invalid at " + p + ": " + what), path(std::move(p)) {}
};
struct SumPreconditionError : Error {
    std::string path;
    SumPreconditionError(std::string p, const std::string& what)
        : Error("sum precondition failed at " + p + ": " + what), path(std::move(p)) {}
};

struct ParseError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

} // namespace seymour

#endif
