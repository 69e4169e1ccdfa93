#pragma once

#include <stdexcept>
#include <string>

namespace ordcomplete {

enum class ErrorCode {
    InvalidInput,
    DuplicateLabel,
    Cycle,
    UnknownElement,
    PosetMismatch,
    SizeCapExceeded,
    NotSurjective,
    NotIncreasing,
    NotCompleteLattice,
    EmptySubset,
    StencilUnderflow,
    InternalInconsistency,
};

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& m) : Error(ErrorCode::InvalidInput, m) {}
};

struct DuplicateLabelError : Error {
    explicit DuplicateLabelError(const std::string& m) : Error(ErrorCode::DuplicateLabel, m) {}
};

struct CycleError : Error {
    explicit CycleError(const std::string& m) : Error(ErrorCode::Cycle, m) {}
};

struct UnknownElementError : Error {
    explicit UnknownElementError(const std::string& m) : Error(ErrorCode::UnknownElement, m) {}
};

struct PosetMismatchError : Error {
    explicit PosetMismatchError(const std::string& m) : Error(ErrorCode::PosetMismatch, m) {}
};

struct SizeCapError : Error {
    explicit SizeCapError(const std::string& m) : Error(ErrorCode::SizeCapExceeded, m) {}
};

struct NotSurjectiveError : Error {
    explicit NotSurjectiveError(const std::string& m) : Error(ErrorCode::NotSurjective, m) {}
};

struct NotIncreasingError : Error {
    explicit NotIncreasingError(const std::string& m) : Error(ErrorCode::NotIncreasing, m) {}
};

struct NotCompleteLatticeError : Error {
    explicit NotCompleteLatticeError(const std::string& m)
        : Error(ErrorCode::NotCompleteLattice, m) {}
};

struct EmptySubsetError : Error {
    explicit EmptySubsetError(const std::string& m) : Error(ErrorCode::EmptySubset, m) {}
};

struct StencilUnderflowError : Error {
    explicit StencilUnderflowError(const std::string& m) : Error(ErrorCode::StencilUnderflow, m) {}
};

/// A theorem-backed internal check failed; indicates a bug, not bad data.
struct InternalError : Error {
    explicit InternalError(const std::string& m) : Error(ErrorCode::InternalInconsistency, m) {}
};

}  // namespace ordcomplete
