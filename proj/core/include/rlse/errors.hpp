#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "rlse/verdict.hpp"

namespace rlse {

// Base for all structural/precondition failures. Parse problems use
// ParseError; everything else derives from PreconditionError so the CLI can
// map exceptions to stable exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    Verdict verdict;  // the failing precondition check, when available
    explicit PreconditionError(const std::string& what, Verdict v = {})
        : Error(what), verdict(std::move(v)) {}
};

struct NotAPartialOrder : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotAnRlse : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotOrthomodular : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct InternalInconsistency : Error {
    using Error::Error;
};

struct SpaceMismatch : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotTwoValued : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotMember : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotClosed : PreconditionError {
    int p = -1, q = -1;       // offending pair (family indices)
    std::string op;           // "oplus" or "odot"
    NotClosed(const std::string& what, int p_, int q_, std::string op_)
        : PreconditionError(what), p(p_), q(q_), op(std::move(op_)) {}
};

struct OutOfRange : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct InvalidIndex : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct TooLarge : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct AmbientTooLarge : PreconditionError {
    using PreconditionError::PreconditionError;
};

}  // namespace rlse
