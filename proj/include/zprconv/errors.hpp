/*
   Copyright 2026 the zprconv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ZPRCONV_ERRORS_HPP
#define ZPRCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zprconv {

/// Base class of everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A documented precondition of an operation does not hold (CLI exit code 3).
struct PreconditionError : Error {
    using Error::Error;
};

struct NotRegularError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotMonicError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotUnitError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotSquareError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct BadShapeError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotFullRankError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotRidmError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotPrimitiveError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct ContextMismatchError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct AllZeroError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct ZeroInputError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NoRegularMinorError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NoSuitableFactorError : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// Input text could not be parsed (CLI exit code 2).
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& reason)
        : Error("parse error at line " + std::to_string(line_) + ": " + reason), line(line_) {}
};
struct NotPrimeError : ParseError {
    NotPrimeError(int line, const std::string& reason) : ParseError(line, reason) {}
};
struct OutOfRangeCoefficientError : ParseError {
    OutOfRangeCoefficientError(int line, const std::string& reason) : ParseError(line, reason) {}
};
struct ShapeMismatchError : ParseError {
    ShapeMismatchError(int line, const std::string& reason) : ParseError(line, reason) {}
};

/// A result the theory guarantees could not be produced, or a constructed
/// certificate failed its exactness check (CLI exit code 4). Carries a
/// machine-readable dump of the offending instance.
struct GuaranteeViolatedError : Error {
    std::string instance_dump;
    GuaranteeViolatedError(const std::string& msg, std::string dump)
        : Error(msg), instance_dump(std::move(dump)) {}
};
struct VerificationFailedError : Error {
    using Error::Error;
};

/// A search exceeded its explicit budget (CLI exit code 5).
struct BudgetExceededError : Error {
    using Error::Error;
};
struct SearchBudgetExceededError : BudgetExceededError {
    using BudgetExceededError::BudgetExceededError;
};
struct TooLargeError : BudgetExceededError {
    using BudgetExceededError::BudgetExceededError;
};
struct WindowTooSmallError : BudgetExceededError {
    using BudgetExceededError::BudgetExceededError;
};

}  // namespace zprconv

#endif
