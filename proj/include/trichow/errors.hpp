#pragma once

#include <stdexcept>
#include <string>

namespace trichow {

/// Error thrown when a mathematical precondition is violated (bad arity,
/// inhomogeneous relation, degree beyond cap, ...). The `code` is a short
/// stable tag; `what()` carries the human-readable message.
class CalcError : public std::runtime_error {
public:
    CalcError(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    explicit CalcError(const std::string& code)
        : std::runtime_error(code), code_(code) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Verification failure: a computed identity did not hold. Distinct from
/// CalcError so callers (and the CLI exit-code contract) can tell "the math
/// failed to verify" apart from "you called it wrong".
class VerifyError : public std::runtime_error {
public:
    explicit VerifyError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace trichow
