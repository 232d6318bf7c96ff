#pragma once

#include <stdexcept>
#include <string>

namespace urn {

// Error classes map to CLI exit codes: config errors exit 2, violated
// preconditions exit 3. Verdict failures are not errors (exit 1).
enum class ErrorClass {
    Config,
    Precondition,
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what)
        : std::runtime_error(what), class_(cls) {}

    ErrorClass error_class() const noexcept { return class_; }

private:
    ErrorClass class_;
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& field, const std::string& detail)
        : Error(ErrorClass::Config, "out of range: " + field + " (" + detail + ")"),
          field(field) {}
    std::string field;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorClass::Config, what) {}
};

struct TheoremPreconditionViolated : Error {
    explicit TheoremPreconditionViolated(const std::string& what)
        : Error(ErrorClass::Precondition, what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorClass::Precondition, what) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(ErrorClass::Precondition, what) {}
};

struct InvalidCheckpoints : Error {
    explicit InvalidCheckpoints(const std::string& what)
        : Error(ErrorClass::Precondition, what) {}
};

struct DivergenceDetected : Error {
    explicit DivergenceDetected(const std::string& what)
        : Error(ErrorClass::Precondition, what) {}
};

struct GridError : Error {
    explicit GridError(const std::string& what) : Error(ErrorClass::Precondition, what) {}
};

struct CltConditionViolated : Error {
    explicit CltConditionViolated(const std::string& what)
        : Error(ErrorClass::Precondition, what) {}
};

struct LilConditionViolated : Error {
    explicit LilConditionViolated(const std::string& what)
        : Error(ErrorClass::Precondition, what) {}
};

struct InsufficientExceedances : Error {
    explicit InsufficientExceedances(const std::string& what)
        : Error(ErrorClass::Precondition, what) {}
};

} // namespace urn
