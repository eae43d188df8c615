#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ech {

// Base for every domain error raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller-supplied argument violates an operation's precondition.
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// k * value is an integer and the tilt is 0, so floor(k * value +- eps)
// cannot be decided. Corresponds to a degenerate Reeb orbit.
class DegenerateRatio : public Error {
public:
    explicit DegenerateRatio(std::int64_t k)
        : Error("degenerate ratio: k*value is an integer at k=" + std::to_string(k) +
                " and the tilt is 0"),
          k_(k) {}

    std::int64_t k() const noexcept { return k_; }

private:
    std::int64_t k_;
};

class ZeroValue : public Error {
public:
    using Error::Error;
};

class NotElliptic : public Error {
public:
    using Error::Error;
};

// The requested partition is not determined by the rules implemented here.
class Unspecified : public Error {
public:
    using Error::Error;
};

// The enumerated ellipsoid chain complex does not have exactly one generator
// per even grading. Only an implementation bug can trigger this.
class HomologyMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace ech
