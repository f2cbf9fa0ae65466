#ifndef ARGON2_ERRORS_HPP
#define ARGON2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace argon2 {

/// Rejected input parameters (lane count, tag length, memory size, ...).
class ParamError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed encoded hash string. Carries the name of the offending field.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string field, const std::string& message)
        : std::runtime_error("bad " + field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

  private:
    std::string field_;
};

/// Failure inside the reduced-memory execution lab.
class TmtoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace argon2

#endif
