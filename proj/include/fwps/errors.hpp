#pragma once

#include <stdexcept>
#include <string>

namespace fwps {

// Domain validation failure. `clause` is a stable machine-readable name
// ("origin-not-interior", "non-primitive-vertex", ...) that the CLI reports
// verbatim with exit code 3.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string clause, const std::string& detail)
      : std::runtime_error(detail.empty() ? clause : clause + ": " + detail),
        clause_(std::move(clause)) {}
  explicit ValidationError(std::string clause) : ValidationError(std::move(clause), "") {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

// Malformed input (JSON or flag values); CLI exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds a hard-coded desk-scale limit; CLI exit code 4.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fwps
