#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hyperinv {

/// A kernel precondition failed on well-formed input: a pole, an unsupported
/// degree, an off-locus point and so on. `kind()` is a stable snake_case
/// identifier that the command line front end reports verbatim.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Input text that does not follow the published encodings or schemas.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperinv
