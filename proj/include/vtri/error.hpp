#pragma once

#include <stdexcept>
#include <string>

namespace vtri {

// Malformed text input (tensor files, Gauss codes, diagram files, tables).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a domain precondition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vtri
