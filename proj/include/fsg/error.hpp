#pragma once
#include <stdexcept>
#include <string>

namespace fsg {

// Raised for malformed input text; carries a byte offset into the input.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg)), position(pos) {}
};

// Raised for structurally valid but semantically invalid requests
// (arity mismatches, bad addresses, wrong type tags, out-of-range n, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fsg
