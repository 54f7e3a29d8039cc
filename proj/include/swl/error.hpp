#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace swl {

enum class ErrorKind {
  parse,
  missing_section,
  duplicate_dart,
  unknown_symbol,
  degenerate_surface,
  invalid_face,
  unknown_face,
  unknown_generator,
  malformed_word,
  too_large,
  vertex_cap_exceeded,
  non_coprime,
  wrong_surface,
  insufficient_data,
  io,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every swl operation. The kind is stable and is what
/// the CLI reports in its machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace swl
