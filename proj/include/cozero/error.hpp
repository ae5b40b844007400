#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cozero {

enum class ErrorKind {
  parse,
  invalid_spec,
  axiom_violation,
  ring_mismatch,
  not_an_ideal,
  domain,
  not_a_vertex,
  cap_exceeded,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cozero
