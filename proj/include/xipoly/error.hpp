#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xipoly {

// Root of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_subset : public error {
 public:
  using error::error;
};

class invalid_parameter : public error {
 public:
  using error::error;
};

class exponent_underflow : public error {
 public:
  using error::error;
};

class invalid_nodes : public error {
 public:
  using error::error;
};

class oracle_too_large : public error {
 public:
  using error::error;
};

class precondition_error : public error {
 public:
  using error::error;
};

class contract_violation : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace xipoly
