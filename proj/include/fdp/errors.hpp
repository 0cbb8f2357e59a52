#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fdp {

// Every mathematically meaningful failure carries one of these codes so
// callers (and the CLI) can distinguish bad inputs from internal limits.
enum class errc {
  not_prime,
  degree_out_of_range,
  field_mismatch,
  division_by_zero,
  non_divisible_degrees,
  zero_input,
  degree_mismatch,
  wrong_shape,
  unnormalized_input,
  insufficient_roots,
  splitting_field_too_large,
  census_infeasible,
  unsupported,
};

class math_error : public std::runtime_error {
 public:
  math_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Raised by the expression / coefficient-file parsers; offset is the byte
// position in the input at which the problem was detected.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace fdp
