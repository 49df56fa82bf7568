#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace residuum {

enum class Errc {
  not_prime,
  out_of_range,
  context_mismatch,
  division_by_zero,
  non_residue,
  bad_prime_form,
  not_magic,
  nonzero_center,
  not_a_square,
  not_a_member,
  bound_exceeded,
  bad_parameters,
  divides_term,
  non_residue_difference,
  not_covered,
  exception_5,
  all_zero,
  not_square_entried,
  odd_center,
  unexpected_pattern,
  bad_range,
  parse_error,
  file_not_found,
  internal,
};

/// Stable CamelCase name of an error code, e.g. "NotPrime".
std::string_view to_string(Errc code) noexcept;

/// Exception carrying a domain error code. Every failure raised by the
/// library is an Error; the message adds context for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace residuum
