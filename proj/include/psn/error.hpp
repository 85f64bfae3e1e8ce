#pragma once

#include <stdexcept>
#include <string>

namespace psn {

enum class Errc {
  parse_error,
  invalid_dimension,
  invalid_letter,
  dimension_mismatch,
  not_reduced,
  not_monotone,
  search_bound_exceeded,
  anchor_level_mismatch,
  anchors_not_over,
  level_not_in_t,
  not_over,
  unknown_vertex,
  invalid_flag,
  precondition_violated,
  difference_mismatch,
  not_a_permutation,
  no_flag_in_X,
  G_not_in_X,
  unknown_suite,
};

// Stable kebab-case name, used by the CLI as the machine-readable error code.
const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace psn
