#include "psn/error.hpp"

namespace psn {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::parse_error: return "parse-error";
    case Errc::invalid_dimension: return "invalid-dimension";
    case Errc::invalid_letter: return "invalid-letter";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::not_reduced: return "not-reduced";
    case Errc::not_monotone: return "not-monotone";
    case Errc::search_bound_exceeded: return "search-bound-exceeded";
    case Errc::anchor_level_mismatch: return "anchor-level-mismatch";
    case Errc::anchors_not_over: return "anchors-not-over";
    case Errc::level_not_in_t: return "level-not-in-t";
    case Errc::not_over: return "not-over";
    case Errc::unknown_vertex: return "unknown-vertex";
    case Errc::invalid_flag: return "invalid-flag";
    case Errc::precondition_violated: return "precondition-violated";
    case Errc::difference_mismatch: return "difference-mismatch";
    case Errc::not_a_permutation: return "not-a-permutation";
    case Errc::no_flag_in_X: return "no-flag-in-X";
    case Errc::G_not_in_X: return "G-not-in-X";
    case Errc::unknown_suite: return "unknown-suite";
  }
  return "unknown";
}

}  // namespace psn
