#pragma once

#include <stdexcept>
#include <string>

namespace blocklab {

// Every failure mode the toolkit can report. Codes are stable so tests can
// match on them instead of parsing messages.
enum class errc {
  dimension_mismatch,
  not_contained,
  non_associative,
  bad_unit,
  degenerate_form,
  not_an_ideal,
  not_a_subalgebra,
  not_split_local,
  candidate_not_nilpotent,
  candidate_not_ideal,
  candidate_not_maximal,
  not_frobenius,
  not_idempotent,
  not_orthogonal,
  not_unit_sum,
  parse_error,
  non_composable_path,
  unknown_label,
  truncation_unstable,
  invalid_action,
  not_an_automorphism,
  singular_generator,
  source_not_two_generated,
  invalid_argument,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace blocklab
