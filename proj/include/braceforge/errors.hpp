#ifndef BRACEFORGE_ERRORS_HPP
#define BRACEFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braceforge {

// Error codes split in three bands: math verdicts about otherwise well-formed
// inputs (a table that is not a group, an action that is not a homomorphism),
// contract violations (caps, preconditions), and input/schema problems.
// The CLI maps the bands to exit codes.
enum class Errc {
  // group-core
  not_associative,
  not_latin_square,
  no_identity,
  order_overflow,
  not_odd_prime,
  action_not_automorphism,
  action_not_homomorphism,
  // gamma-brace
  not_automorphism,
  shape_mismatch,
  not_a_skew_brace,
  // rota-baxter
  not_rota_baxter,
  center_not_trivial,
  gamma_not_inner,
  too_large,
  theorem_violation,
  // cohomology
  rep_mismatch,
  center_not_elementary_abelian,
  value_not_central,
  not_a_section,
  not_a_subgroup,
  not_a_homomorphism,
  cocycle_not_normalized,
  sigma_does_not_certify,
  reconstruction_failed_rb_check,
  dimension_mismatch,
  not_prime,
  // gallery
  alpha_is_minus_half,
  bad_parameters,
  // io
  schema_error,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

const char* errc_name(Errc code);

// math verdict vs malformed input; drives the CLI exit-code contract
bool errc_is_math_verdict(Errc code);

} // namespace braceforge

#endif
