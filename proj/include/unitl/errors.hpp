#ifndef UNITL_ERRORS_HPP
#define UNITL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unitl {

// Every failure mode the engine can report. Codes split into two families:
// user/config errors (bad input, bounded searches giving up) and verification
// failures (an identity that was supposed to hold did not). The CLI maps the
// first family to exit 2 and the second to exit 1.
enum class errc {
  not_local,
  not_monic,
  wrong_kind,
  zero_residue,
  precision_mismatch,
  not_scalar,
  syntax_error,
  unknown_variable,
  non_invertible_coordinate,
  non_unit_constant_term,
  search_exhausted,
  division_undecidable,
  degree_bound_exceeded,
  normal_form_missing,
  mismatch,
  coefficient_not_in_maximal_ideal,
  not_polynomial,
  internal,
};

const char* errc_name(errc c);

// true for codes that mean "a verification check failed" rather than
// "the input or environment was unusable"
bool errc_is_verification(errc c);

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) {
  throw error(c, what);
}

inline void require(bool ok, errc c, const std::string& what) {
  if (!ok) fail(c, what);
}

}  // namespace unitl

#endif
