#pragma once

#include <stdexcept>
#include <string>

namespace shifted_hecke {

// Raised when a bounded enumeration or closure would exceed its node budget.
// Callers opted into a finite slice; exceeding it is reported, never truncated
// silently.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument to a library operation (bad seed, non-standard tableau,
// word outside the required family, ...). The `code` is a stable short tag
// used by the CLI to map failures onto exit codes and messages.
struct ValidationError : std::invalid_argument {
  ValidationError(std::string code_, const std::string& what)
      : std::invalid_argument(code_ + ": " + what), code(std::move(code_)) {}
  std::string code;
};

inline ValidationError not_symplectic(const std::string& what) {
  return {"NotSymplectic", what};
}
inline ValidationError not_standard(const std::string& what) {
  return {"NotStandard", what};
}
inline ValidationError not_semistandard(const std::string& what) {
  return {"NotSemistandard", what};
}
inline ValidationError not_a_factorization(const std::string& what) {
  return {"NotAFactorization", what};
}
inline ValidationError not_admissible(const std::string& what) {
  return {"NotAdmissible", what};
}
inline ValidationError bad_seed(const std::string& what) {
  return {"BadSeed", what};
}
inline ValidationError terminal_state(const std::string& what) {
  return {"Terminal", what};
}
inline ValidationError odd_entry(const std::string& what) {
  return {"OddEntry", what};
}
inline ValidationError empty_q(const std::string& what) {
  return {"EmptyQ", what};
}
inline ValidationError not_reduced_word(const std::string& what) {
  return {"NotReducedWord", what};
}

}  // namespace shifted_hecke
