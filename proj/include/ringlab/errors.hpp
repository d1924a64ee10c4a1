#ifndef RINGLAB_ERRORS_HPP
#define RINGLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ringlab {

// Every failure the library can report, in one place. CLI maps these to
// exit codes: budget errors -> 3, input/validation errors -> 2.
enum class errc {
  bad_shape,
  unreduced_constant,
  non_associative,
  ring_mismatch,
  not_two_sided_ideal,
  bad_characteristic,
  not_prime,
  not_prime_power,
  not_unital,
  not_simple,
  not_semisimple,
  search_budget_exceeded,
  budget_exceeded,
  odd_length,
  precondition_failed,
  bad_degree,
  zero_polynomial,
  constant_term,
  duplicate_factor_class,
  parse_error,
  internal_check_failed,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_shape: return "BadShape";
    case errc::unreduced_constant: return "UnreducedConstant";
    case errc::non_associative: return "NonAssociative";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::not_two_sided_ideal: return "NotTwoSidedIdeal";
    case errc::bad_characteristic: return "BadCharacteristic";
    case errc::not_prime: return "NotPrime";
    case errc::not_prime_power: return "NotPrimePower";
    case errc::not_unital: return "NotUnital";
    case errc::not_simple: return "NotSimple";
    case errc::not_semisimple: return "NotSemisimple";
    case errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::odd_length: return "OddLength";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::bad_degree: return "BadDegree";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::constant_term: return "ConstantTerm";
    case errc::duplicate_factor_class: return "DuplicateFactorClass";
    case errc::parse_error: return "ParseError";
    case errc::internal_check_failed: return "InternalCheckFailed";
  }
  return "UnknownError";
}

class RingError : public std::runtime_error {
public:
  RingError(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw RingError(code, what);
}

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

} // namespace ringlab

#endif
