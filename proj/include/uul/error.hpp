#pragma once

#include <stdexcept>
#include <string>

namespace uul {

enum class errc {
  exceeds_cap,
  not_permutation,
  not_normal,
  not_p_group,
  not_2_group,
  bad_action,
  not_central,
  mismatched_identification,
  mixed_context,
  not_a_unit,
  too_large,
  normalizer_case,
  unknown_name,
  bad_params,
  parse_error,
  invalid_argument,
  implementation_mismatch,
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::exceeds_cap: return "ExceedsCap";
    case errc::not_permutation: return "NotPermutation";
    case errc::not_normal: return "NotNormal";
    case errc::not_p_group: return "NotPGroup";
    case errc::not_2_group: return "Not2Group";
    case errc::bad_action: return "BadAction";
    case errc::not_central: return "NotCentral";
    case errc::mismatched_identification: return "MismatchedIdentification";
    case errc::mixed_context: return "MixedContext";
    case errc::not_a_unit: return "NotAUnit";
    case errc::too_large: return "TooLarge";
    case errc::normalizer_case: return "NormalizerCase";
    case errc::unknown_name: return "UnknownName";
    case errc::bad_params: return "BadParams";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::implementation_mismatch: return "ImplementationMismatch";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace uul
