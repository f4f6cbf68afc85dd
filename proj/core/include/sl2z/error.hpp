#ifndef SL2Z_ERROR_HPP
#define SL2Z_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sl2z {

enum class errc {
  invalid_argument,
  not_transitive,
  bad_amalgam,
  bad_order4,
  bad_conjugation,
  not_invertible,
  predicate_not_subgroup,
  oracle_too_large,
  retry_budget_exhausted,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string &what) : std::runtime_error(what), code_(code) {}

  errc code() const { return code_; }

  // true for the structural subgroup-validation failures
  bool is_validation() const {
    return code_ == errc::not_transitive || code_ == errc::bad_amalgam ||
           code_ == errc::bad_order4 || code_ == errc::bad_conjugation;
  }

private:
  errc code_;
};

} // namespace sl2z

#endif
