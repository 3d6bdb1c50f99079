#pragma once

#include <stdexcept>
#include <string>

namespace gpalg {

/// Malformed input: bad vertex indices, unparsable documents, spec mismatches.
class input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size limit was hit before the computation could finish.
class budget_error : public std::runtime_error {
public:
  explicit budget_error(const std::string& what, int degree = -1)
      : std::runtime_error(what), degree_(degree) {}
  int degree() const { return degree_; }

private:
  int degree_;
};

/// A cross-check failed or a series refused to factor with nonnegative
/// integer exponents.  This is the "a theorem would be false" signal and
/// must never be silenced.
class verification_error : public std::runtime_error {
public:
  explicit verification_error(const std::string& what, int degree = -1)
      : std::runtime_error(what), degree_(degree) {}
  int degree() const { return degree_; }

private:
  int degree_;
};

}  // namespace gpalg
