#ifndef FERMAT_ERROR_HPP
#define FERMAT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace fermat {

enum class Errc {
  non_prime_exponent,
  zero_coefficient,
  not_coprime,
  not_power_free,
  not_a_solution,
  zero_x,
  not_on_curve,
  zero_coordinate,
  bad_input,
  io_failure,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

/// One violated equation constraint; `subject` names the offending
/// coefficient(s), e.g. "A" or "A,B".
struct Violation {
  Errc code;
  std::string subject;
  std::string message;
};

class ValidationError : public Error {
public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

private:
  std::vector<Violation> violations_;
};

} // namespace fermat

#endif
