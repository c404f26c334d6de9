#include "fermat/error.hpp"

namespace fermat {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::non_prime_exponent: return "non_prime_exponent";
    case Errc::zero_coefficient: return "zero_coefficient";
    case Errc::not_coprime: return "not_coprime";
    case Errc::not_power_free: return "not_power_free";
    case Errc::not_a_solution: return "not_a_solution";
    case Errc::zero_x: return "zero_x";
    case Errc::not_on_curve: return "not_on_curve";
    case Errc::zero_coordinate: return "zero_coordinate";
    case Errc::bad_input: return "bad_input";
    case Errc::io_failure: return "io_failure";
  }
  return "unknown";
}

namespace {

std::string join_messages(const std::vector<Violation>& vs) {
  std::string out = "invalid equation:";
  for (const auto& v : vs) {
    out += " [";
    out += errc_name(v.code);
    if (!v.subject.empty()) {
      out += " ";
      out += v.subject;
    }
    out += ": " + v.message + "]";
  }
  return out;
}

} // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(violations.empty() ? Errc::bad_input : violations.front().code,
            join_messages(violations)),
      violations_(std::move(violations)) {}

} // namespace fermat
