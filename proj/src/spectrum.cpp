#include "iqs/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "iqs/errors.hpp"

namespace iqs {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Tra:
      return "tra";
    case Method::Laguerre:
      return "laguerre";
    case Method::FiniteDifference:
      return "fd";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "tra") return Method::Tra;
  if (lower == "laguerre") return Method::Laguerre;
  if (lower == "fd") return Method::FiniteDifference;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

void check_spectrum(const SpectrumResult& s) {
  for (std::size_t k = 0; k < s.energies.size(); ++k) {
    if (!(s.energies[k] < 0.0)) throw InvariantViolation("spectrum contains a non-negative energy");
    if (k > 0 && !(s.energies[k] > s.energies[k - 1])) {
      throw InvariantViolation("spectrum energies are not strictly increasing");
    }
  }
}

}  // namespace iqs
