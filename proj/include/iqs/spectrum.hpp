#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "iqs/model.hpp"

namespace iqs {

enum class Method { Tra, Laguerre, FiniteDifference };

std::string_view to_string(Method m);
/// Accepts "tra", "laguerre", "fd" (case-insensitive). Throws DomainError otherwise.
Method parse_method(std::string_view name);

using DiagnosticValue = std::variant<long long, double, std::string, std::vector<double>>;
using Diagnostics = std::map<std::string, DiagnosticValue>;

/// Bound-state energies (negative, strictly increasing) produced by one solver run.
struct SpectrumResult {
  Method method;
  PotentialParams params;
  std::vector<double> energies;
  Diagnostics diagnostics;

  std::size_t count() const noexcept { return energies.size(); }
};

/// Throws InvariantViolation unless every energy is negative and the sequence strictly increases.
void check_spectrum(const SpectrumResult& s);

}  // namespace iqs
