#pragma once

#include <cstdint>
#include <utility>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "subbundles/closed_forms.hpp"
#include "subbundles/count.hpp"
#include "subbundles/errors.hpp"
#include "subbundles/recurrence.hpp"

namespace subbundles {

struct IdentityCheck {
  std::string name;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::vector<std::int64_t> failing_genera;  ///< first few offenders, for the report
};

struct VerificationReport {
  std::int64_t max_genus = 0;
  std::vector<IdentityCheck> checks;

  bool all_passed() const {
    for (const auto& check : checks) {
      if (check.failed > 0) return false;
    }
    return true;
  }
};

/// Sweeps genus 1..max_genus and checks, for each genus, that the four
/// computation paths agree (iterated recurrence, matrix power, binomial sum,
/// eigenvalue form) and that the derived sum/difference/factored identities
/// hold. The paths share no code, so agreement across the sweep is the
/// library's strongest self-check; any perturbation of the transfer system
/// shows up as failed identities.
inline VerificationReport run_verification(const TransferSystem<Count>& system,
                                           std::int64_t max_genus) {
  if (max_genus < 1) {
    throw InvalidArgumentError("verification needs max genus >= 1, got " +
                               std::to_string(max_genus));
  }
  system.validate();
  if (system.dimension() != 2) {
    throw InvalidArgumentError("the identity suite is defined for two-state (even, odd) systems");
  }

  VerificationReport report;
  report.max_genus = max_genus;
  for (const char* name : {"recurrence-vs-matrix-power", "recurrence-vs-binomial-sum",
                           "recurrence-vs-eigen-form", "sum-identity-8^g",
                           "difference-identity-4^g", "factored-form-even",
                           "factored-form-odd"}) {
    IdentityCheck check;
    check.name = name;
    report.checks.push_back(std::move(check));
  }
  auto record = [&report](std::size_t index, std::int64_t genus, bool ok) {
    IdentityCheck& check = report.checks[index];
    if (ok) {
      ++check.passed;
    } else {
      ++check.failed;
      if (check.failing_genera.size() < 8) check.failing_genera.push_back(genus);
    }
  };

  StateVector<Count> state = system.base;
  for (std::int64_t g = 1; g <= max_genus; ++g) {
    if (g > 1) state = step(system, state);
    const Count& even_count = state.entries(0);
    const Count& odd_count = state.entries(1);

    const StateVector<Count> powered = count_at_genus(system, g);
    record(0, g, powered == state);

    record(1, g,
           even_count == binomial_sum_count(g, Parity::even) &&
               odd_count == binomial_sum_count(g, Parity::odd));
    record(2, g,
           even_count == eigen_form_count(g, Parity::even) &&
               odd_count == eigen_form_count(g, Parity::odd));

    record(3, g, even_count + odd_count == pow(Count(8), g));
    record(4, g, even_count - odd_count == pow(Count(4), g));

    const Count half_power = pow(Count(2), 2 * g - 1);
    record(5, g, even_count == half_power * (pow(Count(2), g) + Count(1)));
    record(6, g, odd_count == half_power * (pow(Count(2), g) - Count(1)));
  }
  return report;
}

/// One line per identity with its pass count, then an overall verdict.
/// Genus-ordered and deterministic.
inline void write_report(std::ostream& os, const VerificationReport& report) {
  os << "identity sweep over genus 1.." << report.max_genus << "\n";
  for (const auto& check : report.checks) {
    os << "  " << std::left << std::setw(28) << check.name << std::right << check.passed << "/"
       << (check.passed + check.failed);
    if (check.failed > 0) {
      os << "  FAILED at genus";
      for (std::int64_t genus : check.failing_genera) os << " " << genus;
      if (check.failed > static_cast<std::int64_t>(check.failing_genera.size())) os << " ...";
    }
    os << "\n";
  }
  os << "result: " << (report.all_passed() ? "PASS" : "FAIL") << "\n";
}

}  // namespace subbundles
