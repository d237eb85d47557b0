#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "subbundles/closed_forms.hpp"
#include "subbundles/count.hpp"
#include "subbundles/errors.hpp"
#include "subbundles/invariants.hpp"
#include "subbundles/recurrence.hpp"

namespace subbundles {

/// The four computation paths for a count. They share no code: the
/// recurrence iterates the transfer system step by step, the matrix power
/// collapses the iteration with exponentiation by squaring, and the two
/// closed forms never touch the matrix at all.
enum class Method { recurrence, matrix_power, binomial_sum, eigen_form };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::recurrence: return "recurrence";
    case Method::matrix_power: return "matrix-power";
    case Method::binomial_sum: return "binomial-sum";
    case Method::eigen_form: return "eigen-form";
  }
  return "unknown";
}

inline std::optional<Method> method_from_string(std::string_view s) {
  if (s == "recurrence") return Method::recurrence;
  if (s == "matrix-power") return Method::matrix_power;
  if (s == "binomial-sum") return Method::binomial_sum;
  if (s == "eigen-form") return Method::eigen_form;
  return std::nullopt;
}

/// Number of maximal subbundles for a solved instance, via one chosen path.
/// For the line case both closed-form methods evaluate r^g directly (the
/// one-state transfer matrix [r] has eigenvalue r, so the forms coincide).
inline Count count_maximal_subbundles(const SolvedProblem& solved, Method method) {
  const SupportedCase c = SupportedCase::classify(solved.problem);
  const std::int64_t g = solved.problem.g;
  if (c.kind == SupportedCase::Kind::line_subbundle) {
    switch (method) {
      case Method::recurrence:
        return iterate(line_subbundle_system(c.ambient_rank), g).entries(0);
      case Method::matrix_power:
        return count_at_genus(line_subbundle_system(c.ambient_rank), g).entries(0);
      case Method::binomial_sum:
      case Method::eigen_form:
        return count_line_subbundles(c.ambient_rank, g);
    }
  } else {
    switch (method) {
      case Method::recurrence:
        return parity_entry(iterate(rank_two_of_four_system(), g), solved.parity);
      case Method::matrix_power:
        return parity_entry(count_at_genus(rank_two_of_four_system(), g), solved.parity);
      case Method::binomial_sum:
        return binomial_sum_count(g, solved.parity);
      case Method::eigen_form:
        return eigen_form_count(g, solved.parity);
    }
  }
  throw InvalidArgumentError("unrecognized method");
}

/// What a count command reports: the instance echo, the count as an exact
/// integer, which path produced it, and whether every executed path agreed.
struct OutputRecord {
  SolvedProblem instance;
  Count count;
  Method method = Method::recurrence;
  bool agreement = true;

  bool operator==(const OutputRecord&) const = default;
};

/// Runs all four paths and cross-checks them. The reported count is the
/// recurrence value; agreement is the conjunction over the other paths.
inline OutputRecord count_with_all_methods(const SolvedProblem& solved) {
  const Count reference = count_maximal_subbundles(solved, Method::recurrence);
  bool agreement = true;
  for (Method m : {Method::matrix_power, Method::binomial_sum, Method::eigen_form}) {
    agreement = agreement && count_maximal_subbundles(solved, m) == reference;
  }
  return OutputRecord{solved, reference, Method::recurrence, agreement};
}

}  // namespace subbundles
