#pragma once

#include <cstdint>
#include <string>

#include "subbundles/count.hpp"
#include "subbundles/errors.hpp"
#include "subbundles/invariants.hpp"

namespace subbundles {

/// Exact binomial coefficient C(n, k) by the multiplicative rule; every
/// intermediate division is exact, so nothing ever overflows or truncates.
inline Count binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw InvalidArgumentError("binomial: n must be >= 0, got " + std::to_string(n));
  if (k < 0 || k > n) return Count(0);
  if (k > n - k) k = n - k;
  Count result(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    result = exact_div(result * Count(n - k + i), Count(i));
  }
  return result;
}

/// Number of maximal-degree line subbundles of a generic rank-r bundle on a
/// genus-g curve: r^g.
inline Count count_line_subbundles(std::int64_t r, std::int64_t g) {
  if (r < 2) throw InvalidArgumentError("count_line_subbundles: need r >= 2, got " + std::to_string(r));
  if (g < 1) throw InvalidArgumentError("count_line_subbundles: need g >= 1, got " + std::to_string(g));
  return pow(Count(r), g);
}

namespace detail {

// Sum over j in [0, g] with j of the requested parity of
// C(g, j) * 6^(g-j) * 2^j. Filtering by the parity of j subsumes both
// endpoint conventions of the alternating closed forms, so there is no
// off-by-one at the top of the sum. All updates are exact divisions.
inline Count parity_filtered_power_sum(std::int64_t g, Parity j_parity) {
  if (g < 1) throw InvalidArgumentError("closed form needs genus >= 1, got " + std::to_string(g));
  Count coefficient(1);               // C(g, j), updated multiplicatively
  Count six_power = pow(Count(6), g); // 6^(g-j), descending
  Count two_power(1);                 // 2^j, ascending
  Count total(0);
  for (std::int64_t j = 0; j <= g; ++j) {
    if (parity_of(j) == j_parity) {
      total += coefficient * six_power * two_power;
    }
    if (j < g) {
      coefficient = exact_div(coefficient * Count(g - j), Count(j + 1));
      six_power = exact_div(six_power, Count(6));
      two_power *= Count(2);
    }
  }
  return total;
}

}  // namespace detail

/// Binomial-sum closed form of the rank-2-of-4 count. Even parity of d'
/// picks the even-j terms of (6 + 2)^g, odd parity the odd-j terms.
inline Count binomial_sum_count(std::int64_t g, Parity parity) {
  return detail::parity_filtered_power_sum(g, parity);
}

/// Eigenvalue closed form of the same counts. Diagonalizing the transfer
/// matrix [[6, 2], [2, 6]] gives eigenvalues 8 and 4, hence
/// (8^g + 4^g) / 2 for even d' and (8^g - 4^g) / 2 for odd d'; both
/// divisions are exact.
inline Count eigen_form_count(std::int64_t g, Parity parity) {
  if (g < 1) throw InvalidArgumentError("closed form needs genus >= 1, got " + std::to_string(g));
  const Count large = pow(Count(8), g);
  const Count small = pow(Count(4), g);
  return parity == Parity::even ? exact_div(large + small, Count(2))
                                : exact_div(large - small, Count(2));
}

/// Number of maximal rank-2 subbundles of a generic rank-4 bundle at the
/// given genus and parity of d', via the binomial-sum form.
inline Count count_rank_two_of_four(std::int64_t g, Parity parity) {
  return binomial_sum_count(g, parity);
}

}  // namespace subbundles
