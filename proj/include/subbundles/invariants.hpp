#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "subbundles/count.hpp"
#include "subbundles/errors.hpp"

namespace subbundles {

/// Parity class of the subbundle degree d'. The rank-2-of-4 counts split by
/// this class and by nothing else.
enum class Parity { even, odd };

inline Parity parity_of(std::int64_t n) {
  return n % 2 == 0 ? Parity::even : Parity::odd;
}

inline Parity opposite(Parity p) {
  return p == Parity::even ? Parity::odd : Parity::even;
}

inline std::string_view to_string(Parity p) {
  return p == Parity::even ? "even" : "odd";
}

inline Parity parity_from_string(std::string_view s) {
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  throw Error("unknown parity '" + std::string(s) + "' (expected 'even' or 'odd')");
}

/// A counting instance: a generic rank-r degree-d bundle on a genus-g curve,
/// and the rank r' of the subbundles to count. Only these numeric invariants
/// are modeled; no geometric objects appear anywhere in the library.
struct SubbundleProblem {
  std::int64_t r = 0;        ///< ambient rank, >= 2
  std::int64_t d = 0;        ///< ambient degree, any sign
  std::int64_t r_prime = 0;  ///< subbundle rank, 1 <= r' < r
  std::int64_t g = 0;        ///< genus, >= 1

  void validate() const {
    if (r < 2) {
      throw InvalidInstanceError("invalid instance: ambient rank r must be >= 2, got " +
                                 std::to_string(r));
    }
    if (r_prime < 1 || r_prime >= r) {
      throw InvalidInstanceError("invalid instance: subbundle rank r' must satisfy 1 <= r' < r, got r' = " +
                                 std::to_string(r_prime) + " with r = " + std::to_string(r));
    }
    if (g < 1) {
      throw InvalidInstanceError("invalid instance: genus g must be >= 1, got " + std::to_string(g));
    }
  }

  bool operator==(const SubbundleProblem&) const = default;
};

/// A problem together with the unique subbundle degree d' forced by the
/// finiteness condition, and the parity class of that degree.
struct SolvedProblem {
  SubbundleProblem problem;
  std::int64_t d_prime = 0;
  Parity parity = Parity::even;

  bool operator==(const SolvedProblem&) const = default;
};

/// The two rank pairs the counting method covers. Everything else is
/// rejected up front.
struct SupportedCase {
  enum class Kind { line_subbundle, rank_two_of_four };

  Kind kind = Kind::line_subbundle;
  std::int64_t ambient_rank = 0;  ///< r; always 4 for rank_two_of_four

  static SupportedCase line_subbundle(std::int64_t r) {
    if (r < 2) {
      throw UnsupportedRankPairError("line-subbundle counting needs ambient rank r >= 2, got " +
                                     std::to_string(r));
    }
    return {Kind::line_subbundle, r};
  }

  static SupportedCase rank_two_of_four() { return {Kind::rank_two_of_four, 4}; }

  static SupportedCase classify(const SubbundleProblem& p) {
    p.validate();
    if (p.r_prime == 1) return line_subbundle(p.r);
    if (p.r == 4 && p.r_prime == 2) return rank_two_of_four();
    throw UnsupportedRankPairError(
        "no counting method for rank pair (r = " + std::to_string(p.r) +
        ", r' = " + std::to_string(p.r_prime) + "); supported: r' = 1, or (r, r') = (4, 2)");
  }

  bool operator==(const SupportedCase&) const = default;
};

namespace detail {

// Exact value of the finiteness condition's two sides; big arithmetic so
// extreme int64 inputs cannot overflow.
inline Count condition_lhs(std::int64_t r, std::int64_t d, std::int64_t r_prime,
                           std::int64_t d_prime) {
  return Count(r_prime) * Count(d) - Count(r) * Count(d_prime);
}

inline Count condition_rhs(std::int64_t r, std::int64_t r_prime, std::int64_t g) {
  return Count(r_prime) * Count(r - r_prime) * Count(g - 1);
}

}  // namespace detail

/// True iff r'd - rd' = r'(r - r')(g - 1), the condition under which a
/// generic bundle has finitely many maximal subbundles of rank r' and
/// degree d'. Malformed ranks or genus raise InvalidInstanceError.
inline bool check_finiteness(std::int64_t r, std::int64_t d, std::int64_t r_prime,
                             std::int64_t d_prime, std::int64_t g) {
  SubbundleProblem{r, d, r_prime, g}.validate();
  return detail::condition_lhs(r, d, r_prime, d_prime) == detail::condition_rhs(r, r_prime, g);
}

/// Solves the finiteness condition for the unique integer d'. Instances
/// where d' would be fractional are ill-posed for counting and raise
/// NoValidDPrimeError; they are never reported as a zero count.
inline SolvedProblem solve_dprime(const SubbundleProblem& p) {
  p.validate();
  const Count numerator = Count(p.r_prime) * Count(p.d) - detail::condition_rhs(p.r, p.r_prime, p.g);
  if (numerator % Count(p.r) != Count(0)) {
    throw NoValidDPrimeError("no integer d' satisfies r'd - rd' = r'(r - r')(g - 1) for r = " +
                             std::to_string(p.r) + ", d = " + std::to_string(p.d) +
                             ", r' = " + std::to_string(p.r_prime) + ", g = " + std::to_string(p.g));
  }
  const std::int64_t d_prime = (numerator / Count(p.r)).to_int64();
  return SolvedProblem{p, d_prime, parity_of(d_prime)};
}

/// Dimension of the family of pairs (rank-r degree-d bundle, map of its fiber
/// at a point onto a k-dimensional space): r^2(g - 1) + 1 + rk.
inline std::int64_t family_dimension(std::int64_t r, std::int64_t g, std::int64_t k) {
  if (r < 1 || g < 1 || k < 0) {
    throw InvalidArgumentError("family_dimension: need r >= 1, g >= 1, k >= 0");
  }
  return (Count(r) * Count(r) * Count(g - 1) + Count(1) + Count(r) * Count(k)).to_int64();
}

/// Dimension of the set a rank-r bundle of fixed degree moves in:
/// r^2(g - 1) + 1. Computed independently of family_dimension on purpose;
/// their agreement at k = 0 is a tested identity, not a definition.
inline std::int64_t moduli_dimension(std::int64_t r, std::int64_t g) {
  if (r < 1 || g < 1) {
    throw InvalidArgumentError("moduli_dimension: need r >= 1, g >= 1");
  }
  return (Count(r) * Count(r) * Count(g - 1) + Count(1)).to_int64();
}

}  // namespace subbundles
