#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subbundles/count.hpp"
#include "subbundles/errors.hpp"
#include "subbundles/invariants.hpp"
#include "subbundles/recurrence.hpp"

namespace subbundles {

/// Annotation attached to the (1, d') split. That split never contributes:
/// the elliptic side carries finitely many rank-2 subbundles of degree 1,
/// the genus-g side finitely many of degree d', and a generic gluing of the
/// two curves identifies none of the first set with the second.
inline constexpr std::string_view kGenericGluingExclusion =
    "no contribution: the elliptic side has finitely many degree-1 subbundles and the "
    "other side finitely many of degree d'; a generic gluing matches none of them";

/// Count of maximal subbundles on a genus-1 curve, the base of every
/// degeneration. Line case: the generic bundle splits into r distinct line
/// bundles, so r. Rank-2-of-4: 6 for even d' (choices of two line summands
/// out of four), 2 for odd d' (the two indecomposable rank-2 summands).
inline Count genus_one_base(const SupportedCase& c, Parity parity) {
  switch (c.kind) {
    case SupportedCase::Kind::line_subbundle:
      return Count(c.ambient_rank);
    case SupportedCase::Kind::rank_two_of_four:
      return parity == Parity::even ? Count(6) : Count(2);
  }
  throw UnsupportedRankPairError("unrecognized case kind");
}

/// One degree-splitting contribution to a genus-g count. The subbundle's
/// degree d' splits across the node into elliptic_degree on the genus-1 tail
/// and d' + genus_side_offset on the genus-(g-1) side.
struct ContributionRecord {
  std::int64_t elliptic_degree = 0;    ///< 0 or 1
  std::int64_t genus_side_offset = 0;  ///< 0 for split (·, d'), -1 for (·, d'-1)
  Count elliptic_count;                ///< subbundles on the elliptic tail gluing with a fixed subspace
  Count recursive_count;               ///< maximal subbundles on the genus-(g-1) side
  Count product;                       ///< contribution; 0 when excluded
  bool excluded = false;
  std::string reason;                  ///< nonempty iff excluded

  bool operator==(const ContributionRecord&) const = default;
};

/// The audited decomposition of a genus-g count into degree-splitting
/// contributions: one record per split, a fixed exclusion record for the
/// split ruled out by genericity, and the total they sum to.
struct TraceTree {
  SupportedCase trace_case;
  Parity parity = Parity::even;  ///< parity of d' at this genus
  std::int64_t genus = 0;
  std::optional<std::int64_t> d_prime;  ///< concrete degree, when built from a SolvedProblem
  std::vector<ContributionRecord> records;
  Count total;

  bool operator==(const TraceTree&) const = default;
};

/// Sum of the non-excluded products. Recomputed from the records so tests
/// can hold it against the tree's stored total and against the recurrence.
inline Count trace_total(const TraceTree& tree) {
  Count total(0);
  for (const auto& record : tree.records) {
    if (!record.excluded) total += record.product;
  }
  return total;
}

/// Unrolls one induction step at the given genus: genus-1 counts on an
/// elliptic tail times genus-(g-1) counts on the rest, one record per degree
/// split. Splits are abstract pairs (0, d') / (1, d'-1); only the parity of
/// d' matters for the counts. The (1, d'-1) split draws its recursive count
/// from the opposite parity, since d' - 1 flips class.
inline TraceTree build_trace(const SupportedCase& c, Parity parity, std::int64_t genus) {
  if (genus < 2) {
    throw InvalidArgumentError("build_trace: needs genus >= 2 (genus 1 is the base case), got " +
                               std::to_string(genus));
  }
  const TransferSystem<Count> system = transfer_system_for(c);
  const StateVector<Count> inner = iterate(system, genus - 1);

  TraceTree tree{c, parity, genus, std::nullopt, {}, Count(0)};
  if (c.kind == SupportedCase::Kind::line_subbundle) {
    // Semistability pins the elliptic-side degree to 0, so there is exactly
    // one split and nothing to exclude.
    const Count elliptic = genus_one_base(c, parity);
    const Count recursive = inner.entries(0);
    tree.records.push_back({0, 0, elliptic, recursive, elliptic * recursive, false, ""});
  } else {
    const Count even_tail = genus_one_base(c, Parity::even);  // 6, degree 0 on the tail
    const Count odd_tail = genus_one_base(c, Parity::odd);    // 2, degree 1 on the tail
    const Count& same = parity_entry(inner, parity);
    const Count& flipped = parity_entry(inner, opposite(parity));
    tree.records.push_back({0, 0, even_tail, same, even_tail * same, false, ""});
    tree.records.push_back({1, -1, odd_tail, flipped, odd_tail * flipped, false, ""});
    tree.records.push_back(
        {1, 0, odd_tail, same, Count(0), true, std::string(kGenericGluingExclusion)});
  }
  tree.total = trace_total(tree);
  return tree;
}

/// Same trace with the concrete d' of a solved instance filled in, so the
/// splits serialize as actual degree pairs.
inline TraceTree build_trace(const SolvedProblem& solved) {
  const SupportedCase c = SupportedCase::classify(solved.problem);
  TraceTree tree = build_trace(c, solved.parity, solved.problem.g);
  tree.d_prime = solved.d_prime;
  return tree;
}

/// Concrete (elliptic side, genus side) degree pair of a record. Only
/// defined for traces built from a SolvedProblem.
inline std::pair<std::int64_t, std::int64_t> concrete_split(const TraceTree& tree,
                                                            const ContributionRecord& record) {
  if (!tree.d_prime) {
    throw InvalidArgumentError("trace has no concrete d'; build it from a SolvedProblem");
  }
  return {record.elliptic_degree, *tree.d_prime + record.genus_side_offset};
}

}  // namespace subbundles
