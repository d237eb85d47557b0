#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "subbundles/count.hpp"
#include "subbundles/errors.hpp"
#include "subbundles/invariants.hpp"

namespace subbundles {

/// A labeled count vector: one entry per parity/state class of the counting
/// problem, in a fixed order.
template <typename Scalar>
struct StateVector {
  DenseVector<Scalar> entries;
  std::vector<std::string> labels;  ///< state names, e.g. {"even", "odd"}

  void validate() const {
    if (entries.size() < 1 || static_cast<std::size_t>(entries.size()) != labels.size()) {
      throw InvalidArgumentError("state vector needs matching entries and labels, length >= 1");
    }
  }

  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.labels == b.labels && a.entries.size() == b.entries.size() &&
           a.entries == b.entries;
  }
};

/// One genus increment of a degeneration recursion: the counts at genus 1
/// and a square nonnegative integer matrix whose application moves the count
/// vector from genus g to genus g + 1.
template <typename Scalar>
struct TransferSystem {
  DenseMatrix<Scalar> matrix;
  StateVector<Scalar> base;

  Eigen::Index dimension() const { return matrix.rows(); }

  void validate() const {
    base.validate();
    if (matrix.rows() != matrix.cols() || matrix.rows() != base.entries.size()) {
      throw InvalidArgumentError("transfer system needs a square matrix matching the base length");
    }
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
      for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
        if (matrix(i, j) < Scalar(0)) {
          throw InvalidArgumentError("transfer matrix entries must be nonnegative");
        }
      }
    }
    for (Eigen::Index i = 0; i < base.entries.size(); ++i) {
      if (base.entries(i) < Scalar(0)) {
        throw InvalidArgumentError("base counts must be nonnegative");
      }
    }
  }
};

/// Applies one genus increment: matrix * state, exactly.
template <typename Scalar>
StateVector<Scalar> step(const TransferSystem<Scalar>& system, const StateVector<Scalar>& state) {
  system.validate();
  if (state.entries.size() != system.dimension()) {
    throw InvalidArgumentError("step: state length " + std::to_string(state.entries.size()) +
                               " does not match system dimension " +
                               std::to_string(system.dimension()));
  }
  return {system.matrix * state.entries, system.base.labels};
}

/// Count vector at the given genus by naive iteration: the base for g = 1,
/// otherwise step applied g - 1 times. This is the induction transcribed
/// literally, and doubles as the oracle for the matrix-power path.
template <typename Scalar>
StateVector<Scalar> iterate(const TransferSystem<Scalar>& system, std::int64_t genus) {
  system.validate();
  if (genus < 1) {
    throw InvalidArgumentError("iterate: genus must be >= 1, got " + std::to_string(genus));
  }
  StateVector<Scalar> state = system.base;
  for (std::int64_t i = 1; i < genus; ++i) {
    state = step(system, state);
  }
  return state;
}

/// matrix^n by exponentiation by squaring; n = 0 gives the identity.
template <typename Scalar>
DenseMatrix<Scalar> mat_pow(const DenseMatrix<Scalar>& matrix, std::int64_t n) {
  if (matrix.rows() != matrix.cols()) {
    throw InvalidArgumentError("mat_pow: matrix must be square");
  }
  if (n < 0) {
    throw InvalidArgumentError("mat_pow: exponent must be >= 0, got " + std::to_string(n));
  }
  DenseMatrix<Scalar> result = DenseMatrix<Scalar>::Identity(matrix.rows(), matrix.cols());
  DenseMatrix<Scalar> square = matrix;
  for (std::int64_t remaining = n; remaining > 0; remaining >>= 1) {
    if (remaining & 1) result = result * square;
    if (remaining > 1) square = square * square;
  }
  return result;
}

template <typename Scalar>
DenseMatrix<Scalar> mat_pow(const TransferSystem<Scalar>& system, std::int64_t n) {
  system.validate();
  return mat_pow(system.matrix, n);
}

/// Count vector at the given genus via matrix^(g-1) * base. Fast path for
/// large genus; must agree with iterate() everywhere.
template <typename Scalar>
StateVector<Scalar> count_at_genus(const TransferSystem<Scalar>& system, std::int64_t genus) {
  system.validate();
  if (genus < 1) {
    throw InvalidArgumentError("count_at_genus: genus must be >= 1, got " + std::to_string(genus));
  }
  return {mat_pow(system.matrix, genus - 1) * system.base.entries, system.base.labels};
}

/// Line subbundles of a generic rank-r bundle: one state, and each added
/// genus multiplies the count by r (the r degree-zero line subbundles on the
/// elliptic tail that glue with a fixed direction). Base: the genus-1 bundle
/// splits into r distinct line bundles.
inline TransferSystem<Count> line_subbundle_system(std::int64_t ambient_rank) {
  if (ambient_rank < 2) {
    throw UnsupportedRankPairError("line-subbundle counting needs ambient rank r >= 2, got " +
                                   std::to_string(ambient_rank));
  }
  CountMatrix matrix(1, 1);
  matrix(0, 0) = Count(ambient_rank);
  CountVector base(1);
  base(0) = Count(ambient_rank);
  return {matrix, {base, {"count"}}};
}

/// Rank-2 subbundles of a generic rank-4 bundle, states ordered (even d',
/// odd d'). Each added genus contributes 6 times the same-parity count (the
/// six rank-2 degree-0 subbundles on the elliptic tail) plus 2 times the
/// opposite-parity count (the two rank-2 degree-1 subbundles). Base: 6 even,
/// 2 odd at genus 1.
inline TransferSystem<Count> rank_two_of_four_system() {
  CountMatrix matrix(2, 2);
  matrix << 6, 2,
            2, 6;
  CountVector base(2);
  base << 6, 2;
  return {matrix, {base, {"even", "odd"}}};
}

inline TransferSystem<Count> transfer_system_for(const SupportedCase& c) {
  switch (c.kind) {
    case SupportedCase::Kind::line_subbundle:
      return line_subbundle_system(c.ambient_rank);
    case SupportedCase::Kind::rank_two_of_four:
      return rank_two_of_four_system();
  }
  throw UnsupportedRankPairError("unrecognized case kind");
}

/// Entry of a two-state (even, odd) count vector for the given parity.
inline const Count& parity_entry(const StateVector<Count>& state, Parity parity) {
  if (state.entries.size() != 2) {
    throw InvalidArgumentError("parity_entry: expected a two-state (even, odd) vector");
  }
  return state.entries(parity == Parity::even ? 0 : 1);
}

}  // namespace subbundles
