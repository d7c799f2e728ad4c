#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "greedylab/spaces.hpp"

namespace greedylab {

/// Thrown when an exhaustive search would exceed its enumeration budget and no
/// structured fallback is available.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All greedy sets of order m for x: supports consisting of the largest moduli,
/// with ties enumerated.  When the tie class would produce more than `cap`
/// sets, enumeration stops and `truncated` is flagged.  When m exceeds the
/// support size the sets are padded with the smallest unused indices (every
/// zero coefficient ties), also flagged as truncated.
struct GreedySetFamily {
  std::size_t order;
  std::vector<std::vector<Index>> sets;
  bool truncated;
};
GreedySetFamily greedy_sets(const SparseVector& x, std::size_t m,
                            std::size_t cap = 10000);

/// A value that may be a certified-exact quantity or a lower bound obtained
/// from a truncated enumeration.
struct ErrorValue {
  double value;
  bool truncated;  // true => value is only a lower bound
};

/// gamma_m(x): worst projection residual ||x - P_A x|| over greedy sets A.
ErrorValue gamma_error(const SequenceSpace& space, const SparseVector& x,
                       std::size_t m, std::size_t cap = 10000);

/// beta_m(x) = ||x - S_m x||.
double beta_error(const SequenceSpace& space, const SparseVector& x, Index m);

enum class TruncationKind { Restricted, Full };

/// Restricted truncation U(x, A): every coordinate in A is replaced by the
/// common modulus min_{n in A} |x_n| with the original sign.  Full truncation
/// T(x, A) = U(x, A) + (x off A).  A must meet supp(x); coordinates of A
/// outside the support contribute zero modulus, making U degenerate (flagged).
struct TruncationResult {
  SparseVector vector;
  TruncationKind kind;
  bool degenerate;
};
TruncationResult truncate(const SparseVector& x, const std::vector<Index>& A,
                          TruncationKind kind);

/// A_p = 1 / (2^p - 1)^{1/p}.
double a_p(double p);

/// eta_p(u) = min_{0<t<1} (1-t^p)^{-1/p} (1 - (1 + t/(A_p u))^{-p})^{-1/p},
/// evaluated by golden-section refinement of the unimodal objective.
double eta_p(double u, double p);

/// Empirical quasi-greedy constant: sup over the sample, m, and greedy sets of
/// ||x - P_A x|| / ||x||.
double quasi_greedy_estimate(const SequenceSpace& space,
                             const std::vector<SparseVector>& sample,
                             std::size_t cap = 10000);

}  // namespace greedylab
