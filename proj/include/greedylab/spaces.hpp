#pragma once

#include <string>
#include <vector>

#include "greedylab/sparse_vector.hpp"

namespace greedylab {

enum class SpaceKind { Lp, SummingC0, DifferenceL1, SchreierMod, MixNorm };

/// One of the bundled sequence-space norms.  All bundled spaces are normalized
/// so that ||e_n|| = 1 for every n and the coordinate functionals have norm <= C.
class SequenceSpace {
public:
  static SequenceSpace lp(double p);
  static SequenceSpace summing();
  static SequenceSpace difference();
  static SequenceSpace schreier();
  static SequenceSpace mixnorm();

  /// Parses CLI-style names: "lp:2", "summing", "difference", "schreier", "mixnorm".
  static SequenceSpace parse(const std::string& name);

  SpaceKind kind() const { return kind_; }
  double p() const { return p_; }
  std::string name() const;

  /// True when the canonical basis is 1-unconditional for this norm.
  bool unconditional() const;

  /// Quasi-norm constant kappa in ||x+y|| <= kappa(||x|| + ||y||).
  double kappa() const;

  /// Exact partial-sum (basis) constant sup_m ||S_m||.
  double basis_constant() const { return 1.0; }

  /// p-convexity exponent used in power-type triangle inequalities.
  double p_convexity() const;

  double norm(const SparseVector& x) const;
  double norm(const SignedSet& s) const { return norm(s.indicator()); }

private:
  SequenceSpace(SpaceKind k, double p) : kind_(k), p_(p) {}
  SpaceKind kind_;
  double p_;
};

/// Empirical sup over the sample of ||S_m x|| / ||x||; a lower bound for the
/// basis constant that the bundled spaces attain exactly (= 1).
double basis_constant_estimate(const SequenceSpace& space,
                               const std::vector<SparseVector>& sample);

}  // namespace greedylab
