#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "greedylab/greedy.hpp"
#include "greedylab/spaces.hpp"

namespace greedylab {

/// Value of a democracy-type extremal problem together with the witness set
/// that attains it.  `exhaustive` is false when the enumeration budget forced
/// a structured candidate search (progressions and canonical sign patterns),
/// in which case the value bounds the true extremum from the feasible side
/// (below for sups, above for infs).
struct DemocracyReport {
  std::size_t m;
  std::optional<Index> u;
  Index horizon;
  double value;
  SignedSet witness;
  bool exhaustive;
};

/// Whether an extremal search ranges over sign patterns or constant signs.
/// The general definitions are signed; Unsigned reproduces computations that
/// restrict to plain indicators 1_A.
enum class SignMode { Signed, Unsigned };

/// h_r(m) = sup over |A| <= m, A within [1, horizon], and signs of ||1_{eps A}||.
DemocracyReport h_right(const SequenceSpace& space, std::size_t m,
                        Index horizon, std::size_t budget = 2000000,
                        SignMode mode = SignMode::Signed);

/// h_l(m) = min over |A| = m within [1, horizon] and signs of ||1_{eps A}||.
/// (The size-exact variant; it coincides with the inf over |A| >= m up to the
/// basis constant, which is 1 for every bundled space.)
DemocracyReport h_left(const SequenceSpace& space, std::size_t m, Index horizon,
                       std::size_t budget = 2000000,
                       SignMode mode = SignMode::Signed);

enum class Side { Left, Right };

/// Restricted democracy functions:
///   Left:  h_{R,l}(m, u) = sup over |A| = m with max A <= u
///   Right: h_{R,r}(m, u) = min over |A| = m with min A > u
/// The right search extends its own horizon to at least u + 4m + 4 so the
/// minimum is not clipped.
DemocracyReport h_restricted(const SequenceSpace& space, std::size_t m, Index u,
                             Side side, Index horizon,
                             std::size_t budget = 2000000,
                             SignMode mode = SignMode::Signed);

/// sup over m <= m_max of h_r(m) / h_l(m).
double superdemocracy_ratio(const SequenceSpace& space, std::size_t m_max,
                            Index horizon);

/// sup over m <= m_max, m <= u <= horizon/2 of h_{R,l}(m,u) / h_{R,r}(m,u).
double superconservative_ratio(const SequenceSpace& space, std::size_t m_max,
                               Index horizon);

/// Property (W): for every n <= n_max and m in [n, m_max] there is a signed
/// set of size n beyond m with norm >= h_r(n) / C.
struct PropertyWReport {
  bool holds;
  double constant;  // smallest C observed to work on the scan
  std::map<std::pair<std::size_t, std::size_t>, SignedSet> witnesses;
};
PropertyWReport check_property_w(const SequenceSpace& space, std::size_t n_max,
                                 std::size_t m_max, Index horizon);

/// Property (W*): a constant c1 such that every m <= m_max has a signed set of
/// size m inside [1, c1 * m] with norm <= c2 * h_l(m); reports the smallest
/// stable (c1, c2) pair found on the scan.
struct PropertyWstarReport {
  bool holds;
  double c1;
  double c2;
  std::vector<SignedSet> witnesses;  // one per m = 1..m_max
};
PropertyWstarReport check_property_wstar(const SequenceSpace& space,
                                         std::size_t m_max, Index horizon,
                                         int c1_max = 4);

/// Property (I) for a candidate characteristic function psi:
///   part 1: h_{R,r}(2^{l+1} u, u) <= C h_{R,r}(2^l u, u) on the scan grid,
///   part 2: h_{R,r}(u, u) <= C h_{R,r}(m, u) whenever u <= psi(m).
struct PropertyIReport {
  bool holds;
  double part1_worst;
  double part2_worst;
};
PropertyIReport check_property_i(const SequenceSpace& space,
                                 const std::function<Index(std::size_t)>& psi,
                                 int l_max, Index u_max, Index horizon,
                                 double tolerance_constant = 8.0);

/// Smallest u >= m with h_r(m) <= 2 h_{R,l}(m, u); throws when no u within the
/// horizon works.
Index characteristic_psi(const SequenceSpace& space, std::size_t m,
                         Index horizon);

}  // namespace greedylab
