#include "greedylab/democracy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace greedylab {

namespace {

bool sign_invariant(const SequenceSpace& space) { return space.unconditional(); }

double binom(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double b = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    b *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (b > 1e18) return b;
  }
  return b;
}

struct ExtremalResult {
  double value;
  SignedSet witness;
  bool exhaustive;
};

enum class Patterns { PlusOnly, Canonical, All };

template <typename Consume>
void visit_sign_patterns(const std::vector<Index>& A, Patterns pat,
                         Consume consume) {
  const std::size_t s = A.size();
  if (pat == Patterns::PlusOnly) {
    consume(SignedSet::plus(A));
    return;
  }
  if (pat == Patterns::Canonical || s > 20) {
    consume(SignedSet::plus(A));
    consume(SignedSet::alternating(A));
    return;
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
    std::vector<int> signs(s);
    for (std::size_t k = 0; k < s; ++k) signs[k] = (mask >> k) & 1 ? -1 : 1;
    consume(SignedSet(A, std::move(signs)));
  }
}

// Canonical candidate families used when exhaustive enumeration is over
// budget: contiguous blocks at either end, arithmetic progressions of stride
// 2-4, and the parity classes (which matter for norms that treat even and odd
// coordinates differently).
std::vector<std::vector<Index>> structured_sets(Index lo, Index hi,
                                                std::size_t s) {
  std::vector<std::vector<Index>> out;
  auto progression = [&](Index start, Index stride) {
    if (start < lo || start + stride * static_cast<Index>(s - 1) > hi) return;
    std::vector<Index> A(s);
    for (std::size_t k = 0; k < s; ++k)
      A[k] = start + stride * static_cast<Index>(k);
    out.push_back(std::move(A));
  };
  if (s == 0) return out;
  progression(lo, 1);
  progression(hi - static_cast<Index>(s - 1), 1);
  for (Index stride = 2; stride <= 4; ++stride) progression(lo, stride);
  progression(lo % 2 == 1 ? lo : lo + 1, 2);  // odd coordinates
  progression(lo % 2 == 0 ? lo : lo + 1, 2);  // even coordinates
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Extremum of ||1_{eps A}|| over A within [lo, hi] with |A| ranging over
// `sizes`, and over sign patterns when requested and the norm is
// sign-sensitive.
ExtremalResult extremal(const SequenceSpace& space, Index lo, Index hi,
                        const std::vector<std::size_t>& sizes, bool maximize,
                        std::size_t budget, SignMode mode = SignMode::Signed) {
  const bool signs = mode == SignMode::Signed && !sign_invariant(space);
  const auto N = static_cast<std::size_t>(hi - lo + 1);
  double cost = 0.0;
  for (std::size_t s : sizes)
    cost += binom(N, s) * (signs ? std::pow(2.0, static_cast<double>(s)) : 1.0);

  ExtremalResult res;
  res.value = maximize ? -std::numeric_limits<double>::infinity()
                       : std::numeric_limits<double>::infinity();
  res.exhaustive = cost <= static_cast<double>(budget);

  auto consume = [&](const SignedSet& cand) {
    const double v = space.norm(cand);
    if (maximize ? v > res.value : v < res.value) {
      res.value = v;
      res.witness = cand;
    }
  };

  for (std::size_t s : sizes) {
    if (s == 0 || s > N) continue;
    if (res.exhaustive) {
      std::vector<std::size_t> idx(s);
      for (std::size_t i = 0; i < s; ++i) idx[i] = i;
      std::vector<Index> A(s);
      while (true) {
        for (std::size_t i = 0; i < s; ++i)
          A[i] = lo + static_cast<Index>(idx[i]);
        visit_sign_patterns(
            A, signs ? Patterns::All : Patterns::PlusOnly, consume);
        std::size_t i = s;
        bool advanced = false;
        while (i > 0) {
          --i;
          if (idx[i] != i + N - s) {
            ++idx[i];
            for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
    } else {
      for (const auto& A : structured_sets(lo, hi, s))
        visit_sign_patterns(A,
                            !signs          ? Patterns::PlusOnly
                            : s <= 12       ? Patterns::All
                                            : Patterns::Canonical,
                            consume);
    }
  }
  return res;
}

}  // namespace

DemocracyReport h_right(const SequenceSpace& space, std::size_t m,
                        Index horizon, std::size_t budget, SignMode mode) {
  std::vector<std::size_t> sizes;
  for (std::size_t s = 1; s <= m; ++s) sizes.push_back(s);
  auto r = extremal(space, 1, horizon, sizes, true, budget, mode);
  return {m, std::nullopt, horizon, r.value, r.witness, r.exhaustive};
}

DemocracyReport h_left(const SequenceSpace& space, std::size_t m, Index horizon,
                       std::size_t budget, SignMode mode) {
  if (static_cast<Index>(m) > horizon)
    throw std::invalid_argument("h_left: m exceeds horizon");
  auto r = extremal(space, 1, horizon, {m}, false, budget, mode);
  return {m, std::nullopt, horizon, r.value, r.witness, r.exhaustive};
}

DemocracyReport h_restricted(const SequenceSpace& space, std::size_t m, Index u,
                             Side side, Index horizon, std::size_t budget,
                             SignMode mode) {
  if (side == Side::Left) {
    if (static_cast<Index>(m) > u)
      throw std::invalid_argument("h_restricted: left side needs m <= u");
    auto r = extremal(space, 1, u, {m}, true, budget, mode);
    return {m, u, u, r.value, r.witness, r.exhaustive};
  }
  const Index hi = std::max(horizon, u + 4 * static_cast<Index>(m) + 4);
  auto r = extremal(space, u + 1, hi, {m}, false, budget, mode);
  return {m, u, hi, r.value, r.witness, r.exhaustive};
}

double superdemocracy_ratio(const SequenceSpace& space, std::size_t m_max,
                            Index horizon) {
  double best = 0.0;
  for (std::size_t m = 1; m <= m_max; ++m)
    best = std::max(best, h_right(space, m, horizon).value /
                              h_left(space, m, horizon).value);
  return best;
}

double superconservative_ratio(const SequenceSpace& space, std::size_t m_max,
                               Index horizon) {
  double best = 0.0;
  for (std::size_t m = 1; m <= m_max; ++m)
    for (Index u = static_cast<Index>(m); u <= horizon / 2; ++u)
      best = std::max(best,
                      h_restricted(space, m, u, Side::Left, horizon).value /
                          h_restricted(space, m, u, Side::Right, horizon).value);
  return best;
}

PropertyWReport check_property_w(const SequenceSpace& space, std::size_t n_max,
                                 std::size_t m_max, Index horizon) {
  PropertyWReport rep{true, 0.0, {}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double hr = h_right(space, n, horizon).value;
    for (std::size_t m = n; m <= m_max; ++m) {
      auto r = extremal(space, static_cast<Index>(m) + 1, horizon, {n}, true,
                        2000000);
      if (!(r.value > 0.0)) {
        rep.holds = false;
        continue;
      }
      rep.constant = std::max(rep.constant, hr / r.value);
      rep.witnesses.emplace(std::make_pair(n, m), r.witness);
    }
  }
  return rep;
}

PropertyWstarReport check_property_wstar(const SequenceSpace& space,
                                         std::size_t m_max, Index horizon,
                                         int c1_max) {
  PropertyWstarReport best{false, 0.0, std::numeric_limits<double>::infinity(),
                           {}};
  std::vector<double> hl(m_max + 1, 0.0);
  for (std::size_t m = 1; m <= m_max; ++m)
    hl[m] = h_left(space, m, horizon).value;

  struct Candidate {
    double c2;
    std::vector<SignedSet> wit;
  };
  std::vector<Candidate> per_c1;
  double c2_min = std::numeric_limits<double>::infinity();
  for (int c1 = 1; c1 <= c1_max; ++c1) {
    Candidate cand{0.0, {}};
    for (std::size_t m = 1; m <= m_max; ++m) {
      auto r = extremal(space, 1, static_cast<Index>(c1) * static_cast<Index>(m),
                        {m}, false, 2000000);
      cand.c2 = std::max(cand.c2, r.value / hl[m]);
      cand.wit.push_back(r.witness);
    }
    per_c1.push_back(std::move(cand));
    c2_min = std::min(c2_min, per_c1.back().c2);
  }
  // smallest window factor whose constant is within 2% of the best seen
  for (int c1 = 1; c1 <= c1_max; ++c1) {
    const auto& cand = per_c1[static_cast<std::size_t>(c1 - 1)];
    if (cand.c2 <= 1.02 * c2_min) {
      best = {std::isfinite(cand.c2), static_cast<double>(c1), cand.c2,
              cand.wit};
      break;
    }
  }
  return best;
}

PropertyIReport check_property_i(const SequenceSpace& space,
                                 const std::function<Index(std::size_t)>& psi,
                                 int l_max, Index u_max, Index horizon,
                                 double tolerance_constant) {
  PropertyIReport rep{true, 0.0, 0.0};
  auto hrr = [&](std::size_t m, Index u) {
    return h_restricted(space, m, u, Side::Right, horizon).value;
  };
  for (int l = 0; l <= l_max; ++l) {
    for (Index u = 1; u <= u_max; ++u) {
      const auto m_lo = static_cast<std::size_t>((Index{1} << l) * u);
      rep.part1_worst =
          std::max(rep.part1_worst, hrr(2 * m_lo, u) / hrr(m_lo, u));
    }
  }
  const auto m_scan = static_cast<std::size_t>(u_max);
  for (std::size_t m = 1; m <= std::max<std::size_t>(m_scan, 8); ++m) {
    const Index top = std::min(psi(m), u_max);
    for (Index u = static_cast<Index>(m); u <= top; ++u)
      rep.part2_worst = std::max(rep.part2_worst, hrr(static_cast<std::size_t>(u), u) / hrr(m, u));
  }
  rep.holds = rep.part1_worst <= tolerance_constant &&
              rep.part2_worst <= tolerance_constant;
  return rep;
}

Index characteristic_psi(const SequenceSpace& space, std::size_t m,
                         Index horizon) {
  const double hr = h_right(space, m, horizon).value;
  for (Index u = static_cast<Index>(m); u <= horizon; ++u) {
    const double hl = h_restricted(space, m, u, Side::Left, horizon).value;
    if (hr <= 2.0 * hl) return u;
  }
  throw std::runtime_error("characteristic_psi: no admissible u within horizon");
}

}  // namespace greedylab
