#include "greedylab/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace greedylab {

SequenceSpace SequenceSpace::lp(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp: p must be positive");
  return SequenceSpace(SpaceKind::Lp, p);
}
SequenceSpace SequenceSpace::summing() { return {SpaceKind::SummingC0, 0.0}; }
SequenceSpace SequenceSpace::difference() { return {SpaceKind::DifferenceL1, 0.0}; }
SequenceSpace SequenceSpace::schreier() { return {SpaceKind::SchreierMod, 0.0}; }
SequenceSpace SequenceSpace::mixnorm() { return {SpaceKind::MixNorm, 0.0}; }

SequenceSpace SequenceSpace::parse(const std::string& name) {
  if (name == "summing") return summing();
  if (name == "difference") return difference();
  if (name == "schreier") return schreier();
  if (name == "mixnorm") return mixnorm();
  if (name.rfind("lp:", 0) == 0) return lp(std::stod(name.substr(3)));
  throw std::invalid_argument("unknown space: " + name);
}

std::string SequenceSpace::name() const {
  switch (kind_) {
    case SpaceKind::Lp: {
      std::string s = std::to_string(p_);
      s.erase(s.find_last_not_of('0') + 1);
      if (!s.empty() && s.back() == '.') s.pop_back();
      return "lp:" + s;
    }
    case SpaceKind::SummingC0: return "summing";
    case SpaceKind::DifferenceL1: return "difference";
    case SpaceKind::SchreierMod: return "schreier";
    case SpaceKind::MixNorm: return "mixnorm";
  }
  return "?";
}

bool SequenceSpace::unconditional() const {
  switch (kind_) {
    case SpaceKind::Lp:
    case SpaceKind::SchreierMod:
    case SpaceKind::MixNorm:
      return true;
    default:
      return false;
  }
}

double SequenceSpace::kappa() const {
  if (kind_ == SpaceKind::Lp && p_ < 1.0)
    return std::pow(2.0, 1.0 / p_ - 1.0);
  return 1.0;
}

double SequenceSpace::p_convexity() const {
  if (kind_ == SpaceKind::Lp) return std::min(p_, 1.0);
  return 1.0;
}

namespace {

double lp_norm(const SparseVector& x, double p) {
  double s = 0.0;
  for (const auto& [i, c] : x.entries()) s += std::pow(std::fabs(c), p);
  return std::pow(s, 1.0 / p);
}

// sup over prefixes of |sum_{n<=N} x_n|
double summing_norm(const SparseVector& x) {
  double run = 0.0, best = 0.0;
  for (const auto& [i, c] : x.entries()) {
    run += c;
    best = std::max(best, std::fabs(run));
  }
  return best;
}

// sum_{n=1}^{N-1} |x_n - x_{n+1}| + |x_N| over the dense range [1, N],
// N = max support index.  Equals the total variation of the path
// (x_1, ..., x_N, 0) starting at x_1 (no charge for the initial value).
double difference_norm(const SparseVector& x) {
  if (x.empty()) return 0.0;
  double total = 0.0, prev = x.coeff(1);
  Index pos = 1;  // last dense position accounted for
  for (const auto& [i, c] : x.entries()) {
    if (i == 1) continue;  // folded into the starting value
    if (i > pos + 1 && prev != 0.0) {
      total += std::fabs(prev);  // drop to the zero gap
      prev = 0.0;
    }
    total += std::fabs(prev - c);
    prev = c;
    pos = i;
  }
  total += std::fabs(prev);  // trailing |x_N|
  return total;
}

// sup over F with sqrt(min F) >= |F| of sum_{i in F} |x_i|.
// For each candidate minimum m the budget is b = floor(sqrt(m)) extra slots
// (|F| <= b), filled with the largest moduli strictly beyond m.
double schreier_norm(const SparseVector& x) {
  if (x.empty()) return 0.0;
  std::vector<std::pair<Index, double>> supp(x.entries().begin(),
                                             x.entries().end());
  const Index maxi = supp.back().first;
  // moduli at indices > m, kept sorted descending with prefix sums
  std::vector<double> tail, prefix{0.0};
  auto tail_top = [&](std::size_t k) {
    k = std::min(k, tail.size());
    return prefix[k];
  };
  double best = 0.0;
  std::size_t sp = supp.size();  // supp[sp..) have index > current m
  for (Index m = maxi; m >= 1; --m) {
    while (sp > 0 && supp[sp - 1].first > m) {
      --sp;
      double v = std::fabs(supp[sp].second);
      tail.insert(std::upper_bound(tail.begin(), tail.end(), v,
                                   std::greater<double>()),
                  v);
      prefix.resize(tail.size() + 1);
      for (std::size_t k = 1; k <= tail.size(); ++k)
        prefix[k] = prefix[k - 1] + tail[k - 1];
    }
    const auto b = static_cast<std::size_t>(std::sqrt(static_cast<double>(m)));
    best = std::max(best, std::fabs(x.coeff(m)) + tail_top(b > 0 ? b - 1 : 0));
  }
  return best;
}

// max of the rearranged weighted-average term
//   sup_n (1/sqrt(s_n)) sum_{i<=n} y_i / sqrt(i),  y = |x| sorted descending,
//   s_n = sum_{i<=n} 1/i,
// and the l2 norm of the even-indexed coordinates.
double mixnorm_norm(const SparseVector& x) {
  std::vector<double> y;
  y.reserve(x.support_size());
  double even_sq = 0.0;
  for (const auto& [i, c] : x.entries()) {
    y.push_back(std::fabs(c));
    if (i % 2 == 0) even_sq += c * c;
  }
  std::sort(y.begin(), y.end(), std::greater<double>());
  double acc = 0.0, harm = 0.0, best = 0.0;
  for (std::size_t n = 1; n <= y.size(); ++n) {
    acc += y[n - 1] / std::sqrt(static_cast<double>(n));
    harm += 1.0 / static_cast<double>(n);
    best = std::max(best, acc / std::sqrt(harm));
  }
  return std::max(best, std::sqrt(even_sq));
}

}  // namespace

double SequenceSpace::norm(const SparseVector& x) const {
  switch (kind_) {
    case SpaceKind::Lp: return lp_norm(x, p_);
    case SpaceKind::SummingC0: return summing_norm(x);
    case SpaceKind::DifferenceL1: return difference_norm(x);
    case SpaceKind::SchreierMod: return schreier_norm(x);
    case SpaceKind::MixNorm: return mixnorm_norm(x);
  }
  return 0.0;
}

double basis_constant_estimate(const SequenceSpace& space,
                               const std::vector<SparseVector>& sample) {
  double best = 0.0;
  for (const auto& x : sample) {
    const double nx = space.norm(x);
    if (nx == 0.0) continue;
    for (Index m = 1; m <= x.max_index(); ++m)
      best = std::max(best, space.norm(x.partial_sum(m)) / nx);
  }
  return best;
}

}  // namespace greedylab
