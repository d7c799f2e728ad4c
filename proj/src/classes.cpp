#include "greedylab/classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace greedylab {

namespace {

// Accumulates (w(n) err_n)^q / n terms, or their sup when q = inf.
class Aggregator {
public:
  explicit Aggregator(double q) : q_(q) {}
  void add(Index n, double weighted_err) {
    if (std::isinf(q_))
      acc_ = std::max(acc_, weighted_err);
    else
      acc_ += std::pow(weighted_err, q_) / static_cast<double>(n);
  }
  double total() const {
    return std::isinf(q_) ? acc_ : std::pow(acc_, 1.0 / q_);
  }

private:
  double q_;
  double acc_ = 0.0;
};

}  // namespace

ErrorValue class_norm(const SequenceSpace& space, const SparseVector& x,
                      const ClassParams& params, Index window,
                      std::size_t cap) {
  const double base = space.norm(x);
  const Index cutoff = params.kind == ErrorKind::PartialSum
                           ? x.max_index()
                           : static_cast<Index>(x.support_size());
  Aggregator agg(params.q);
  bool truncated = false;
  for (Index n = 1; n <= cutoff; ++n) {
    double err = 0.0;
    switch (params.kind) {
      case ErrorKind::BestTerm:
        err = sigma_error(space, x, static_cast<std::size_t>(n), window);
        break;
      case ErrorKind::Greedy: {
        auto e = gamma_error(space, x, static_cast<std::size_t>(n), cap);
        err = e.value;
        truncated |= e.truncated;
        break;
      }
      case ErrorKind::Chebyshev: {
        auto e = theta_error(space, x, static_cast<std::size_t>(n), cap);
        err = e.value;
        truncated |= e.truncated;
        break;
      }
      case ErrorKind::PartialSum:
        err = beta_error(space, x, n);
        break;
    }
    agg.add(n, params.weight(n) * err);
  }
  return {base + agg.total(), truncated};
}

std::vector<ExperimentRow> remark_ratio(const SequenceSpace& space,
                                        const Weight& w, double q,
                                        std::size_t m_range) {
  std::vector<ExperimentRow> rows;
  double harmonic = 0.0;
  for (std::size_t m = 1; m <= m_range; ++m) {
    harmonic += 1.0 / static_cast<double>(m);
    SparseVector x;
    x.set(static_cast<Index>(m) + 1, 1.0);
    const double num =
        class_norm(space, x, {w, q, ErrorKind::Greedy}).value;
    const double den =
        class_norm(space, x, {w, q, ErrorKind::PartialSum}).value;
    const double bound =
        1.0 / (w(1) * (std::isinf(q) ? 1.0 : std::pow(harmonic, 1.0 / q)));
    rows.push_back({"remark", static_cast<long>(m), 0, 0, 0, num, den,
                    num / den, bound, ""});
  }
  return rows;
}

std::vector<std::pair<Index, Index>> witness_pair_search(
    const std::function<double(Index)>& f,
    const std::function<double(Index)>& g, const Weight& w, Index grid) {
  std::vector<std::pair<Index, Index>> pairs;
  for (int j = 1;; ++j) {
    const Index factor = Index{1} << j;
    bool found = false;
    for (Index k = 1; k * factor <= grid && !found; k *= 2)
      for (Index eta = k * factor; eta <= grid && !found; eta *= 2)
        if (f(k) / g(eta) >= w(eta) / w(k)) {
          pairs.emplace_back(k, eta);
          found = true;
        }
    if (!found) break;
  }
  return pairs;
}

std::vector<ExperimentRow> imp1_experiment(const SequenceSpace& space,
                                           const Weight& w, double q,
                                           int j_max, std::size_t cap,
                                           Index window) {
  std::vector<ExperimentRow> rows;
  for (int j = 1; j <= j_max; ++j) {
    const Index k = Index{1} << j;
    const Index eta = Index{1} << (2 * j);
    SparseVector x;
    SparseVector left;  // h_l witness: alternating signs on [1, eta]
    for (Index i = 1; i <= eta; ++i) {
      const double sgn = (i % 2 == 1) ? 1.0 : -1.0;
      x.set(i, 2.0 * sgn);
      left.set(i, sgn);
    }
    SparseVector right;  // h_r witness: constant signs on the next k indices
    for (Index i = eta + 1; i <= eta + k; ++i) {
      x.set(i, 1.0);
      right.set(i, 1.0);
    }
    const Index supp = eta + k;
    const double base = space.norm(x);
    std::string flags;

    // theta: greedy sets of order n <= eta are n-subsets of the tie class
    // [1, eta]; the full family is combinatorial, so every row evaluates the
    // same two representatives (lexicographic prefix and evenly spread
    // subset), giving a lower bound computed uniformly across j.
    Aggregator num_agg(q);
    for (Index n = 1; n <= supp; ++n) {
      double th = 0.0;
      if (n <= eta) {
        std::vector<Index> prefix, spread;
        for (Index i = 1; i <= n; ++i) prefix.push_back(i);
        for (Index i = 0; i < n; ++i)
          spread.push_back(n > 1 ? 1 + (i * (eta - 1)) / (n - 1) : 1);
        for (const auto& A : {prefix, spread})
          th = std::max(th, chebyshev_project(space, x, A).residual);
      } else {
        std::vector<Index> A;
        for (Index i = 1; i <= n; ++i) A.push_back(i);
        th = chebyshev_project(space, x, A).residual;
      }
      num_agg.add(n, w(n) * th);
    }
    const double num = base + num_agg.total();

    // sigma upper bounds from candidate support families: the modulus-greedy
    // prefix, the right block plus a left prefix, and spread subsets of the
    // right block.
    Aggregator den_agg(q);
    for (Index n = 1; n < supp; ++n) {
      std::vector<std::vector<Index>> cands;
      std::vector<Index> prefix;
      for (Index i = 1; i <= n; ++i) prefix.push_back(i);
      cands.push_back(prefix);
      if (n >= k) {
        std::vector<Index> A;
        for (Index i = eta + 1; i <= eta + k; ++i) A.push_back(i);
        for (Index i = 1; i <= n - k; ++i) A.push_back(i);
        cands.push_back(A);
      } else {
        const Index step = std::max<Index>(1, k / n);
        std::vector<Index> A;
        for (Index i = 0; i < n; ++i)
          A.push_back(eta + 1 +
                      std::min(k - 1, (i * k) / (n + 1) + step / 2));
        std::sort(A.begin(), A.end());
        A.erase(std::unique(A.begin(), A.end()), A.end());
        cands.push_back(A);
      }
      double s = std::numeric_limits<double>::infinity();
      for (const auto& A : cands)
        s = std::min(s, chebyshev_project(space, x, A).residual);
      den_agg.add(n, w(n) * s);
    }
    const double den = base + den_agg.total();

    flags = "theta_lb;sigma_ub";
    // Eq. n4 precondition: h_l(eta) <= h_r(k) w(k)/w(eta), evaluated on the
    // bundled witnesses.
    if (!(space.norm(left) <= space.norm(right) * w(k) / w(eta))) {
      if (!flags.empty()) flags += ";";
      flags += "precondition_failed";
    }
    rows.push_back({"imp1", j, static_cast<long>(k), 0,
                    static_cast<long>(eta), num, den, num / den, w(eta) / w(k),
                    flags});
  }
  (void)window;
  return rows;
}

std::vector<ExperimentRow> kppg_experiment(const SequenceSpace& space,
                                           const Weight& w, double q,
                                           int j_max, std::size_t cap) {
  std::vector<ExperimentRow> rows;
  for (int j = 1; j <= j_max; ++j) {
    const Index u = Index{1} << j;
    const Index eta = Index{1} << (2 * j);
    SparseVector x;
    std::vector<Index> ones, twos;  // ones on evens <= u, twos on odds beyond
    for (Index i = 2; i <= u; i += 2) {
      x.set(i, 1.0);
      ones.push_back(i);
    }
    for (Index i = u + 1; i < u + 2 * eta; i += 2) {
      x.set(i, 2.0);
      twos.push_back(i);
    }
    const double base = space.norm(x);
    const Index supp = static_cast<Index>(ones.size() + twos.size());

    // gamma: greedy sets take the twos first; for the bundled MixNorm preset
    // every tie choice yields the same norm (the norm sees the modulus
    // multiset plus the even-coordinate values, and ties are interchangeable
    // within each block), so the canonical choice is exact.
    Aggregator g_agg(q);
    for (Index n = 1; n <= supp; ++n) {
      const auto t_rem = std::min<std::size_t>(static_cast<std::size_t>(n),
                                               twos.size());
      const auto o_rem = static_cast<std::size_t>(n) - t_rem;
      SparseVector r = x;
      for (std::size_t i = 0; i < t_rem; ++i) r.set(twos[i], 0.0);
      for (std::size_t i = 0; i < o_rem; ++i) r.set(ones[i], 0.0);
      g_agg.add(n, w(n) * space.norm(r));
    }
    const double num = base + g_agg.total();

    Aggregator b_agg(q);
    for (Index n = 1; n <= x.max_index(); ++n)
      b_agg.add(n, w(n) * beta_error(space, x, n));
    const double den = base + b_agg.total();

    rows.push_back({"kppg", j, 0, static_cast<long>(u),
                    static_cast<long>(eta), num, den, num / den,
                    w(eta - u) / w(u), ""});
  }
  (void)cap;
  return rows;
}

CasecDiagnostics casec_construction(const SequenceSpace& space,
                                    const SignedSet& Ms,
                                    const std::vector<Index>& D, int r) {
  if (Ms.size() != D.size())
    throw std::invalid_argument("casec_construction: |M_s| must equal |D|");
  if (r < 1 || static_cast<std::size_t>(r) > D.size())
    throw std::invalid_argument("casec_construction: bad part count");
  std::vector<Index> d = D;
  std::sort(d.begin(), d.end());
  const Index max_ms =
      *std::max_element(Ms.indices.begin(), Ms.indices.end());
  if (max_ms >= d.front())
    throw std::invalid_argument("casec_construction: M_s must precede D");

  CasecDiagnostics diag{};
  // balanced contiguous partition of the sorted D
  const std::size_t nparts = static_cast<std::size_t>(r);
  std::size_t pos = 0;
  double best_norm = -1.0;
  std::vector<Index> best_part;
  for (std::size_t i = 0; i < nparts; ++i) {
    const std::size_t len = d.size() / nparts + (i < d.size() % nparts ? 1 : 0);
    std::vector<Index> part(d.begin() + static_cast<long>(pos),
                            d.begin() + static_cast<long>(pos + len));
    pos += len;
    diag.part_sizes.push_back(len);
    const double nv = space.norm(SignedSet::plus(part));
    if (nv > best_norm) {
      best_norm = nv;
      best_part = part;
    }
  }

  const SparseVector ms_ind = Ms.indicator();
  SparseVector xs = ms_ind.scaled(2.0);
  for (Index i : best_part) xs.set(i, 1.0);

  diag.norm_Ms = space.norm(ms_ind);
  diag.norm_Vs = best_norm;
  diag.norm_xs = space.norm(xs);
  diag.premise_ok = diag.norm_Ms <= diag.norm_Vs + 1e-12;
  const double p =
      space.kind() == SpaceKind::Lp ? space.p() : space.p_convexity();
  diag.chain_lhs = std::pow(diag.norm_xs, p);
  diag.chain_rhs = (1.0 + std::pow(2.0, p)) * std::pow(diag.norm_Vs, p);
  diag.chain_ok = diag.chain_lhs <= diag.chain_rhs + 1e-9;
  return diag;
}

bool chain_check(const SequenceSpace& space,
                 const std::vector<SparseVector>& sample, const Weight& w,
                 double q, Index window, std::size_t cap, std::string* detail) {
  const double tol = 1e-9;
  for (std::size_t xi = 0; xi < sample.size(); ++xi) {
    const auto& x = sample[xi];
    for (std::size_t n = 1; n <= x.support_size(); ++n) {
      const double s = sigma_error(space, x, n, window);
      const double th = theta_error(space, x, n, cap).value;
      const double g = gamma_error(space, x, n, cap).value;
      if (s > th + tol || th > g + tol) {
        if (detail) {
          std::ostringstream os;
          os << "sample " << xi << " n=" << n << ": sigma=" << s
             << " theta=" << th << " gamma=" << g;
          *detail = os.str();
        }
        return false;
      }
    }
    const double a = class_norm(space, x, {w, q, ErrorKind::BestTerm}, window,
                                cap).value;
    const double cg =
        class_norm(space, x, {w, q, ErrorKind::Chebyshev}, window, cap).value;
    const double g =
        class_norm(space, x, {w, q, ErrorKind::Greedy}, window, cap).value;
    if (a > cg + tol || cg > g + tol) {
      if (detail) {
        std::ostringstream os;
        os << "sample " << xi << ": A=" << a << " CG=" << cg << " G=" << g;
        *detail = os.str();
      }
      return false;
    }
  }
  return true;
}

}  // namespace greedylab
