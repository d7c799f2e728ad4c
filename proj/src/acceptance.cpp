#include "greedylab/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "greedylab/classes.hpp"

namespace greedylab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<SequenceSpace> bundled_spaces() {
  return {SequenceSpace::lp(2.0), SequenceSpace::summing(),
          SequenceSpace::difference(), SequenceSpace::schreier(),
          SequenceSpace::mixnorm()};
}

// Portable deterministic draws: raw engine output reduced by hand instead of
// std::uniform_int_distribution (whose mapping is implementation-defined).
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next_u64() { return eng(); }
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(next_u64() % n);
  }
  double unit() {  // in [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }
};

SparseVector random_vector(Rng& rng, std::size_t max_support, Index horizon) {
  const std::size_t k = 1 + rng.below(max_support);
  std::vector<Index> pool(static_cast<std::size_t>(horizon));
  for (std::size_t i = 0; i < pool.size(); ++i)
    pool[i] = static_cast<Index>(i) + 1;
  for (std::size_t i = 0; i < k; ++i)
    std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  SparseVector x;
  for (std::size_t i = 0; i < k; ++i) {
    const double mag = 0.1 + 1.9 * rng.unit();
    x.set(pool[i], rng.below(2) ? mag : -mag);
  }
  return x;
}

// Grid-search Chebyshev oracle: coordinatewise box refinement around the best
// point, valid because each bundled objective is unimodal per coordinate.
// Two starts (origin and the projection coefficients) guard the coarse stage.
double grid_cheb_residual(const SequenceSpace& space, const SparseVector& x,
                          const std::vector<Index>& A) {
  const std::size_t d = A.size();
  auto objective = [&](const std::vector<double>& coef) {
    SparseVector r = x;
    for (std::size_t i = 0; i < d; ++i)
      r.set(A[i], x.coeff(A[i]) - coef[i]);
    return space.norm(r);
  };
  double best = kInf;
  std::vector<std::vector<double>> starts(2, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) starts[1][i] = x.coeff(A[i]);
  for (auto center : starts) {
    double val = objective(center);
    for (double step = 0.5; step > 1e-4; step /= 8.0) {
      // exhaustive box of 17 points per coordinate around the center
      std::vector<double> pt(d);
      std::vector<int> off(d, -8);
      while (true) {
        for (std::size_t i = 0; i < d; ++i)
          pt[i] = center[i] + step * off[i];
        const double v = objective(pt);
        if (v < val) {
          val = v;
          for (std::size_t i = 0; i < d; ++i) center[i] = pt[i];
        }
        std::size_t i = 0;
        while (i < d && ++off[i] > 8) off[i++] = -8;
        if (i == d) break;
      }
    }
    best = std::min(best, val);
  }
  return best;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

CriterionResult c1_summing_democracy() {
  const auto sp = SequenceSpace::summing();
  for (std::size_t N = 1; N <= 6; ++N) {
    const double hr = h_right(sp, N, 12).value;
    const double hl = h_left(sp, N, 12).value;
    if (std::fabs(hr - static_cast<double>(N)) > 1e-12 ||
        std::fabs(hl - 1.0) > 1e-12)
      return {1, "summing democracy h_r/h_l", false,
              "N=" + std::to_string(N) + " h_r=" + fmt(hr) + " h_l=" + fmt(hl)};
  }
  return {1, "summing democracy h_r/h_l", true,
          "h_r(N)=N, h_l(N)=1 for N<=6, horizon 12"};
}

CriterionResult c2_difference_restricted() {
  const auto sp = SequenceSpace::difference();
  for (std::size_t m = 1; m <= 10; ++m)
    for (Index u = static_cast<Index>(m); u <= 10; ++u) {
      const double want =
          u >= 2 * static_cast<Index>(m)
              ? 2.0 * static_cast<double>(m)
              : 2.0 * static_cast<double>(u) - 2.0 * static_cast<double>(m) +
                    1.0;
      const double got = h_restricted(sp, m, u, Side::Left, u, 2000000,
                                      SignMode::Unsigned)
                             .value;
      if (std::fabs(got - want) > 1e-12)
        return {2, "difference restricted democracy", false,
                "h_Rl(" + std::to_string(m) + "," + std::to_string(u) +
                    ")=" + fmt(got) + " want " + fmt(want)};
      const double hrr =
          h_restricted(sp, m, u, Side::Right, u + 12).value;
      if (std::fabs(hrr - 2.0) > 1e-12)
        return {2, "difference restricted democracy", false,
                "h_Rr(" + std::to_string(m) + "," + std::to_string(u) +
                    ")=" + fmt(hrr) + " want 2"};
    }
  return {2, "difference restricted democracy", true,
          "closed formulas match on 1<=m<=u<=10 (h_Rl unsigned, h_Rr=2)"};
}

CriterionResult c3_schreier_blocks() {
  const auto sp = SequenceSpace::schreier();
  auto block = [](Index N, Index M) {
    SparseVector x;
    for (Index i = N + 1; i <= N + M; ++i) x.set(i, 1.0);
    return x;
  };
  for (Index M = 1; M <= 30; ++M)
    for (Index N = 0; N + M <= 30; ++N) {
      if (N < M * M - 1) continue;
      const double v = sp.norm(block(N, M));
      if (std::fabs(v - static_cast<double>(M)) > 1e-12)
        return {3, "schreier block norms", false,
                "||x_{" + std::to_string(N) + "," + std::to_string(M) +
                    "}||=" + fmt(v)};
    }
  for (Index M = 4; M <= 64; ++M) {
    const double r = sp.norm(block(0, M)) / std::sqrt(static_cast<double>(M));
    if (r < 0.3 || r > 1.1)
      return {3, "schreier block norms", false,
              "||x_{0," + std::to_string(M) + "}||/sqrt(M)=" + fmt(r)};
  }
  return {3, "schreier block norms", true,
          "||x_{N,M}||=M for N>=M^2-1 (N+M<=30); sqrt envelope in [0.3,1.1]"};
}

CriterionResult c4_mixnorm_nonconservative() {
  const auto sp = SequenceSpace::mixnorm();
  std::vector<double> ratios;
  for (Index N : {4, 8, 16, 32, 64}) {
    SparseVector a, b;
    for (Index i = 1; i <= N; ++i) {
      a.set(2 * i, 1.0);
      b.set(2 * N + 2 * i - 1, 1.0);
    }
    ratios.push_back(sp.norm(a) / sp.norm(b));
  }
  bool increasing = true;
  for (std::size_t i = 0; i + 1 < ratios.size(); ++i)
    increasing &= ratios[i] < ratios[i + 1];
  const double growth = ratios.back() / ratios.front();
  std::ostringstream detail;
  detail << "ratios";
  for (double r : ratios) detail << " " << fmt(r);
  detail << "; N=64/N=4 factor " << fmt(growth)
         << (growth > 1.3 ? " > 1.3" : " (needs > 1.3)");
  return {4, "mixnorm non-conservative growth", increasing && growth > 1.3,
          detail.str()};
}

CriterionResult c5_error_chain(std::uint64_t seed) {
  for (const auto& sp : bundled_spaces()) {
    const auto sample = random_sample(seed, 200, 8, 16);
    for (const auto& x : sample)
      for (std::size_t n = 1; n <= x.support_size(); ++n) {
        const double s = sigma_error(sp, x, n, 4);
        const double th = theta_error(sp, x, n).value;
        const double g = gamma_error(sp, x, n).value;
        if (s > th + 1e-9 || th > g + 1e-9)
          return {5, "error chain sigma<=theta<=gamma", false,
                  sp.name() + " n=" + std::to_string(n) + ": " + fmt(s) + "/" +
                      fmt(th) + "/" + fmt(g)};
      }
  }
  return {5, "error chain sigma<=theta<=gamma", true,
          "zero violations on 200 vectors x 5 spaces"};
}

CriterionResult c6_cheb_oracle(std::uint64_t seed) {
  for (const auto& sp : bundled_spaces()) {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int inst = 0; inst < 50; ++inst) {
      const SparseVector x = random_vector(rng, 6, 12);
      const std::size_t a_size = 1 + rng.below(2);
      std::vector<Index> A;
      while (A.size() < a_size) {
        const Index cand =
            1 + static_cast<Index>(rng.below(
                    static_cast<std::size_t>(x.max_index()) + 2));
        if (std::find(A.begin(), A.end(), cand) == A.end()) A.push_back(cand);
      }
      std::sort(A.begin(), A.end());
      const double analytic = chebyshev_project(sp, x, A).residual;
      const double grid = grid_cheb_residual(sp, x, A);
      if (std::fabs(analytic - grid) > 1e-3)
        return {6, "chebyshev solver vs grid oracle", false,
                sp.name() + " inst " + std::to_string(inst) + ": analytic " +
                    fmt(analytic) + " grid " + fmt(grid)};
    }
  }
  return {6, "chebyshev solver vs grid oracle", true,
          "50 instances x 5 spaces within 1e-3"};
}

CriterionResult c7_remark_ratio() {
  const auto rows =
      remark_ratio(SequenceSpace::summing(), Weight::power(0.5), 2.0, 50);
  for (const auto& r : rows)
    if (r.ratio > r.bound + 1e-12)
      return {7, "remark ratio bound", false,
              "m=" + std::to_string(r.j) + " ratio " + fmt(r.ratio) +
                  " exceeds bound " + fmt(r.bound)};
  const auto& r31 = rows[30];
  if (!(r31.ratio < 0.5 && r31.bound < 0.5))
    return {7, "remark ratio bound", false,
            "m=31 ratio " + fmt(r31.ratio) + " bound " + fmt(r31.bound)};
  return {7, "remark ratio bound", true,
          "ratio <= 1/sqrt(H_m) for m<=50; below 0.5 at m=31"};
}

CriterionResult c8_imp1() {
  const auto rows =
      imp1_experiment(SequenceSpace::summing(), Weight::power(0.5), kInf, 5);
  std::ostringstream detail;
  detail << "ratios";
  for (const auto& r : rows) detail << " " << fmt(r.ratio);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (!(rows[i].ratio < rows[i + 1].ratio))
      return {8, "imp1 blow-up CG/A", false, detail.str() + "; not increasing"};
    if (rows[i + 1].ratio / rows[i].ratio < 1.2)
      return {8, "imp1 blow-up CG/A", false,
              detail.str() + "; growth below 1.2 at j=" +
                  std::to_string(rows[i + 1].j)};
  }
  return {8, "imp1 blow-up CG/A", true, detail.str()};
}

CriterionResult c9_kppg() {
  const auto rows =
      kppg_experiment(SequenceSpace::mixnorm(), Weight::power(0.5), kInf, 4);
  std::ostringstream detail;
  detail << "ratios";
  for (const auto& r : rows) detail << " " << fmt(r.ratio);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (!(rows[i].ratio < rows[i + 1].ratio))
      return {9, "kppg blow-up G/PG", false,
              detail.str() + "; not strictly increasing"};
  return {9, "kppg blow-up G/PG", true, detail.str()};
}

CriterionResult c10_weight_indices() {
  const Index M_max = Index{1} << 10, k_max = Index{1} << 12;
  const auto sl = dilation_indices(Weight::sqrtlog(1.0), M_max, k_max);
  std::ostringstream detail;
  detail << "sqrtlog (i,I)=(" << fmt(sl.i_hat) << "," << fmt(sl.I_hat) << ")";
  bool ok = sl.i_hat >= 0.4 && sl.i_hat <= 0.6 && sl.I_hat >= 0.4 &&
            sl.I_hat <= 0.6;
  if (!ok) detail << " outside [0.4,0.6]";
  for (double alpha : {0.25, 0.5, 1.0}) {
    const auto r = dilation_indices(Weight::power(alpha), M_max, k_max);
    detail << "; a=" << fmt(alpha) << " (" << fmt(r.i_hat) << ","
           << fmt(r.I_hat) << ")";
    ok = ok && std::fabs(r.i_hat - alpha) <= 0.02 &&
         std::fabs(r.I_hat - alpha) <= 0.02;
  }
  return {10, "weight dilation indices", ok, detail.str()};
}

CriterionResult c11_eta_spot() {
  const double analytic = eta_p(1.0, 1.0);
  const double want = 3.0 + 2.0 * std::sqrt(2.0);
  double grid = kInf;
  for (int i = 1; i < 1000000; ++i) {
    const double t = static_cast<double>(i) / 1000000.0;
    grid = std::min(grid, (1.0 + t) / ((1.0 - t) * t));
  }
  const bool ok =
      std::fabs(analytic - want) <= 1e-3 && std::fabs(grid - want) <= 1e-3;
  return {11, "eta_p spot value", ok,
          "eta_1(1)=" + fmt(analytic) + ", grid " + fmt(grid) + ", want " +
              fmt(want)};
}

CriterionResult c12_property_suite() {
  std::ostringstream detail;
  for (const auto& sp : bundled_spaces()) {
    if (sp.kind() == SpaceKind::Lp) continue;
    const auto w = check_property_w(sp, 4, 8, 70);
    if (!w.holds || w.constant > 1.0 + 1e-9)
      return {12, "property suite (W)/(W*)/(I)", false,
              sp.name() + " (W) constant " + fmt(w.constant)};
    const auto ws = check_property_wstar(sp, 8, 24, 4);
    const bool mix = sp.kind() == SpaceKind::MixNorm;
    const bool ws_ok = ws.holds && (mix ? ws.c1 <= 2.0 && ws.c2 <= 1.1
                                        : ws.c1 == 1.0 && ws.c2 <= 1.0 + 1e-9);
    if (!ws_ok)
      return {12, "property suite (W)/(W*)/(I)", false,
              sp.name() + " (W*) c1=" + fmt(ws.c1) + " c2=" + fmt(ws.c2)};
  }
  struct ICase {
    SequenceSpace sp;
    Index (*psi)(std::size_t);
  };
  const std::vector<ICase> cases = {
      {SequenceSpace::summing(),
       [](std::size_t m) { return static_cast<Index>(m); }},
      {SequenceSpace::schreier(),
       [](std::size_t m) {
         return std::max<Index>(static_cast<Index>(m) * static_cast<Index>(m) -
                                    1,
                                1);
       }},
      {SequenceSpace::mixnorm(),
       [](std::size_t m) { return static_cast<Index>(m); }},
  };
  for (const auto& c : cases) {
    const auto rep = check_property_i(c.sp, c.psi, 4, 6, 16);
    if (!rep.holds)
      return {12, "property suite (W)/(W*)/(I)", false,
              c.sp.name() + " (I) worst " + fmt(rep.part1_worst) + "/" +
                  fmt(rep.part2_worst)};
    detail << c.sp.name() << " I:" << fmt(rep.part1_worst) << "/"
           << fmt(rep.part2_worst) << " ";
  }
  return {12, "property suite (W)/(W*)/(I)", true,
          "(W) C=1, (W*) quoted patterns, (I) " + detail.str()};
}

CriterionResult c13_truncation(std::uint64_t seed) {
  for (const auto& sp : {SequenceSpace::lp(2.0), SequenceSpace::schreier()}) {
    const auto sample = random_sample(seed, 200, 8, 16);
    for (const auto& x : sample) {
      const double nx = sp.norm(x);
      for (std::size_t m = 1; m <= x.support_size(); ++m)
        for (const auto& A : greedy_sets(x, m, 200).sets) {
          const double nu =
              sp.norm(truncate(x, A, TruncationKind::Restricted).vector);
          if (nu > 2.0 * nx + 1e-12)
            return {13, "restricted truncation boundedness", false,
                    sp.name() + ": ||U||=" + fmt(nu) + " vs 2||x||=" +
                        fmt(2.0 * nx)};
        }
    }
  }
  return {13, "restricted truncation boundedness", true,
          "||U(x,A)|| <= 2||x|| on lp:2 and schreier samples"};
}

}  // namespace

std::vector<SparseVector> random_sample(std::uint64_t seed, std::size_t count,
                                        std::size_t max_support,
                                        Index horizon) {
  Rng rng(seed);
  std::vector<SparseVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_vector(rng, max_support, horizon));
  return out;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  return {
      c1_summing_democracy(), c2_difference_restricted(), c3_schreier_blocks(),
      c4_mixnorm_nonconservative(), c5_error_chain(seed), c6_cheb_oracle(seed),
      c7_remark_ratio(), c8_imp1(), c9_kppg(), c10_weight_indices(),
      c11_eta_spot(), c12_property_suite(), c13_truncation(seed),
  };
}

}  // namespace greedylab
