#include "greedylab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace greedylab {

Weight Weight::power(double alpha) {
  std::ostringstream name;
  name << "power:" << alpha;
  return Weight(name.str(), [alpha](Index n) {
    return std::pow(static_cast<double>(n), alpha);
  });
}

Weight Weight::sqrtlog(double gamma) {
  std::ostringstream name;
  name << "sqrtlog:" << gamma;
  return Weight(name.str(), [gamma](Index n) {
    return std::sqrt(static_cast<double>(n)) *
           std::pow(std::log(static_cast<double>(n) + 1.0), gamma);
  });
}

Weight Weight::logw() {
  return Weight("log",
                [](Index n) { return std::log(static_cast<double>(n) + 1.0); });
}

Weight Weight::table(std::vector<double> vals) {
  if (vals.empty()) throw std::invalid_argument("table weight: empty table");
  for (std::size_t i = 0; i + 1 < vals.size(); ++i)
    if (vals[i] > vals[i + 1])
      throw std::invalid_argument("table weight: values must be nondecreasing");
  return Weight("table", [vals = std::move(vals)](Index n) {
    const auto i = std::min<std::size_t>(static_cast<std::size_t>(n) - 1,
                                         vals.size() - 1);
    return vals[i];
  });
}

Weight Weight::parse(const std::string& spec) {
  if (spec == "sqrt") return power(0.5);
  if (spec == "n") return power(1.0);
  if (spec == "log") return logw();
  if (spec == "sqrtlog" || spec == "sqrt*log") return sqrtlog(1.0);
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string head = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (head == "power") return power(std::stod(arg));
    if (head == "sqrtlog") return sqrtlog(std::stod(arg));
    if (head == "table") {
      std::vector<double> vals;
      std::stringstream ss(arg);
      std::string tok;
      while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
      return table(std::move(vals));
    }
  }
  throw std::invalid_argument("unknown weight: " + spec);
}

double summing_weight(const Weight& w, Index m) {
  double s = 0.0;
  for (Index n = 1; n <= m; ++n) s += w(n) / static_cast<double>(n);
  return s;
}

DilationReport dilation_bounds(const Weight& w, Index M, Index k_max) {
  if (M < 1 || k_max < 1) throw std::invalid_argument("dilation_bounds: bad range");
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (Index k = 1; k <= k_max; ++k) {
    const double r = w(M * k) / w(k);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return {M, lo, hi, k_max};
}

IndexReport dilation_indices(const Weight& w, Index M_max, Index k_max) {
  double i_hat = -std::numeric_limits<double>::infinity();
  double I_hat = std::numeric_limits<double>::infinity();
  for (Index M = 2; M <= M_max; M *= 2) {
    const auto rep = dilation_bounds(w, M, k_max);
    const double lnM = std::log(static_cast<double>(M));
    i_hat = std::max(i_hat, std::log(rep.phi_hat) / lnM);
    I_hat = std::min(I_hat, std::log(rep.Phi_hat) / lnM);
  }
  return {i_hat, I_hat, M_max, k_max};
}

double check_doubling(const Weight& w, Index n_max) {
  double best = 0.0;
  for (Index n = 1; n <= n_max; ++n) best = std::max(best, w(2 * n) / w(n));
  return best;
}

namespace {

// LRP: min over N of g(N) / max_{k<=N} g(k), g(n) = w(n)/n^a.
// URP: max over N of g(N) / min_{k<=N} g(k), g(n) = w(n)/n^b.
double regularity_constant(const Weight& w, double exponent,
                           RegularityMode mode, Index range) {
  double running = w(1);  // best g(k) seen so far
  double best = 1.0;
  for (Index n = 2; n <= range; ++n) {
    const double g = w(n) / std::pow(static_cast<double>(n), exponent);
    if (mode == RegularityMode::LRP) {
      running = std::max(running, g);
      best = std::min(best, g / running);
    } else {
      running = std::min(running, g);
      best = std::max(best, g / running);
    }
  }
  return best;
}

}  // namespace

RegularityReport regularity_check(const Weight& w, double exponent,
                                  RegularityMode mode, Index range) {
  if (range < 8) throw std::invalid_argument("regularity_check: range too small");
  const double full = regularity_constant(w, exponent, mode, range);
  const double quarter = regularity_constant(w, exponent, mode, range / 4);
  bool holds;
  if (mode == RegularityMode::LRP)
    holds = full > 1e-6 && full >= 0.9 * quarter;
  else
    holds = std::isfinite(full) && full <= 1.1 * quarter;
  return {full, holds};
}

double equiv_ratio(const Weight& w, Index N_max) {
  double acc = 0.0, best = 0.0;
  for (Index n = 1; n <= N_max; ++n) {
    acc += w(n) / static_cast<double>(n);
    best = std::max(best, acc / w(n));
  }
  return best;
}

}  // namespace greedylab
