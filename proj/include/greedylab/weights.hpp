#pragma once

#include <functional>
#include <string>
#include <vector>

#include "greedylab/sparse_vector.hpp"

namespace greedylab {

/// A nondecreasing weight sequence omega(1) <= omega(2) <= ...
class Weight {
public:
  static Weight power(double alpha);              // n^alpha
  static Weight sqrtlog(double gamma);            // sqrt(n) * ln(n+1)^gamma
  static Weight logw();                           // ln(n+1)
  static Weight table(std::vector<double> vals);  // finite table, last value extended

  /// CLI-style names: "power:0.5", "sqrt" (= power:0.5), "n" (= power:1),
  /// "sqrtlog", "sqrtlog:2", "sqrt*log" (= sqrtlog:1), "log",
  /// "table:1,1.5,2".
  static Weight parse(const std::string& spec);

  double operator()(Index n) const { return eval_(n); }
  const std::string& name() const { return name_; }

private:
  Weight(std::string name, std::function<double(Index)> eval)
      : name_(std::move(name)), eval_(std::move(eval)) {}
  std::string name_;
  std::function<double(Index)> eval_;
};

/// Summing transform  omega~(m) = sum_{n<=m} omega(n)/n.
double summing_weight(const Weight& w, Index m);

struct DilationReport {
  Index M;
  double phi_hat;  // min over 1<=k<=k_max of w(Mk)/w(k)
  double Phi_hat;  // max over the same range
  Index k_max;
};
DilationReport dilation_bounds(const Weight& w, Index M, Index k_max);

struct IndexReport {
  double i_hat;  // max over dyadic M<=M_max of ln(phi_hat)/ln(M)
  double I_hat;  // min over dyadic M<=M_max of ln(Phi_hat)/ln(M)
  Index M_max;
  Index k_max;
};
IndexReport dilation_indices(const Weight& w, Index M_max, Index k_max);

/// max over n <= n_max of omega(2n)/omega(n).
double check_doubling(const Weight& w, Index n_max);

enum class RegularityMode { LRP, URP };

struct RegularityReport {
  double constant;  // best constant over the scanned range
  bool holds;       // nondegenerate and stable under range growth
};
/// LRP with exponent a: largest C with w(N)/w(k) >= C (N/k)^a on 1<=k<=N<=range.
/// URP with exponent b: smallest C with w(N)/w(k) <= C (N/k)^b on the range.
/// `holds` additionally requires the constant to be stable between the
/// quarter-range scan and the full scan (a drifting constant signals that the
/// property degenerates as the range grows).
RegularityReport regularity_check(const Weight& w, double exponent,
                                  RegularityMode mode, Index range);

/// max over N <= N_max of omega~(N)/omega(N); finite iff the summing
/// transform stays comparable to the weight.
double equiv_ratio(const Weight& w, Index N_max);

}  // namespace greedylab
