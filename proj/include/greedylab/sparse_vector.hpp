#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace greedylab {

using Index = long;

/// Finitely supported coefficient sequence indexed from 1.
/// Zero coefficients are never stored.
class SparseVector {
public:
  SparseVector() = default;

  SparseVector(std::initializer_list<std::pair<Index, double>> init) {
    for (const auto& [i, c] : init) set(i, c);
  }

  /// Builds from dense 1-based coefficients (index i = position in `dense` + 1).
  static SparseVector from_dense(const std::vector<double>& dense) {
    SparseVector x;
    for (std::size_t i = 0; i < dense.size(); ++i)
      x.set(static_cast<Index>(i) + 1, dense[i]);
    return x;
  }

  void set(Index i, double c) {
    if (i < 1) throw std::invalid_argument("SparseVector: index must be >= 1");
    if (c == 0.0)
      entries_.erase(i);
    else
      entries_[i] = c;
  }

  double coeff(Index i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? 0.0 : it->second;
  }

  const std::map<Index, double>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Index max_index() const {
    return entries_.empty() ? 0 : entries_.rbegin()->first;
  }

  std::vector<Index> support() const {
    std::vector<Index> s;
    s.reserve(entries_.size());
    for (const auto& [i, c] : entries_) s.push_back(i);
    return s;
  }

  /// Coefficient restriction P_A.
  template <typename Container>
  SparseVector project(const Container& A) const {
    SparseVector out;
    for (Index i : A) {
      auto it = entries_.find(i);
      if (it != entries_.end()) out.set(i, it->second);
    }
    return out;
  }

  /// Restriction to the complement of A.
  template <typename Container>
  SparseVector project_complement(const Container& A) const {
    SparseVector out = *this;
    for (Index i : A) out.entries_.erase(i);
    return out;
  }

  /// S_m: restriction to [1, m].
  SparseVector partial_sum(Index m) const {
    SparseVector out;
    for (const auto& [i, c] : entries_) {
      if (i > m) break;
      out.set(i, c);
    }
    return out;
  }

  SparseVector scaled(double t) const {
    SparseVector out;
    if (t == 0.0) return out;
    for (const auto& [i, c] : entries_) out.set(i, t * c);
    return out;
  }

  SparseVector operator+(const SparseVector& other) const {
    SparseVector out = *this;
    for (const auto& [i, c] : other.entries_) out.set(i, out.coeff(i) + c);
    return out;
  }

  SparseVector operator-(const SparseVector& other) const {
    SparseVector out = *this;
    for (const auto& [i, c] : other.entries_) out.set(i, out.coeff(i) - c);
    return out;
  }

  bool operator==(const SparseVector& other) const {
    return entries_ == other.entries_;
  }

private:
  std::map<Index, double> entries_;
};

/// Index set A with a sign pattern, representing 1_{eps A}.
struct SignedSet {
  std::vector<Index> indices;
  std::vector<int> signs;  // +1 / -1, aligned with indices

  SignedSet() = default;
  SignedSet(std::vector<Index> idx, std::vector<int> sg)
      : indices(std::move(idx)), signs(std::move(sg)) {
    if (indices.size() != signs.size())
      throw std::invalid_argument("SignedSet: signs must cover exactly A");
  }

  static SignedSet plus(std::vector<Index> idx) {
    std::vector<int> s(idx.size(), 1);
    return SignedSet(std::move(idx), std::move(s));
  }

  /// Alternating +,-,+,- along the (sorted) index list.
  static SignedSet alternating(std::vector<Index> idx) {
    std::vector<int> s(idx.size());
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = (k % 2 == 0) ? 1 : -1;
    return SignedSet(std::move(idx), std::move(s));
  }

  SparseVector indicator() const {
    SparseVector x;
    for (std::size_t k = 0; k < indices.size(); ++k)
      x.set(indices[k], static_cast<double>(signs[k]));
    return x;
  }

  std::size_t size() const { return indices.size(); }
};

}  // namespace greedylab
