#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <vector>

#include "repstab/errors.hpp"

namespace repstab::cat {

/// A bijection of [n], stored 1-based: images()[i - 1] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      require(v >= 1 && v <= size() && !seen[v], "permutation: not a bijection of [n]");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  [[nodiscard]] int size() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] int operator()(int i) const { return images_[i - 1]; }
  [[nodiscard]] const std::vector<int>& images() const { return images_; }

  [[nodiscard]] Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i) inv[(*this)(i) - 1] = i;
    return Permutation(std::move(inv));
  }

  [[nodiscard]] bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// (outer ∘ inner)(i) = outer(inner(i)).
inline Permutation compose(const Permutation& outer, const Permutation& inner) {
  require(outer.size() == inner.size(), "composition domain mismatch");
  std::vector<int> v(inner.size());
  for (int i = 1; i <= inner.size(); ++i) v[i - 1] = outer(inner(i));
  return Permutation(std::move(v));
}

/// All of S_n in lexicographic order of image sequences.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// The block embedding S_n × S_m → S_{n+m}: the first factor acts on 1..n,
/// the second on n+1..n+m.
inline Permutation block_sum(const Permutation& left, const Permutation& right) {
  std::vector<int> v;
  v.reserve(left.size() + right.size());
  for (int i = 1; i <= left.size(); ++i) v.push_back(left(i));
  for (int j = 1; j <= right.size(); ++j) v.push_back(left.size() + right(j));
  return Permutation(std::move(v));
}

/// The block swap τ in S_{n+m}: τ(i) = m + i for i ≤ n and τ(n + j) = j.
inline Permutation block_swap(int n, int m) {
  std::vector<int> v(n + m);
  for (int i = 1; i <= n; ++i) v[i - 1] = m + i;
  for (int j = 1; j <= m; ++j) v[n + j - 1] = j;
  return Permutation(std::move(v));
}

}  // namespace repstab::cat
