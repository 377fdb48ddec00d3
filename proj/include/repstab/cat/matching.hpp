#pragma once

// The degree-d matching category: a morphism [n] → [m] is an injection f
// plus a partition of [m] \ f([n]) into d-element blocks. With
// OrderPreserving, f must be increasing (the ordered variant).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "repstab/cat/colored_injection.hpp"
#include "repstab/errors.hpp"

namespace repstab::cat {

using Block = std::vector<int>;

template <class Order>
class Matching {
 public:
  Matching(int block_size, int src, int tgt, std::vector<int> injection, std::vector<Block> blocks)
      : d_(block_size), src_(src), tgt_(tgt), f_(std::move(injection)), blocks_(std::move(blocks)) {
    require(block_size >= 1, "matching morphism: need block size >= 1");
    require(src >= 0 && src <= tgt, "matching morphism: need 0 <= n <= m");
    require((tgt - src) % block_size == 0, "matching morphism: m - n must be divisible by the block size");
    require(static_cast<int>(f_.size()) == src, "matching morphism: injection has wrong length");
    std::vector<int> owner(tgt + 1, 0);
    for (std::size_t i = 0; i < f_.size(); ++i) {
      int v = f_[i];
      require(v >= 1 && v <= tgt && owner[v] == 0, "matching morphism: injection invalid");
      if constexpr (Order::order_preserving)
        require(i == 0 || f_[i - 1] < v, "matching morphism: injection must be order-preserving");
      owner[v] = -1;
    }
    for (auto& b : blocks_) {
      require(static_cast<int>(b.size()) == block_size, "matching morphism: block has wrong size");
      for (int u : b) {
        require(u >= 1 && u <= tgt && owner[u] == 0, "matching morphism: blocks must partition the complement");
        owner[u] = 1;
      }
      std::sort(b.begin(), b.end());
    }
    for (int u = 1; u <= tgt; ++u) require(owner[u] != 0, "matching morphism: blocks must cover the complement");
    std::sort(blocks_.begin(), blocks_.end());
  }

  static Matching identity(int block_size, int n) {
    std::vector<int> f(n);
    for (int i = 0; i < n; ++i) f[i] = i + 1;
    return Matching(block_size, n, n, std::move(f), {});
  }

  [[nodiscard]] int block_size() const { return d_; }
  [[nodiscard]] int src() const { return src_; }
  [[nodiscard]] int tgt() const { return tgt_; }
  [[nodiscard]] int operator()(int i) const { return f_[i - 1]; }
  [[nodiscard]] const std::vector<int>& injection() const { return f_; }
  /// Blocks, each sorted, listed in increasing order.
  [[nodiscard]] const std::vector<Block>& blocks() const { return blocks_; }

  auto operator<=>(const Matching&) const = default;

 private:
  int d_;
  int src_;
  int tgt_;
  std::vector<int> f_;
  std::vector<Block> blocks_;
};

using MatchingMorphism = Matching<Unordered>;
using OrderedMatchingMorphism = Matching<OrderPreserving>;

/// second ∘ first: injection f' ∘ f, blocks Π' together with f'(B) for B in Π.
template <class Order>
Matching<Order> compose(const Matching<Order>& second, const Matching<Order>& first) {
  if (first.tgt() != second.src() || first.block_size() != second.block_size())
    throw domain_error("composition domain mismatch");
  std::vector<int> f(first.src());
  for (int i = 1; i <= first.src(); ++i) f[i - 1] = second(first(i));
  std::vector<Block> blocks = second.blocks();
  for (const auto& b : first.blocks()) {
    Block pushed;
    for (int u : b) pushed.push_back(second(u));
    blocks.push_back(std::move(pushed));
  }
  return Matching<Order>(first.block_size(), first.src(), second.tgt(), std::move(f), std::move(blocks));
}

inline MatchingMorphism compose_matching(const MatchingMorphism& second, const MatchingMorphism& first) {
  return compose(second, first);
}

namespace detail {

// Every partition of `points` (sorted) into blocks of size d, in
// lexicographic order of the sorted block list.
template <class Visit>
void for_each_block_partition(const std::vector<int>& points, int d, Visit&& visit) {
  std::vector<bool> used(points.size(), false);
  std::vector<Block> blocks;
  std::function<void()> rec = [&]() {
    std::size_t first = 0;
    while (first < points.size() && used[first]) ++first;
    if (first == points.size()) {
      visit(blocks);
      return;
    }
    used[first] = true;
    Block b{points[first]};
    std::function<void(std::size_t)> pick = [&](std::size_t from) {
      if (static_cast<int>(b.size()) == d) {
        blocks.push_back(b);
        rec();
        blocks.pop_back();
        return;
      }
      for (std::size_t k = from; k < points.size(); ++k) {
        if (used[k]) continue;
        used[k] = true;
        b.push_back(points[k]);
        pick(k + 1);
        b.pop_back();
        used[k] = false;
      }
    };
    pick(first + 1);
    used[first] = false;
  };
  rec();
}

}  // namespace detail

/// All matching morphisms [n] → [m] in canonical order.
template <class Order>
std::vector<Matching<Order>> enumerate_matching_hom(int block_size, int n, int m) {
  std::vector<Matching<Order>> out;
  if (block_size < 1 || n < 0 || n > m || (m - n) % block_size != 0) return out;
  detail::for_each_injection<Order::order_preserving>(n, m, [&](const std::vector<int>& f) {
    std::vector<bool> hit(m + 1, false);
    for (int v : f) hit[v] = true;
    std::vector<int> free;
    for (int u = 1; u <= m; ++u)
      if (!hit[u]) free.push_back(u);
    detail::for_each_block_partition(free, block_size, [&](const std::vector<Block>& blocks) {
      out.emplace_back(block_size, n, m, f, blocks);
    });
  });
  return out;
}

}  // namespace repstab::cat
