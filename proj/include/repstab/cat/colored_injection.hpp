#pragma once

// Morphisms of FI_d and OI_d: an injection f : [n] → [m] together with a
// d-coloring g of the complement [m] \ f([n]).

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "repstab/cat/permutation.hpp"
#include "repstab/errors.hpp"

namespace repstab::cat {

/// Injections are arbitrary (FI_d).
struct Unordered {
  static constexpr bool order_preserving = false;
  static constexpr const char* tag = "FI";
};

/// Injections must be strictly increasing (OI_d).
struct OrderPreserving {
  static constexpr bool order_preserving = true;
  static constexpr const char* tag = "OI";
};

template <class Order>
class ColoredInjection {
 public:
  /// `injection[i - 1]` is f(i); `coloring` maps each point of the complement
  /// of the image to a color in 1..colors.
  ColoredInjection(int colors, int src, int tgt, std::vector<int> injection, const std::map<int, int>& coloring)
      : colors_(colors), src_(src), tgt_(tgt), f_(std::move(injection)), color_(static_cast<std::size_t>(tgt), 0) {
    require(colors >= 1, "colored injection: need d >= 1");
    require(src >= 0 && src <= tgt, "colored injection: need 0 <= n <= m");
    require(static_cast<int>(f_.size()) == src, "colored injection: injection has wrong length");
    for (std::size_t i = 0; i < f_.size(); ++i) {
      int v = f_[i];
      require(v >= 1 && v <= tgt, "colored injection: injection value out of range");
      require(color_[v - 1] == 0, "colored injection: injection is not injective");
      color_[v - 1] = -1;
      if constexpr (Order::order_preserving)
        require(i == 0 || f_[i - 1] < v, "colored injection: injection must be order-preserving");
    }
    for (auto [u, c] : coloring) {
      require(u >= 1 && u <= tgt, "colored injection: colored point out of range");
      require(color_[u - 1] != -1, "colored injection: coloring defined on the image");
      require(c >= 1 && c <= colors, "colored injection: color out of range");
      color_[u - 1] = c;
    }
    for (int u = 1; u <= tgt; ++u) {
      require(color_[u - 1] != 0, "colored injection: coloring must cover the complement of the image");
      if (color_[u - 1] == -1) color_[u - 1] = 0;
    }
  }

  static ColoredInjection identity(int colors, int n) {
    std::vector<int> f(n);
    for (int i = 0; i < n; ++i) f[i] = i + 1;
    return ColoredInjection(colors, n, n, std::move(f), {});
  }

  [[nodiscard]] int colors() const { return colors_; }
  [[nodiscard]] int src() const { return src_; }
  [[nodiscard]] int tgt() const { return tgt_; }
  [[nodiscard]] int operator()(int i) const { return f_[i - 1]; }
  [[nodiscard]] const std::vector<int>& injection() const { return f_; }
  /// Color of u, or 0 when u lies in the image.
  [[nodiscard]] int color(int u) const { return color_[u - 1]; }
  [[nodiscard]] bool in_image(int u) const { return color_[u - 1] == 0; }

  [[nodiscard]] std::map<int, int> coloring() const {
    std::map<int, int> g;
    for (int u = 1; u <= tgt_; ++u)
      if (color_[u - 1] != 0) g.emplace(u, color_[u - 1]);
    return g;
  }

  /// Canonical order: (d, n, m), then f lexicographically, then the colors
  /// of the complement by increasing position.
  auto operator<=>(const ColoredInjection&) const = default;

 private:
  struct Unchecked {};
  ColoredInjection(Unchecked, int colors, int src, int tgt, std::vector<int> f, std::vector<int> color)
      : colors_(colors), src_(src), tgt_(tgt), f_(std::move(f)), color_(std::move(color)) {}

  template <class O>
  friend ColoredInjection<O> compose(const ColoredInjection<O>&, const ColoredInjection<O>&);

  int colors_;
  int src_;
  int tgt_;
  std::vector<int> f_;
  std::vector<int> color_;  // color_[u - 1] = g(u), 0 on the image
};

using FIdMorphism = ColoredInjection<Unordered>;
using OIdMorphism = ColoredInjection<OrderPreserving>;

/// second ∘ first. The composite injection is f' ∘ f. Points outside the
/// image of f' keep their color from g'; a point f'(t) with t outside the
/// image of f receives g(t).
template <class Order>
ColoredInjection<Order> compose(const ColoredInjection<Order>& second, const ColoredInjection<Order>& first) {
  if (first.tgt() != second.src() || first.colors() != second.colors())
    throw domain_error("composition domain mismatch");
  std::vector<int> f(first.f_.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = second(first.f_[i]);
  std::vector<int> color = second.color_;
  for (int t = 1; t <= first.tgt(); ++t)
    if (!first.in_image(t)) color[second(t) - 1] = first.color(t);
  return ColoredInjection<Order>(typename ColoredInjection<Order>::Unchecked{}, first.colors(), first.src(),
                                 second.tgt(), std::move(f), std::move(color));
}

inline FIdMorphism compose_fid(const FIdMorphism& second, const FIdMorphism& first) { return compose(second, first); }
inline OIdMorphism compose_oid(const OIdMorphism& second, const OIdMorphism& first) { return compose(second, first); }

namespace detail {

// Calls visit(f) for each injection [n] → [m] in lexicographic order.
template <bool Increasing, class Visit>
void for_each_injection(int n, int m, Visit&& visit) {
  std::vector<int> f(n);
  std::vector<bool> used(m + 1, false);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      visit(f);
      return;
    }
    int lo = (Increasing && i > 0) ? f[i - 1] + 1 : 1;
    for (int v = lo; v <= m; ++v) {
      if (used[v]) continue;
      used[v] = true;
      f[i] = v;
      rec(i + 1);
      used[v] = false;
    }
  };
  rec(0);
}

// Calls visit(colors) for every function from `points` points to 1..d,
// lexicographically.
template <class Visit>
void for_each_coloring(int points, int d, Visit&& visit) {
  std::vector<int> c(points, 1);
  while (true) {
    visit(c);
    int k = points - 1;
    while (k >= 0 && c[k] == d) c[k--] = 1;
    if (k < 0) return;
    ++c[k];
  }
}

}  // namespace detail

/// All morphisms [n] → [m] in canonical order. Empty when n > m.
template <class Order>
std::vector<ColoredInjection<Order>> enumerate_hom(int colors, int n, int m) {
  std::vector<ColoredInjection<Order>> out;
  if (n < 0 || n > m || colors < 1) return out;
  detail::for_each_injection<Order::order_preserving>(n, m, [&](const std::vector<int>& f) {
    std::vector<bool> hit(m + 1, false);
    for (int v : f) hit[v] = true;
    std::vector<int> free;
    for (int u = 1; u <= m; ++u)
      if (!hit[u]) free.push_back(u);
    detail::for_each_coloring(static_cast<int>(free.size()), colors, [&](const std::vector<int>& c) {
      std::map<int, int> g;
      for (std::size_t k = 0; k < free.size(); ++k) g.emplace(free[k], c[k]);
      out.emplace_back(colors, n, m, f, g);
    });
  });
  return out;
}

/// The forgetful functor OI_d → FI_d.
inline FIdMorphism forget_order(const OIdMorphism& phi) {
  return FIdMorphism(phi.colors(), phi.src(), phi.tgt(), phi.injection(), phi.coloring());
}

/// Splits φ = (f, g) into the unique σ ∈ S_n with f ∘ σ increasing and the
/// order-preserving ψ = (f ∘ σ, g).
inline std::pair<Permutation, OIdMorphism> decompose_fid_morphism(const FIdMorphism& phi) {
  std::vector<int> order(phi.src());
  for (int i = 0; i < phi.src(); ++i) order[i] = i + 1;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return phi(a) < phi(b); });
  Permutation sigma(order);
  std::vector<int> sorted(phi.src());
  for (int i = 1; i <= phi.src(); ++i) sorted[i - 1] = phi(sigma(i));
  return {sigma, OIdMorphism(phi.colors(), phi.src(), phi.tgt(), std::move(sorted), phi.coloring())};
}

/// Inverse of decompose_fid_morphism: f = ψ ∘ σ⁻¹.
inline FIdMorphism reassemble(const Permutation& sigma, const OIdMorphism& psi) {
  require(sigma.size() == psi.src(), "reassemble: permutation size mismatch");
  Permutation inv = sigma.inverse();
  std::vector<int> f(psi.src());
  for (int i = 1; i <= psi.src(); ++i) f[i - 1] = psi(inv(i));
  return FIdMorphism(psi.colors(), psi.src(), psi.tgt(), std::move(f), psi.coloring());
}

/// A permutation viewed as an automorphism of [n] in FI_d.
inline FIdMorphism as_fid(const Permutation& sigma, int colors) {
  return FIdMorphism(colors, sigma.size(), sigma.size(), sigma.images(), {});
}

}  // namespace repstab::cat
