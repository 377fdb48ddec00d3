#pragma once

// The Veronese category V_r. Objects are pairs (d, m); a morphism
// (d, m) → (e, n) is an order-preserving injection α1 : [m] → [n], a
// labeling α2 of [n] \ α1([m]) by degree-e multi-indices and a labeling α3
// of [m] by degree-(e - d) multi-indices.

#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "repstab/cat/colored_injection.hpp"
#include "repstab/errors.hpp"
#include "repstab/polynomial.hpp"

namespace repstab::cat {

/// An element of Z_{>=0}^r; its degree is the sum of the parts.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) require(p >= 0, "multi-index: negative part");
  }
  static MultiIndex zero(int r) { return MultiIndex(std::vector<int>(r, 0)); }

  [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    require(a.length() == b.length(), "multi-index: length mismatch");
    std::vector<int> s(a.parts_.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.parts_[i] + b.parts_[i];
    return MultiIndex(std::move(s));
  }

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> parts_;
};

/// All multi-indices of length r and the given degree, lexicographically
/// ascending.
inline std::vector<MultiIndex> multi_indices(int r, int degree) {
  std::vector<MultiIndex> out;
  auto mons = monomials_of_degree(r, degree);
  for (auto it = mons.rbegin(); it != mons.rend(); ++it) out.emplace_back(*it);
  return out;
}

struct VeroneseObject {
  int degree = 0;
  int length = 0;
  auto operator<=>(const VeroneseObject&) const = default;
};

class VeroneseMorphism {
 public:
  /// `alpha2` is keyed by the points of [n] outside the image of α1.
  VeroneseMorphism(int r, VeroneseObject src, VeroneseObject tgt, std::vector<int> alpha1,
                   const std::map<int, MultiIndex>& alpha2, std::vector<MultiIndex> alpha3)
      : r_(r), src_(src), tgt_(tgt), alpha1_(std::move(alpha1)), alpha2_(tgt.length), alpha3_(std::move(alpha3)) {
    require(r >= 1, "veronese morphism: need r >= 1");
    require(src.degree >= 0 && src.length >= 0, "veronese morphism: invalid source object");
    require(src.degree <= tgt.degree, "veronese morphism: source degree exceeds target degree");
    require(src.length <= tgt.length, "veronese morphism: source length exceeds target length");
    require(static_cast<int>(alpha1_.size()) == src.length, "veronese morphism: alpha1 has wrong length");
    std::vector<bool> hit(tgt.length + 1, false);
    for (std::size_t i = 0; i < alpha1_.size(); ++i) {
      int v = alpha1_[i];
      require(v >= 1 && v <= tgt.length, "veronese morphism: alpha1 value out of range");
      require(i == 0 || alpha1_[i - 1] < v, "veronese morphism: alpha1 must be strictly increasing");
      hit[v] = true;
    }
    for (const auto& [i, c] : alpha2) {
      require(i >= 1 && i <= tgt.length && !hit[i], "veronese morphism: alpha2 defined off the complement");
      require(c.length() == r && c.degree() == tgt.degree, "veronese morphism: alpha2 value has wrong degree");
      alpha2_[i - 1] = c;
    }
    for (int i = 1; i <= tgt.length; ++i)
      require(hit[i] || alpha2_[i - 1].length() == r, "veronese morphism: alpha2 must cover the complement");
    require(static_cast<int>(alpha3_.size()) == src.length, "veronese morphism: alpha3 has wrong length");
    for (const auto& c : alpha3_)
      require(c.length() == r && c.degree() == tgt.degree - src.degree,
              "veronese morphism: alpha3 value has wrong degree");
  }

  static VeroneseMorphism identity(int r, VeroneseObject obj) {
    std::vector<int> a1(obj.length);
    std::iota(a1.begin(), a1.end(), 1);
    return VeroneseMorphism(r, obj, obj, std::move(a1), {},
                            std::vector<MultiIndex>(obj.length, MultiIndex::zero(r)));
  }

  [[nodiscard]] int r() const { return r_; }
  [[nodiscard]] VeroneseObject src() const { return src_; }
  [[nodiscard]] VeroneseObject tgt() const { return tgt_; }
  [[nodiscard]] const std::vector<int>& alpha1() const { return alpha1_; }
  [[nodiscard]] const std::vector<MultiIndex>& alpha3() const { return alpha3_; }
  [[nodiscard]] bool in_image(int i) const { return alpha2_[i - 1].length() == 0; }
  /// α2(i); only meaningful off the image of α1.
  [[nodiscard]] const MultiIndex& alpha2(int i) const { return alpha2_[i - 1]; }
  [[nodiscard]] std::map<int, MultiIndex> alpha2_map() const {
    std::map<int, MultiIndex> m;
    for (int i = 1; i <= tgt_.length; ++i)
      if (!in_image(i)) m.emplace(i, alpha2_[i - 1]);
    return m;
  }

  /// Canonical order: objects, then α1, then α2 by position, then α3.
  auto operator<=>(const VeroneseMorphism&) const = default;

 private:
  int r_;
  VeroneseObject src_;
  VeroneseObject tgt_;
  std::vector<int> alpha1_;
  std::vector<MultiIndex> alpha2_;  // empty multi-index on the image of α1
  std::vector<MultiIndex> alpha3_;
};

/// γ = β ∘ α:
///   γ1 = β1 ∘ α1;
///   γ2(i) = β2(i) off the image of β1, and α2(i') + β3(i') when
///     i = β1(i') with i' outside the image of α1;
///   γ3(j) = α3(j) + β3(α1(j)).
inline VeroneseMorphism compose(const VeroneseMorphism& beta, const VeroneseMorphism& alpha) {
  if (alpha.tgt() != beta.src() || alpha.r() != beta.r()) throw domain_error("composition domain mismatch");
  std::vector<int> g1(alpha.alpha1().size());
  for (std::size_t j = 0; j < g1.size(); ++j) g1[j] = beta.alpha1()[alpha.alpha1()[j] - 1];
  std::map<int, MultiIndex> g2;
  const int p = beta.tgt().length;
  for (int i = 1; i <= p; ++i)
    if (!beta.in_image(i)) g2.emplace(i, beta.alpha2(i));
  for (int ip = 1; ip <= alpha.tgt().length; ++ip)
    if (!alpha.in_image(ip)) g2.emplace(beta.alpha1()[ip - 1], alpha.alpha2(ip) + beta.alpha3()[ip - 1]);
  std::vector<MultiIndex> g3;
  g3.reserve(alpha.alpha3().size());
  for (std::size_t j = 0; j < alpha.alpha3().size(); ++j)
    g3.push_back(alpha.alpha3()[j] + beta.alpha3()[alpha.alpha1()[j] - 1]);
  return VeroneseMorphism(alpha.r(), alpha.src(), beta.tgt(), std::move(g1), g2, std::move(g3));
}

inline VeroneseMorphism compose_veronese(const VeroneseMorphism& beta, const VeroneseMorphism& alpha) {
  return compose(beta, alpha);
}

/// All morphisms src → tgt in canonical order; empty when d > e or m > n.
inline std::vector<VeroneseMorphism> enumerate_hom(int r, VeroneseObject src, VeroneseObject tgt) {
  std::vector<VeroneseMorphism> out;
  if (r < 1 || src.degree > tgt.degree || src.length > tgt.length || src.degree < 0 || src.length < 0) return out;
  const auto top = multi_indices(r, tgt.degree);
  const auto shift = multi_indices(r, tgt.degree - src.degree);
  const int nt = static_cast<int>(top.size());
  const int ns = static_cast<int>(shift.size());
  detail::for_each_injection<true>(src.length, tgt.length, [&](const std::vector<int>& a1) {
    std::vector<bool> hit(tgt.length + 1, false);
    for (int v : a1) hit[v] = true;
    std::vector<int> free;
    for (int i = 1; i <= tgt.length; ++i)
      if (!hit[i]) free.push_back(i);
    detail::for_each_coloring(static_cast<int>(free.size()), nt, [&](const std::vector<int>& c2) {
      std::map<int, MultiIndex> a2;
      for (std::size_t k = 0; k < free.size(); ++k) a2.emplace(free[k], top[c2[k] - 1]);
      detail::for_each_coloring(src.length, ns, [&](const std::vector<int>& c3) {
        std::vector<MultiIndex> a3;
        for (int c : c3) a3.push_back(shift[c - 1]);
        out.emplace_back(r, src, tgt, a1, a2, std::move(a3));
      });
    });
  });
  return out;
}

/// The functor (d, m) ↦ (Sym^d k^r)^{⊗m} on a pure tensor f_1 ⊗ ... ⊗ f_m:
/// the output factor at α1(j) is f_j · x^{α3(j)}, every other output factor i
/// is x^{α2(i)}. Extends linearly to sums of pure tensors.
inline std::vector<SparsePoly> apply(const VeroneseMorphism& alpha, std::span<const SparsePoly> factors) {
  require(static_cast<int>(factors.size()) == alpha.src().length, "veronese action: wrong number of factors");
  for (const auto& f : factors)
    require(f.nvars() == alpha.r() && f.is_homogeneous() && (f.is_zero() || f.degree() == alpha.src().degree),
            "veronese action: factor is not in Sym^d k^r");
  std::vector<SparsePoly> out;
  out.reserve(alpha.tgt().length);
  for (int i = 1; i <= alpha.tgt().length; ++i)
    if (!alpha.in_image(i)) out.push_back(SparsePoly::monomial(alpha.alpha2(i).parts()));
    else out.emplace_back(alpha.r());
  for (int j = 1; j <= alpha.src().length; ++j) {
    int i = alpha.alpha1()[j - 1];
    out[i - 1] = factors[j - 1] * SparsePoly::monomial(alpha.alpha3()[j - 1].parts());
  }
  return out;
}

}  // namespace repstab::cat
