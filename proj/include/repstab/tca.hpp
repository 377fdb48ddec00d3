#pragma once

// The free tca A = Sym(E⟨1⟩) with E = k^d, modeled through FI_d: a basis
// tensor of A_n is a coloring [n] → [d], which is the same thing as a basis
// vector of the principal projective P_0([n]). Multiplication by a ∈ A_n on
// an FI_d-module is the action of the morphism i ↦ i + n colored by a.

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "repstab/cat/colored_injection.hpp"
#include "repstab/cat/matching.hpp"
#include "repstab/cat/permutation.hpp"
#include "repstab/errors.hpp"
#include "repstab/exact.hpp"

namespace repstab::tca {

using cat::FIdMorphism;
using cat::Permutation;

/// A basis tensor e_{w(1)} ⊗ ... ⊗ e_{w(n)} of E^{⊗n}.
struct TcaBasisElement {
  int colors = 1;
  std::vector<int> word;  // values in 1..colors

  TcaBasisElement() = default;
  TcaBasisElement(int d, std::vector<int> w) : colors(d), word(std::move(w)) {
    require(d >= 1, "tca element: need d >= 1");
    for (int c : word) require(c >= 1 && c <= d, "tca element: color out of range");
  }
  [[nodiscard]] int degree() const { return static_cast<int>(word.size()); }
  auto operator<=>(const TcaBasisElement&) const = default;
};

/// Concatenation of tensors.
inline TcaBasisElement multiply(const TcaBasisElement& x, const TcaBasisElement& y) {
  require(x.colors == y.colors, "tca: color-count mismatch");
  std::vector<int> w = x.word;
  w.insert(w.end(), y.word.begin(), y.word.end());
  return {x.colors, std::move(w)};
}

/// An element of the FI_d principal projective P_k: a finite combination of
/// morphisms [k] → [m] (possibly for several m).
class ProjectiveElement {
 public:
  using Terms = std::map<FIdMorphism, Rational>;

  ProjectiveElement(int k, int colors) : k_(k), colors_(colors) {}
  static ProjectiveElement basis(const FIdMorphism& phi, const Rational& c = 1) {
    ProjectiveElement v(phi.src(), phi.colors());
    v.add(phi, c);
    return v;
  }

  [[nodiscard]] int source() const { return k_; }
  [[nodiscard]] int colors() const { return colors_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }

  void add(const FIdMorphism& phi, const Rational& c) {
    require(phi.src() == k_ && phi.colors() == colors_, "projective element: term shape mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(phi, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  ProjectiveElement& operator+=(const ProjectiveElement& o) {
    require(o.k_ == k_ && o.colors_ == colors_, "projective element: shape mismatch");
    for (const auto& [phi, c] : o.terms_) add(phi, c);
    return *this;
  }
  ProjectiveElement& operator*=(const Rational& s) {
    if (sgn(s) == 0) terms_.clear();
    for (auto& [phi, c] : terms_) c *= s;
    return *this;
  }
  friend bool operator==(const ProjectiveElement& a, const ProjectiveElement& b) {
    return a.k_ == b.k_ && a.colors_ == b.colors_ && a.terms_ == b.terms_;
  }

 private:
  int k_;
  int colors_;
  Terms terms_;
};

/// P_k(β): post-composition with β. Terms must have target β.src().
inline ProjectiveElement act(const FIdMorphism& beta, const ProjectiveElement& v) {
  ProjectiveElement out(v.source(), v.colors());
  for (const auto& [phi, c] : v.terms()) out.add(cat::compose(beta, phi), c);
  return out;
}

/// The FI_d morphism [m] → [n + m], i ↦ i + n, with [n] colored by a.
inline FIdMorphism shift_morphism(const TcaBasisElement& a, int m) {
  std::vector<int> f(m);
  std::iota(f.begin(), f.end(), a.degree() + 1);
  std::map<int, int> g;
  for (int i = 1; i <= a.degree(); ++i) g.emplace(i, a.word[i - 1]);
  return FIdMorphism(a.colors, m, a.degree() + m, std::move(f), g);
}

/// a · v for a basis tensor a ∈ A_n, applied degree by degree.
inline ProjectiveElement tca_action(const TcaBasisElement& a, const ProjectiveElement& v) {
  require(a.colors == v.colors(), "tca action: color-count mismatch");
  ProjectiveElement out(v.source(), v.colors());
  for (const auto& [phi, c] : v.terms()) out.add(cat::compose(shift_morphism(a, phi.tgt()), phi), c);
  return out;
}

/// A_n ≅ P_0([n]): the coloring w as the morphism [0] → [n].
inline ProjectiveElement as_projective(const TcaBasisElement& x) {
  std::map<int, int> g;
  for (int i = 1; i <= x.degree(); ++i) g.emplace(i, x.word[i - 1]);
  return ProjectiveElement::basis(FIdMorphism(x.colors, 0, x.degree(), {}, g));
}

inline TcaBasisElement from_projective(const ProjectiveElement& v) {
  require(v.source() == 0 && v.terms().size() == 1 && v.terms().begin()->second == 1,
          "tca: not a basis tensor of P_0");
  const FIdMorphism& phi = v.terms().begin()->first;
  std::vector<int> w(phi.tgt());
  for (int u = 1; u <= phi.tgt(); ++u) w[u - 1] = phi.color(u);
  return {phi.colors(), std::move(w)};
}

/// σ · x, computed as the automorphism σ of [n] acting on P_0([n]); the
/// factor in position i moves to position σ(i).
inline TcaBasisElement permute(const Permutation& sigma, const TcaBasisElement& x) {
  require(sigma.size() == x.degree(), "tca: permutation size mismatch");
  return from_projective(act(cat::as_fid(sigma, x.colors), as_projective(x)));
}

/// Product in A computed by the module action of A on A = P_0.
inline TcaBasisElement product_via_action(const TcaBasisElement& x, const TcaBasisElement& y) {
  return from_projective(tca_action(x, as_projective(y)));
}

/// τ(xy) = yx with τ the block swap of {1..n} and {n+1..n+m}.
inline bool check_twisted_commutativity(const TcaBasisElement& x, const TcaBasisElement& y) {
  require(x.colors == y.colors, "tca: color-count mismatch");
  const TcaBasisElement xy = product_via_action(x, y);
  return permute(cat::block_swap(x.degree(), y.degree()), xy) == product_via_action(y, x);
}

inline std::vector<TcaBasisElement> all_basis_elements(int n, int d) {
  std::vector<TcaBasisElement> out;
  cat::detail::for_each_coloring(n, d, [&](const std::vector<int>& w) { out.emplace_back(d, w); });
  return out;
}

/// (σx)(τy) = (σ × τ)(xy) over all σ ∈ S_n, τ ∈ S_m and basis tensors.
inline bool equivariance_probe(int n, int m, int d) {
  const auto sn = cat::all_permutations(n);
  const auto sm = cat::all_permutations(m);
  const auto xs = all_basis_elements(n, d);
  const auto ys = all_basis_elements(m, d);
  for (const auto& s : sn)
    for (const auto& t : sm) {
      const Permutation st = cat::block_sum(s, t);
      for (const auto& x : xs)
        for (const auto& y : ys)
          if (product_via_action(permute(s, x), permute(t, y)) != permute(st, product_via_action(x, y)))
            return false;
    }
  return true;
}

/// Number of orbits of S_m acting on Hom_{FI_d}([n], [m]) by post-composition.
inline std::size_t orbit_count(int n, int m, int d) {
  const auto homs = cat::enumerate_hom<cat::Unordered>(d, n, m);
  std::map<FIdMorphism, std::size_t> index;
  for (std::size_t k = 0; k < homs.size(); ++k) index.emplace(homs[k], k);
  std::vector<bool> seen(homs.size(), false);
  std::vector<FIdMorphism> generators;
  for (const auto& s : cat::all_permutations(m)) generators.push_back(cat::as_fid(s, d));
  std::size_t orbits = 0;
  for (std::size_t k = 0; k < homs.size(); ++k) {
    if (seen[k]) continue;
    ++orbits;
    for (const auto& g : generators) seen[index.at(cat::compose(g, homs[k]))] = true;
  }
  return orbits;
}

using cat::OrderedMatchingMorphism;

/// Some order-preserving ψ with ψ ∘ φ = φ', found by brute force.
inline std::optional<OrderedMatchingMorphism> ordered_matching_divides(const OrderedMatchingMorphism& phi,
                                                                       const OrderedMatchingMorphism& target) {
  require(phi.src() == target.src() && phi.block_size() == target.block_size(),
          "ordered matching: shape mismatch");
  for (const auto& psi : cat::enumerate_matching_hom<cat::OrderPreserving>(phi.block_size(), phi.tgt(), target.tgt()))
    if (cat::compose(psi, phi) == target) return psi;
  return std::nullopt;
}

struct AntichainReport {
  std::vector<OrderedMatchingMorphism> antichain;
  std::size_t candidates = 0;
};

/// Greedy scan of the ordered matching morphisms [n] → [m] for m in
/// [min_tgt, max_tgt] (canonical order within each m): a candidate is kept
/// when it is incomparable with everything kept so far. A pairwise-
/// incomparability probe; it says nothing about infinite antichains.
inline AntichainReport antichain_search(int block_size, int n, int min_tgt, int max_tgt) {
  AntichainReport r;
  for (int m = min_tgt; m <= max_tgt; ++m)
    for (const auto& cand : cat::enumerate_matching_hom<cat::OrderPreserving>(block_size, n, m)) {
      ++r.candidates;
      bool comparable = false;
      for (const auto& kept : r.antichain) {
        if (ordered_matching_divides(kept, cand) || ordered_matching_divides(cand, kept)) {
          comparable = true;
          break;
        }
      }
      if (!comparable) r.antichain.push_back(cand);
    }
  return r;
}

}  // namespace repstab::tca
