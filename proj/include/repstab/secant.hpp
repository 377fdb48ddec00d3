#pragma once

// Homogeneous ideals of Sym(V) stored degree by degree up to a truncation D,
// with joins, secant ideals and Veronese ideals computed by exact linear
// algebra. Every piece is exact for degrees <= D; nothing is claimed above.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repstab/errors.hpp"
#include "repstab/exact.hpp"
#include "repstab/polynomial.hpp"

namespace repstab {

/// Degree-e monomials of an n-variable ring with a reverse index.
class MonomialBasis {
 public:
  MonomialBasis(int nvars, int degree) : monomials_(monomials_of_degree(nvars, degree)) {
    for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
  }
  [[nodiscard]] std::size_t size() const { return monomials_.size(); }
  [[nodiscard]] const Exponent& operator[](std::size_t k) const { return monomials_[k]; }
  [[nodiscard]] std::size_t index(const Exponent& e) const { return index_.at(e); }
  [[nodiscard]] const std::vector<Exponent>& monomials() const { return monomials_; }

 private:
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> index_;
};

class GradedIdealBasis {
 public:
  /// `pieces[e]` spans I_e in the graded-lex monomial basis of Sym^e V.
  GradedIdealBasis(std::vector<std::string> names, std::vector<Echelon> pieces)
      : names_(std::move(names)), pieces_(std::move(pieces)) {
    require(!pieces_.empty(), "graded ideal: need at least degree 0");
  }

  static GradedIdealBasis zero(std::vector<std::string> names, int max_degree) {
    return GradedIdealBasis(std::move(names), std::vector<Echelon>(max_degree + 1));
  }

  /// The ideal generated by homogeneous polynomials, truncated at D.
  static GradedIdealBasis generated_by(std::vector<std::string> names, const std::vector<SparsePoly>& gens,
                                       int max_degree) {
    const int n = static_cast<int>(names.size());
    std::vector<Echelon> pieces;
    for (int e = 0; e <= max_degree; ++e) {
      MonomialBasis cols(n, e);
      Matrix rows;
      for (const auto& g : gens) {
        require(g.nvars() == n && g.is_homogeneous(), "graded ideal: generators must be homogeneous");
        if (g.is_zero() || g.degree() > e) continue;
        for (const auto& m : monomials_of_degree(n, e - g.degree())) {
          Row r(cols.size());
          const SparsePoly shifted = g * SparsePoly::monomial(m);
          for (const auto& [ex, c] : shifted.terms()) r[cols.index(ex)] = c;
          rows.push_back(std::move(r));
        }
      }
      pieces.push_back(row_reduce(std::move(rows), cols.size()));
    }
    return GradedIdealBasis(std::move(names), std::move(pieces));
  }

  /// Every element of positive degree.
  static GradedIdealBasis irrelevant(std::vector<std::string> names, int max_degree) {
    std::vector<SparsePoly> vars;
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
      vars.push_back(SparsePoly::variable(static_cast<int>(names.size()), i));
    return generated_by(std::move(names), vars, max_degree);
  }

  [[nodiscard]] int nvars() const { return static_cast<int>(names_.size()); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] int truncation() const { return static_cast<int>(pieces_.size()) - 1; }
  [[nodiscard]] const Echelon& piece(int e) const { return pieces_.at(e); }
  [[nodiscard]] std::size_t dim(int e) const { return pieces_.at(e).rank(); }

  [[nodiscard]] SparsePoly to_poly(int e, const Row& row) const {
    MonomialBasis cols(nvars(), e);
    SparsePoly p(nvars());
    for (std::size_t k = 0; k < row.size(); ++k) p.add_term(cols[k], row[k]);
    return p;
  }

  [[nodiscard]] std::vector<SparsePoly> basis(int e) const {
    std::vector<SparsePoly> out;
    for (const auto& r : piece(e).rows) out.push_back(to_poly(e, r));
    return out;
  }

  [[nodiscard]] bool contains(const SparsePoly& p) const {
    require(p.is_homogeneous() && p.nvars() == nvars(), "graded ideal: membership needs a homogeneous polynomial");
    if (p.is_zero()) return true;
    require(p.degree() <= truncation(), "graded ideal: degree above truncation");
    MonomialBasis cols(nvars(), p.degree());
    Row r(cols.size());
    for (const auto& [ex, c] : p.terms()) r[cols.index(ex)] = c;
    return in_row_space(piece(p.degree()), r);
  }

  /// Sym^1 V · I_{e-1} ⊆ I_e for all e <= D.
  [[nodiscard]] bool is_closed_under_multiplication() const {
    for (int e = 1; e <= truncation(); ++e)
      for (const auto& b : basis(e - 1))
        for (int i = 0; i < nvars(); ++i)
          if (!contains(b * SparsePoly::variable(nvars(), i))) return false;
    return true;
  }

  /// Same row space in every degree.
  friend bool operator==(const GradedIdealBasis& a, const GradedIdealBasis& b) {
    if (a.nvars() != b.nvars() || a.truncation() != b.truncation()) return false;
    for (int e = 0; e <= a.truncation(); ++e)
      if (a.piece(e).rows != b.piece(e).rows || a.piece(e).pivots != b.piece(e).pivots) return false;
    return true;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Echelon> pieces_;
};

/// Variable names z<parts> for the monomial basis of Sym^d k^r.
inline std::vector<std::string> veronese_names(int r, int d) {
  std::vector<std::string> names;
  for (const auto& m : monomials_of_degree(r, d)) {
    bool wide = false;
    for (int p : m) wide = wide || p > 9;
    std::string s = "z";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (wide && i > 0) s += "_";
      s += std::to_string(m[i]);
    }
    names.push_back(s);
  }
  return names;
}

/// I^{(d)} for B = k[x_1..x_r]: the kernel of Sym(Sym^d k^r) → B^{(d)},
/// z_c ↦ x^c, degree by degree.
inline GradedIdealBasis veronese_ideal_truncated(int r, int d, int max_degree) {
  require(r >= 1 && d >= 1 && max_degree >= 1, "veronese ideal: need r, d, D >= 1");
  const auto vars = monomials_of_degree(r, d);
  const int n = static_cast<int>(vars.size());
  std::vector<Echelon> pieces;
  for (int e = 0; e <= max_degree; ++e) {
    MonomialBasis src(n, e), dst(r, e * d);
    Matrix eval(dst.size(), Row(src.size()));
    for (std::size_t k = 0; k < src.size(); ++k) {
      Exponent image(r, 0);
      for (int v = 0; v < n; ++v)
        for (int i = 0; i < r; ++i) image[i] += src[k][v] * vars[v][i];
      eval[dst.index(image)][k] = 1;
    }
    pieces.push_back(nullspace(eval, src.size()));
  }
  return GradedIdealBasis(veronese_names(r, d), std::move(pieces));
}

namespace detail {

// Coordinates of the image of each degree-a monomial in Sym^a V / I_a. The
// quotient basis is the set of non-pivot monomials of the reduced basis.
struct QuotientProjection {
  std::size_t dim = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> image;  // per monomial, sparse
};

inline QuotientProjection quotient_projection(const Echelon& piece, std::size_t ncols) {
  QuotientProjection q;
  std::vector<long> coord(ncols, -1);
  std::vector<long> pivot_row(ncols, -1);
  for (std::size_t i = 0; i < piece.pivots.size(); ++i) pivot_row[piece.pivots[i]] = static_cast<long>(i);
  for (std::size_t c = 0; c < ncols; ++c)
    if (pivot_row[c] < 0) coord[c] = static_cast<long>(q.dim++);
  q.image.resize(ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    if (pivot_row[c] < 0) {
      q.image[c].emplace_back(coord[c], 1);
      continue;
    }
    // e_c ≡ e_c - row = -(row off the pivot columns)
    const Row& row = piece.rows[pivot_row[c]];
    for (std::size_t j = 0; j < ncols; ++j)
      if (coord[j] >= 0 && sgn(row[j]) != 0) q.image[c].emplace_back(coord[j], -row[j]);
  }
  return q;
}

}  // namespace detail

/// I ⋆ J: the kernel of Sym(V) → Sym(V)/I ⊗ Sym(V)/J through Δ, computed in
/// each degree e <= D by projecting every bidegree (a, e - a) part of Δ onto
/// the quotient coordinates and taking the exact nullspace.
inline GradedIdealBasis join_truncated(const GradedIdealBasis& I, const GradedIdealBasis& J, int max_degree) {
  require(I.nvars() == J.nvars(), "join: ideals live in different rings");
  if (I.truncation() < max_degree || J.truncation() < max_degree) throw domain_error("join: truncation too small");
  const int n = I.nvars();
  std::vector<Echelon> pieces;
  for (int e = 0; e <= max_degree; ++e) {
    MonomialBasis cols(n, e);
    std::vector<MonomialBasis> bases;
    std::vector<detail::QuotientProjection> qi, qj;
    std::vector<std::size_t> offset;
    std::size_t rows = 0;
    for (int a = 0; a <= e; ++a) {
      bases.emplace_back(n, a);
      qi.push_back(detail::quotient_projection(I.piece(a), bases.back().size()));
    }
    for (int a = 0; a <= e; ++a) {
      qj.push_back(detail::quotient_projection(J.piece(e - a), bases[e - a].size()));
      offset.push_back(rows);
      rows += qi[a].dim * qj[a].dim;
    }
    Matrix m(rows, Row(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const Exponent& alpha = cols[k];
      // Δ(x^α) = Σ_{β <= α} Π_i C(α_i, β_i) x'^β x''^{α-β}
      Exponent beta(n, 0);
      auto rec = [&](auto&& self, int var, Rational coeff) -> void {
        if (var == n) {
          const int a = total_degree(beta);
          Exponent rest(n);
          for (int i = 0; i < n; ++i) rest[i] = alpha[i] - beta[i];
          const auto& left = qi[a].image[bases[a].index(beta)];
          const auto& right = qj[a].image[bases[e - a].index(rest)];
          for (const auto& [li, lc] : left)
            for (const auto& [ri, rc] : right) m[offset[a] + li * qj[a].dim + ri][k] += coeff * lc * rc;
          return;
        }
        for (int b = 0; b <= alpha[var]; ++b) {
          beta[var] = b;
          self(self, var + 1, coeff * binomial(alpha[var], b));
        }
        beta[var] = 0;
      };
      rec(rec, 0, Rational(1));
    }
    pieces.push_back(nullspace(m, cols.size()));
  }
  return GradedIdealBasis(I.names(), std::move(pieces));
}

/// Sec^1 I = I, Sec^r I = Sec^{r-1} I ⋆ I.
inline GradedIdealBasis secant_truncated(const GradedIdealBasis& I, int order, int max_degree) {
  require(order >= 1, "secant: order must be >= 1");
  if (I.truncation() < max_degree) throw domain_error("secant: truncation too small");
  std::vector<Echelon> pieces;
  for (int e = 0; e <= max_degree; ++e) pieces.push_back(I.piece(e));
  GradedIdealBasis sec(I.names(), std::move(pieces));
  for (int k = 2; k <= order; ++k) sec = join_truncated(sec, I, max_degree);
  return sec;
}

struct GeneratorDegreeTable {
  std::vector<std::size_t> new_generators;  // index e: dim I_e - dim(V · I_{e-1})
  std::optional<int> max_generator_degree;  // largest e <= D with a new generator
  int truncation = 0;
};

inline GeneratorDegreeTable generator_degrees(const GradedIdealBasis& I) {
  GeneratorDegreeTable t;
  t.truncation = I.truncation();
  const int n = I.nvars();
  for (int e = 0; e <= I.truncation(); ++e) {
    std::size_t from_below = 0;
    if (e > 0) {
      MonomialBasis cols(n, e);
      Matrix rows;
      for (const auto& b : I.basis(e - 1))
        for (int i = 0; i < n; ++i) {
          Row r(cols.size());
          const SparsePoly shifted = b * SparsePoly::variable(n, i);
          for (const auto& [ex, c] : shifted.terms()) r[cols.index(ex)] = c;
          rows.push_back(std::move(r));
        }
      from_below = rank(std::move(rows), cols.size());
    }
    require(I.dim(e) >= from_below, "generator degrees: ideal is not closed under multiplication");
    t.new_generators.push_back(I.dim(e) - from_below);
    if (I.dim(e) > from_below) t.max_generator_degree = e;
  }
  return t;
}

}  // namespace repstab
