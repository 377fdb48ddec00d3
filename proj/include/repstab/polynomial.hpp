#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "repstab/errors.hpp"
#include "repstab/exact.hpp"

namespace repstab {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

/// Graded lex: higher total degree first, ties broken lexicographically
/// with x_1 > x_2 > ... . Used as a "greater" comparator so that ordered
/// containers list the leading monomial first.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// All exponent vectors of total degree `degree` in `nvars` variables, in
/// graded-lex order (leading monomial first).
inline std::vector<Exponent> monomials_of_degree(int nvars, int degree) {
  std::vector<Exponent> out;
  Exponent e(nvars, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

class SparsePoly {
 public:
  using Terms = std::map<Exponent, Rational, GradedLexGreater>;

  explicit SparsePoly(int nvars = 0) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, const Rational& c) {
    SparsePoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static SparsePoly monomial(const Exponent& e, const Rational& c = 1) {
    SparsePoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }
  static SparsePoly variable(int nvars, int index) {
    Exponent e(nvars, 0);
    e[index] = 1;
    return monomial(e);
  }

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

  [[nodiscard]] bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
  }

  void add_term(const Exponent& e, const Rational& c) {
    require(static_cast<int>(e.size()) == nvars_, "polynomial: exponent length mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    require(o.nvars_ == nvars_, "polynomial: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    require(o.nvars_ == nvars_, "polynomial: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& s) { return a *= s; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    require(a.nvars_ == b.nvars_, "polynomial: variable count mismatch");
    SparsePoly out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  [[nodiscard]] Rational evaluate(std::span<const Rational> point) const {
    require(static_cast<int>(point.size()) == nvars_, "polynomial: point has wrong dimension");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      sum += t;
    }
    return sum;
  }

  /// Human-readable form in graded-lex order, e.g. "z1*z3 - z2^2".
  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational mag = abs(c);
      if (first) {
        if (sgn(c) < 0) os << "-";
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      first = false;
      bool constant = total_degree(e) == 0;
      if (mag != 1 || constant) {
        os << mag.get_str();
        if (!constant) os << "*";
      }
      bool needs_star = false;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (needs_star) os << "*";
        os << names.at(i);
        if (e[i] > 1) os << "^" << e[i];
        needs_star = true;
      }
    }
    return os.str();
  }

 private:
  int nvars_;
  Terms terms_;
};

inline std::vector<std::string> default_names(const std::string& stem, int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

inline Rational binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

/// The coproduct Δ : Sym(V) → Sym(V) ⊗ Sym(V), v ↦ v ⊗ 1 + 1 ⊗ v, extended
/// multiplicatively. The tensor square is modeled as a polynomial ring in
/// 2n variables: x_i ⊗ 1 is variable i, 1 ⊗ x_i is variable n + i.
inline SparsePoly delta(const SparsePoly& p) {
  const int n = p.nvars();
  SparsePoly out(2 * n);
  for (const auto& [e, c] : p.terms()) {
    // Expand prod_i (x_i' + x_i'')^{e_i} binomially, one variable at a time.
    std::map<Exponent, Rational> acc{{Exponent(2 * n, 0), c}};
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      std::map<Exponent, Rational> next;
      for (const auto& [ex, cx] : acc)
        for (int j = 0; j <= e[i]; ++j) {
          Exponent y = ex;
          y[i] = j;
          y[n + i] = e[i] - j;
          next[y] += cx * binomial(e[i], j);
        }
      acc = std::move(next);
    }
    for (const auto& [ex, cx] : acc) out.add_term(ex, cx);
  }
  return out;
}

/// Exchanges the two tensor factors of a polynomial in 2n variables.
inline SparsePoly swap_tensor_factors(const SparsePoly& p) {
  require(p.nvars() % 2 == 0, "swap_tensor_factors: odd variable count");
  const int n = p.nvars() / 2;
  SparsePoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponent s(e.size());
    for (int i = 0; i < n; ++i) {
      s[i] = e[n + i];
      s[n + i] = e[i];
    }
    out.add_term(s, c);
  }
  return out;
}

}  // namespace repstab
