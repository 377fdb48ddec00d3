#pragma once

// Brute-force reference implementations used only by the tests. They are
// written from the definitions and share no code paths with the library
// beyond the value types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// ---------------------------------------------------------------- counting

inline mpz_class factorial(int n) {
  mpz_class r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline mpz_class falling(int m, int n) {
  mpz_class r = 1;
  for (int k = 0; k < n; ++k) r *= m - k;
  return r;
}

inline mpz_class choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline mpz_class power(long base, int e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

inline mpz_class double_factorial_odd(int k) {  // (k)!! for odd k, 1 for k <= 0
  mpz_class r = 1;
  for (int j = k; j > 1; j -= 2) r *= j;
  return r;
}

inline mpz_class fi_count(int d, int n, int m) { return n > m ? mpz_class(0) : mpz_class(falling(m, n) * power(d, m - n)); }
inline mpz_class oi_count(int d, int n, int m) { return n > m ? mpz_class(0) : mpz_class(choose(m, n) * power(d, m - n)); }

inline mpz_class veronese_count(int r, int d, int m, int e, int n) {
  if (d > e || m > n) return 0;
  mpz_class ne = choose(e + r - 1, r - 1), ned = choose(e - d + r - 1, r - 1);
  mpz_class out = choose(n, m);
  for (int k = 0; k < n - m; ++k) out *= ne;
  for (int k = 0; k < m; ++k) out *= ned;
  return out;
}

inline mpz_class matching2_count(int n, int m) {
  if (n > m || (m - n) % 2 != 0) return 0;
  return falling(m, n) * double_factorial_odd(m - n - 1);
}

// ------------------------------------------------------------------- words

using Letters = std::vector<std::uint8_t>;  // 0 = star

/// Every word of length m over {0..d} with exactly `stars` zeros, in
/// lexicographic order.
inline std::vector<Letters> words_with_stars(int d, int m, int stars) {
  std::vector<Letters> out;
  Letters w(m, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == m) {
      if (left == 0) out.push_back(w);
      return;
    }
    for (int c = 0; c <= d; ++c) {
      if (c == 0 && left == 0) continue;
      if (c != 0 && m - pos - 1 < left) continue;
      w[pos] = static_cast<std::uint8_t>(c);
      self(self, pos + 1, left - (c == 0 ? 1 : 0));
    }
  };
  rec(rec, 0, stars);
  return out;
}

/// Subsequence test by longest-common-subsequence dynamic programming.
inline bool subsequence_dp(const Letters& small, const Letters& big) {
  std::vector<std::vector<int>> L(small.size() + 1, std::vector<int>(big.size() + 1, 0));
  for (std::size_t i = 1; i <= small.size(); ++i)
    for (std::size_t j = 1; j <= big.size(); ++j)
      L[i][j] = small[i - 1] == big[j - 1] ? L[i - 1][j - 1] + 1 : std::max(L[i - 1][j], L[i][j - 1]);
  return L[small.size()][big.size()] == static_cast<int>(small.size());
}

inline Letters letters_of(const std::string& s) {
  Letters w;
  for (char c : s) w.push_back(c == '*' ? 0 : static_cast<std::uint8_t>(c - '0'));
  return w;
}

// ----------------------------------------------------- colored injections

/// A colored injection [n] → [m] as a labelling of target points: label
/// -t means "image of source point t", label c >= 1 is a color.
using Labelling = std::vector<int>;

/// Composite labelling read directly off the definition: a target point of
/// the outer map either carries an outer color, or is the image of a middle
/// point, which in turn is either colored by the inner map or is the image
/// of a source point.
inline Labelling compose_labels(const Labelling& outer, const Labelling& inner) {
  Labelling out(outer.size());
  for (std::size_t u = 0; u < outer.size(); ++u) out[u] = outer[u] > 0 ? outer[u] : inner[-outer[u] - 1];
  return out;
}

// ------------------------------------------------------------ exact ranks

inline std::size_t rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline mpq_class random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Points on the r-fold secant of the degree-d Veronese of P^{rv-1}: the
/// coordinate z_c equals Σ_k λ_k x_k^c over `order` random points x_k.
/// Coordinates are indexed by `monomials` (exponent vectors of degree d).
inline std::vector<mpq_class> secant_point(const std::vector<std::vector<int>>& monomials, int rv, int order,
                                           std::mt19937_64& rng) {
  std::vector<mpq_class> z(monomials.size(), 0);
  for (int k = 0; k < order; ++k) {
    mpq_class lambda = random_rational(rng);
    std::vector<mpq_class> x(rv);
    for (auto& xi : x) xi = random_rational(rng);
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      mpq_class v = lambda;
      for (int i = 0; i < rv; ++i)
        for (int e = 0; e < monomials[c][i]; ++e) v *= x[i];
      z[c] += v;
    }
  }
  return z;
}

/// Evaluates a monomial with exponent vector `e` at point z.
inline mpq_class eval_monomial(const std::vector<int>& e, const std::vector<mpq_class>& z) {
  mpq_class v = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int k = 0; k < e[i]; ++k) v *= z[i];
  return v;
}

/// All exponent vectors in `nvars` variables of the given total degree.
inline std::vector<std::vector<int>> exponents(int nvars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  if (nvars > 0) rec(rec, 0, degree);
  return out;
}

/// Dimension of the degree-e piece of the vanishing ideal of the secant
/// variety, as the kernel of evaluation at (#monomials + extra) random secant
/// points. The kernel always contains the true piece; random points make
/// them equal with overwhelming probability.
inline std::size_t vanishing_dimension(int rv, int d, int order, int e, std::size_t extra, std::uint64_t seed) {
  auto vars = exponents(rv, d);
  auto mons = exponents(static_cast<int>(vars.size()), e);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<mpq_class>> m;
  for (std::size_t p = 0; p < mons.size() + extra; ++p) {
    auto z = secant_point(vars, rv, order, rng);
    std::vector<mpq_class> row;
    for (const auto& mon : mons) row.push_back(eval_monomial(mon, z));
    m.push_back(std::move(row));
  }
  return mons.size() - rank(std::move(m));
}

}  // namespace oracle
