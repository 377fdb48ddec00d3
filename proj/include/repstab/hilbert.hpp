#pragma once

// Generating functions of automata, eventual polynomials, and Hilbert
// functions of monomial quotients of P'_n.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "repstab/automaton.hpp"
#include "repstab/errors.hpp"
#include "repstab/exact.hpp"
#include "repstab/groebner.hpp"

namespace repstab {

/// Univariate polynomial in t, coefficients lowest degree first, no
/// trailing zeros (the zero polynomial is empty).
template <class Scalar>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(const Scalar& s) { return UPoly(std::vector<Scalar>{s}); }
  static UPoly t() { return UPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

  [[nodiscard]] const std::vector<Scalar>& coefficients() const { return c_; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] Scalar operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] + b[k];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] - b[k];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// "1 - 2*t + t^2".
  [[nodiscard]] std::string str(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (sgn(c_[k]) == 0) continue;
      Scalar mag = abs(c_[k]);
      if (first) os << (sgn(c_[k]) < 0 ? "-" : "");
      else os << (sgn(c_[k]) < 0 ? " - " : " + ");
      first = false;
      if (k == 0 || mag != 1) {
        os << mag.get_str();
        if (k > 0) os << "*";
      }
      if (k >= 1) os << var;
      if (k >= 2) os << "^" << k;
    }
    return os.str();
  }

  [[nodiscard]] std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& x : c_) n += sgn(x) != 0;
    return n;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

using IntPoly = UPoly<Integer>;
using RatPoly = UPoly<Rational>;

namespace detail {

// a / b in Z[t] when b(0) = 1 and b divides a; computed as a power series
// and checked by multiplying back.
inline IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  require(!b.is_zero() && b[0] == 1, "polynomial division: divisor needs constant term 1");
  if (a.is_zero()) return {};
  const int qdeg = a.degree() - b.degree();
  require(qdeg >= 0, "polynomial division: not exact");
  std::vector<Integer> q(qdeg + 1);
  for (int k = 0; k <= qdeg; ++k) {
    Integer s = a[k];
    for (int j = 1; j <= k && j <= b.degree(); ++j) s -= b[j] * q[k - j];
    q[k] = s;
  }
  IntPoly quot(std::move(q));
  require(quot * b == a, "polynomial division: not exact");
  return quot;
}

inline RatPoly to_rat(const IntPoly& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  require(!b.is_zero(), "polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  std::vector<Rational> q(std::max(0, a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[k] / b[db];
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b[j];
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

/// num/den in lowest terms with den(0) = 1, so the power-series
/// coefficients are num minus a linear recurrence in den.
class RationalGF {
 public:
  RationalGF(IntPoly num, IntPoly den) {
    require(!den.is_zero() && sgn(den[0]) != 0, "generating function: denominator needs nonzero constant term");
    RatPoly n = detail::to_rat(num), d = detail::to_rat(den);
    RatPoly g = detail::gcd(n.is_zero() ? d : n, d);
    if (n.is_zero()) {
      num_ = {};
      den_ = IntPoly::constant(1);
      return;
    }
    n = detail::divmod(n, g).first;
    d = detail::divmod(d, g).first;
    Rational s = 1 / d[0];
    num_ = to_int(n, s);
    den_ = to_int(d, s);
  }

  [[nodiscard]] const IntPoly& numerator() const { return num_; }
  [[nodiscard]] const IntPoly& denominator() const { return den_; }

  [[nodiscard]] std::vector<Integer> series(std::size_t terms) const {
    std::vector<Integer> c(terms);
    for (std::size_t k = 0; k < terms; ++k) {
      Integer s = num_[k];
      for (std::size_t j = 1; j <= k && static_cast<int>(j) <= den_.degree(); ++j) s -= den_[j] * c[k - j];
      c[k] = s;
    }
    return c;
  }

  /// "t/(1 - t)"; the denominator is omitted when it is 1.
  [[nodiscard]] std::string str() const {
    std::string n = num_.str(), d = den_.str();
    if (num_.term_count() > 1) n = "(" + n + ")";
    if (den_ == IntPoly::constant(1)) return num_.str();
    if (den_.term_count() > 1) d = "(" + d + ")";
    return n + "/" + d;
  }

  friend bool operator==(const RationalGF& a, const RationalGF& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  static IntPoly to_int(const RatPoly& p, const Rational& scale) {
    std::vector<Integer> c;
    for (const auto& x : p.coefficients()) {
      Rational y = x * scale;
      // den(0) = 1 after scaling; Gauss's lemma keeps everything integral.
      require(y.get_den() == 1, "generating function: non-integral coefficient after normalization");
      c.push_back(y.get_num());
    }
    return IntPoly(std::move(c));
  }

  IntPoly num_;
  IntPoly den_;
};

/// Σ_m (accepted words of length m) t^m. With a_q the series for state q,
/// (I - tM) a = χ_accepting where M counts letters between states; the
/// start state is ordered last so fraction-free (Bareiss) elimination over
/// Z[t] leaves det(I - tM) · a_start = det(system with that column replaced)
/// in the final row. Every leading principal minor of I - tM has constant
/// term 1, so no pivoting is needed and each Bareiss division is a unit-
/// constant power-series division.
inline RationalGF generating_function(const Dfa& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> order;  // position -> state, start last
  for (std::size_t q = 0; q < n; ++q)
    if (static_cast<int>(q) != a.start) order.push_back(q);
  order.push_back(a.start);
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;

  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n + 1));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t q = order[k];
    std::vector<Integer> row_counts(n, 0);
    for (int c = 0; c < a.letters; ++c) row_counts[pos[a.delta[q][c]]] += 1;
    for (std::size_t j = 0; j < n; ++j) {
      IntPoly entry = IntPoly(std::vector<Integer>{Integer(j == k ? 1 : 0), Integer(-row_counts[j])});
      m[k][j] = entry;
    }
    m[k][n] = IntPoly::constant(a.accepting[q] ? 1 : 0);
  }
  IntPoly prev = IntPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j)
        m[i][j] = detail::divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return RationalGF(m[n - 1][n], m[n - 1][n - 1]);
}

/// p(m) for m >= onset; coefficients in m, lowest degree first.
struct EventualPolynomial {
  std::size_t onset = 0;
  std::vector<Rational> coefficients;

  [[nodiscard]] int degree() const { return static_cast<int>(coefficients.size()) - 1; }

  [[nodiscard]] Rational operator()(const Rational& m) const {
    Rational v = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * m + *it;
    return v;
  }

  [[nodiscard]] std::string str(const std::string& var = "m") const {
    return RatPoly(coefficients).str(var);
  }
};

/// Least onset N0 (then least degree k <= window / 2) such that the tail of
/// `counts` from N0 has at least `window` values and vanishing (k+1)-th
/// differences. The polynomial comes from Newton's forward-difference
/// formula at N0.
inline std::optional<EventualPolynomial> try_fit_eventual_polynomial(const std::vector<Integer>& counts,
                                                                      std::size_t window) {
  require(window >= 2, "fit: window must be at least 2");
  const std::size_t max_deg = window / 2;
  if (counts.size() < window) return std::nullopt;
  for (std::size_t onset = 0; onset + window <= counts.size(); ++onset) {
    std::vector<std::vector<Integer>> diffs{std::vector<Integer>(counts.begin() + onset, counts.end())};
    for (std::size_t k = 0; k <= max_deg; ++k) {
      const auto& last = diffs.back();
      std::vector<Integer> next;
      for (std::size_t i = 0; i + 1 < last.size(); ++i) next.push_back(last[i + 1] - last[i]);
      diffs.push_back(std::move(next));
      const auto& top = diffs.back();
      bool vanishes = !top.empty();
      for (const auto& x : top) vanishes = vanishes && sgn(x) == 0;
      if (!vanishes) continue;
      // p(m) = Σ_j Δ^j(N0) · C(m - N0, j)
      RatPoly p;
      RatPoly basis = RatPoly::constant(1);
      for (std::size_t j = 0; j <= k; ++j) {
        p = p + basis * RatPoly::constant(Rational(diffs[j][0]));
        Rational shift(-static_cast<long>(onset + j), static_cast<long>(j + 1));
        shift.canonicalize();
        RatPoly factor(std::vector<Rational>{shift, Rational(1, static_cast<long>(j + 1))});
        basis = basis * factor;
      }
      EventualPolynomial out;
      out.onset = onset;
      out.coefficients = p.coefficients();
      if (out.coefficients.empty()) out.coefficients.emplace_back(0);
      return out;
    }
  }
  return std::nullopt;
}

inline EventualPolynomial fit_eventual_polynomial(const std::vector<Integer>& counts, std::size_t window) {
  auto p = try_fit_eventual_polynomial(counts, window);
  if (!p) throw domain_error("not eventually polynomial within budget");
  return *p;
}

struct HilbertReport {
  std::vector<Integer> counts;  // dim of (P'_n / ⟨G⟩)([m]) for m = 0..D
  RationalGF gf;
  std::optional<EventualPolynomial> polynomial;
  std::size_t automaton_states = 0;
  std::size_t product_states = 0;
};

/// Counts, generating function and (when one fits) the eventual polynomial
/// of the quotient P'_n / ⟨G⟩. `window` 0 picks (D + 1) / 2.
inline HilbertReport hilbert_function(const MonomialSubmodule& sub, int max_degree, std::size_t window = 0) {
  require(max_degree >= 0, "hilbert: need D >= 0");
  auto built = standard_word_automaton(sub);
  HilbertReport r{count_by_length(built.dfa, max_degree), generating_function(built.dfa), std::nullopt,
                  built.dfa.size(), built.product_states};
  if (window == 0) window = std::max<std::size_t>(2, static_cast<std::size_t>(max_degree + 1) / 2);
  r.polynomial = try_fit_eventual_polynomial(r.counts, window);
  return r;
}

/// dim P_n([m]) over FI_d: n! times the OI_d count, one copy of P'_n per
/// permutation.
inline std::vector<Integer> fi_projective_counts(const std::vector<Integer>& oi_counts, int n) {
  Integer fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  std::vector<Integer> out;
  for (const auto& c : oi_counts) out.push_back(c * fact);
  return out;
}

}  // namespace repstab
