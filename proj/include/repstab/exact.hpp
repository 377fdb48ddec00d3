#pragma once

// Exact rational scalars and dense row reduction over Q.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "repstab/errors.hpp"

namespace repstab {

using Rational = mpq_class;
using Integer = mpz_class;

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw parse_error("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw parse_error("malformed rational '" + std::string(text) + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw parse_error("malformed rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Echelon data of a row-reduced matrix: the nonzero rows and, for each,
/// the column of its leading 1.
struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;

  [[nodiscard]] std::size_t rank() const { return rows.size(); }
};

/// Reduced row echelon form. Zero rows are dropped.
inline Echelon row_reduce(Matrix m, std::size_t ncols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    if (m[r][c] != 1) {
      Rational inv = 1 / m[r][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (sgn(m[r][j]) != 0) m[r][j] *= inv;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational factor = m[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (sgn(m[r][j]) != 0) m[i][j] -= factor * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

inline std::size_t rank(Matrix m, std::size_t ncols) { return row_reduce(std::move(m), ncols).rank(); }

/// Basis of {x : A x = 0}, returned in reduced row echelon form.
inline Echelon nullspace(const Matrix& a, std::size_t ncols) {
  Echelon e = row_reduce(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Row v(ncols);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return row_reduce(std::move(basis), ncols);
}

/// Subtracts the pivot rows of a reduced echelon basis from v, leaving v's
/// normal form modulo the row space.
inline Row reduce_modulo(const Echelon& e, Row v) {
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    const Rational f = v[e.pivots[i]];
    if (sgn(f) == 0) continue;
    const Row& row = e.rows[i];
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(row[j]) != 0) v[j] -= f * row[j];
  }
  return v;
}

inline bool is_zero(const Row& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

inline bool in_row_space(const Echelon& e, const Row& v) { return is_zero(reduce_modulo(e, v)); }

}  // namespace repstab
