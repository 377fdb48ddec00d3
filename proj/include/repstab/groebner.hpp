#pragma once

// Monomial submodules of the OI_d principal projective P'_n, division of
// module elements, and degree-truncated initial modules.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "repstab/cat/colored_injection.hpp"
#include "repstab/errors.hpp"
#include "repstab/exact.hpp"
#include "repstab/words.hpp"

namespace repstab {

/// Degree-then-lex on words with * < 1 < ... < d. Total on every hom-set and
/// a well-order on the disjoint union over all targets.
struct TermOrder {
  [[nodiscard]] bool less(const Word& a, const Word& b) const { return a < b; }
  [[nodiscard]] bool less(const OIdMorphism& a, const OIdMorphism& b) const {
    return encode_word(a) < encode_word(b);
  }
};

class MonomialSubmodule {
 public:
  MonomialSubmodule(int n, int colors, std::vector<OIdMorphism> generators)
      : n_(n), colors_(colors), generators_(std::move(generators)) {
    require(n >= 0 && colors >= 1, "monomial submodule: invalid shape");
    for (const auto& g : generators_)
      require(g.src() == n && g.colors() == colors, "monomial submodule: generator shape mismatch");
  }

  static MonomialSubmodule from_words(int n, int colors, const std::vector<Word>& words) {
    std::vector<OIdMorphism> gens;
    for (const auto& w : words) {
      require(w.colors() <= colors, "monomial submodule: word uses too many colors");
      gens.push_back(decode_word(Word(colors, w.letters()), n));
    }
    return MonomialSubmodule(n, colors, std::move(gens));
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int colors() const { return colors_; }
  [[nodiscard]] const std::vector<OIdMorphism>& generators() const { return generators_; }
  [[nodiscard]] std::vector<Word> generator_words() const {
    std::vector<Word> w;
    for (const auto& g : generators_) w.push_back(encode_word(g));
    return w;
  }

 private:
  int n_;
  int colors_;
  std::vector<OIdMorphism> generators_;
};

struct MembershipCertificate {
  std::size_t generator = 0;  // index into the submodule's generator list
  OIdMorphism quotient;       // ψ with ψ ∘ generator = φ
};

/// φ lies in ⟨G⟩ iff some generator divides it; the first such generator
/// (in list order) and its leftmost quotient certify membership.
inline std::optional<MembershipCertificate> member(const MonomialSubmodule& sub, const OIdMorphism& phi) {
  require(phi.src() == sub.n() && phi.colors() == sub.colors(), "member: shape mismatch");
  for (std::size_t i = 0; i < sub.generators().size(); ++i)
    if (auto psi = divides(sub.generators()[i], phi)) return MembershipCertificate{i, *psi};
  return std::nullopt;
}

inline MonomialSubmodule minimal_generators(const MonomialSubmodule& sub) {
  return MonomialSubmodule::from_words(sub.n(), sub.colors(), minimal_words(sub.generator_words()));
}

/// A finite linear combination of basis vectors e_φ of P'_n, keyed by the
/// word of φ (a bijection for fixed n).
class ModuleElement {
 public:
  using Terms = std::map<Word, Rational>;

  ModuleElement(int n, int colors) : n_(n), colors_(colors) {}

  static ModuleElement basis(const OIdMorphism& phi, const Rational& c = 1) {
    ModuleElement v(phi.src(), phi.colors());
    v.add(encode_word(phi), c);
    return v;
  }

  /// Parses "1*11* - 1/2**11": signed terms "<rational>*<word>" where the
  /// coefficient runs up to the first '*'.
  static ModuleElement parse(std::string_view text, int n, int colors) {
    ModuleElement v(n, colors);
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty() || s == "0") return v;
    std::size_t pos = 0;
    while (pos < s.size()) {
      bool negative = false;
      if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
      } else if (pos != 0) {
        throw parse_error("module element: expected '+' or '-'");
      }
      std::size_t end = s.find_first_of("+-", pos);
      std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      pos = end == std::string::npos ? s.size() : end;
      std::size_t sep = term.find('*');
      if (sep == std::string::npos || sep == 0)
        throw parse_error("module element: term '" + term + "' needs the form <rational>*<word>");
      Rational c = parse_rational(term.substr(0, sep));
      Word w = Word::parse(term.substr(sep + 1), colors);
      if (w.stars() != n) throw parse_error("module element: word '" + w.str() + "' has the wrong number of stars");
      v.add(w, negative ? Rational(-c) : c);
    }
    return v;
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int colors() const { return colors_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Largest word under the term order.
  [[nodiscard]] const Word& lead_word() const {
    require(!terms_.empty(), "module element: zero has no lead term");
    return terms_.rbegin()->first;
  }
  [[nodiscard]] OIdMorphism lead_term() const { return decode_word(lead_word(), n_); }
  [[nodiscard]] const Rational& lead_coefficient() const {
    require(!terms_.empty(), "module element: zero has no lead term");
    return terms_.rbegin()->second;
  }

  /// Target size shared by all terms, or nullopt if the element is zero or
  /// mixes degrees.
  [[nodiscard]] std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::size_t m = terms_.begin()->first.size();
    for (const auto& [w, c] : terms_)
      if (w.size() != m) return std::nullopt;
    return static_cast<int>(m);
  }

  void add(const Word& w, const Rational& c) {
    require(w.colors() == colors_ && w.stars() == n_, "module element: term shape mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  ModuleElement& operator+=(const ModuleElement& o) {
    require(o.n_ == n_ && o.colors_ == colors_, "module element: shape mismatch");
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  ModuleElement& operator-=(const ModuleElement& o) {
    require(o.n_ == n_ && o.colors_ == colors_, "module element: shape mismatch");
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  ModuleElement& operator*=(const Rational& s) {
    if (sgn(s) == 0) terms_.clear();
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(ModuleElement a, const Rational& s) { return a *= s; }
  friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
    return a.n_ == b.n_ && a.colors_ == b.colors_ && a.terms_ == b.terms_;
  }

  /// Leading term first, e.g. "1*11* - 1**11".
  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Rational& c = it->second;
      if (first) os << (sgn(c) < 0 ? "-" : "");
      else os << (sgn(c) < 0 ? " - " : " + ");
      first = false;
      os << Rational(abs(c)).get_str() << "*" << it->first.str();
    }
    return os.str();
  }

 private:
  int n_;
  int colors_;
  Terms terms_;
};

/// P'_n(ψ): post-composes every term with ψ. All terms must have target
/// ψ.src().
inline ModuleElement apply(const OIdMorphism& psi, const ModuleElement& v) {
  ModuleElement out(v.n(), v.colors());
  for (const auto& [w, c] : v.terms()) {
    require(static_cast<int>(w.size()) == psi.src(), "apply: term target does not match the morphism source");
    out.add(encode_word(cat::compose(psi, decode_word(w, v.n()))), c);
  }
  return out;
}

struct DivisionStep {
  std::size_t generator = 0;
  OIdMorphism quotient;  // ψ
  Rational coefficient;  // v picks up coefficient · ψ·g
};

struct DivisionResult {
  ModuleElement remainder;
  std::vector<DivisionStep> steps;
};

namespace detail {
inline void check_generators(const std::vector<ModuleElement>& gens, int n, int colors) {
  for (const auto& g : gens) {
    if (g.is_zero()) throw domain_error("zero generator supplied");
    require(g.n() == n && g.colors() == colors, "generator shape mismatch");
    require(g.homogeneous_degree().has_value(), "generators must be homogeneous");
  }
}
}  // namespace detail

/// Division with respect to the generators' lead terms. The running lead
/// term is cancelled with the first generator (in list order) whose lead
/// term divides it, using the leftmost quotient ψ; otherwise it moves to the
/// remainder. v = Σ coefficient·ψ·g + remainder.
inline DivisionResult reduce(const ModuleElement& v, const std::vector<ModuleElement>& gens,
                             const TermOrder& = {}) {
  detail::check_generators(gens, v.n(), v.colors());
  DivisionResult result{ModuleElement(v.n(), v.colors()), {}};
  ModuleElement running = v;
  while (!running.is_zero()) {
    const Word lead = running.lead_word();
    const Rational c = running.lead_coefficient();
    const OIdMorphism phi = decode_word(lead, v.n());
    bool divided = false;
    for (std::size_t i = 0; i < gens.size() && !divided; ++i) {
      auto psi = divides(gens[i].lead_term(), phi);
      if (!psi) continue;
      Rational q = c / gens[i].lead_coefficient();
      running -= apply(*psi, gens[i]) * q;
      result.steps.push_back({i, *psi, q});
      divided = true;
    }
    if (!divided) {
      result.remainder.add(lead, c);
      running.add(lead, -c);
    }
  }
  return result;
}

/// All words of length m with n stars over d colors, largest first.
inline std::vector<Word> basis_words(int n, int colors, int m) {
  std::vector<Word> out;
  for (const auto& phi : cat::enumerate_hom<cat::OrderPreserving>(colors, n, m)) out.push_back(encode_word(phi));
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return b < a; });
  return out;
}

struct DegreeSpan {
  std::vector<Word> columns;  // basis of P'_n([m]), largest word first
  Echelon span;               // row-reduced span of all ψ·g landing in degree m
};

/// The degree-m piece of the submodule generated by `gens`.
inline DegreeSpan submodule_span(const std::vector<ModuleElement>& gens, int n, int colors, int m) {
  detail::check_generators(gens, n, colors);
  DegreeSpan out;
  out.columns = basis_words(n, colors, m);
  std::map<Word, std::size_t> index;
  for (std::size_t k = 0; k < out.columns.size(); ++k) index.emplace(out.columns[k], k);
  Matrix rows;
  for (const auto& g : gens) {
    const int mg = *g.homogeneous_degree();
    for (const auto& psi : cat::enumerate_hom<cat::OrderPreserving>(colors, mg, m)) {
      Row r(out.columns.size());
      const ModuleElement image = apply(psi, g);
      for (const auto& [w, c] : image.terms()) r[index.at(w)] = c;
      rows.push_back(std::move(r));
    }
  }
  out.span = row_reduce(std::move(rows), out.columns.size());
  return out;
}

/// Lead terms of the submodule generated by `gens`, degree by degree up to
/// `max_degree` (index m of the result holds the degree-m piece).
inline std::vector<std::set<Word>> initial_module_truncated(const std::vector<ModuleElement>& gens, int n,
                                                            int colors, int max_degree, const TermOrder& = {}) {
  require(max_degree >= n, "initial module: need D >= n");
  std::vector<std::set<Word>> out(max_degree + 1);
  for (int m = n; m <= max_degree; ++m) {
    DegreeSpan s = submodule_span(gens, n, colors, m);
    for (auto p : s.span.pivots) out[m].insert(s.columns[p]);
  }
  return out;
}

struct ChainReport {
  std::size_t processed = 0;
  std::optional<std::size_t> stable_from;  // last index at which the data changed
  std::vector<Word> minimal_lead_terms;
};

/// Feeds a stream of elements (next() returns nullopt when exhausted) into a
/// growing submodule. After each element the minimal generators of the
/// truncated initial module are recomputed; the report names the index of
/// the last change, provided at least one later element left it unchanged.
template <class Next>
ChainReport chain_probe(Next&& next, int n, int colors, int max_degree, std::size_t budget,
                        const TermOrder& order = {}) {
  ChainReport report;
  std::vector<ModuleElement> gens;
  std::size_t last_change = 0;
  std::vector<Word> current;
  while (report.processed < budget) {
    std::optional<ModuleElement> e = next();
    if (!e) break;
    ++report.processed;
    if (!e->is_zero()) gens.push_back(std::move(*e));
    std::vector<Word> lead;
    if (!gens.empty())
      for (const auto& piece : initial_module_truncated(gens, n, colors, max_degree, order))
        lead.insert(lead.end(), piece.begin(), piece.end());
    std::vector<Word> mins = minimal_words(std::move(lead));
    if (report.processed == 1 || mins != current) last_change = report.processed;
    current = std::move(mins);
  }
  if (last_change > 0 && last_change < report.processed) report.stable_from = last_change;
  report.minimal_lead_terms = std::move(current);
  return report;
}

}  // namespace repstab
