#pragma once

// Words over Σ = {*, 1, ..., d}, the encoding of OI_d morphisms as words,
// and the subsequence order.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "repstab/cat/colored_injection.hpp"
#include "repstab/errors.hpp"

namespace repstab {

using cat::OIdMorphism;

/// Letter 0 is the star; letters 1..d are colors.
class Word {
 public:
  static constexpr std::uint8_t star = 0;

  Word() = default;
  Word(int colors, std::vector<std::uint8_t> letters) : colors_(colors), letters_(std::move(letters)) {
    require(colors >= 1 && colors <= 9, "word: alphabet must have 1..9 colors");
    for (auto c : letters_) require(c <= colors, "word: letter exceeds the color count");
  }

  /// Parses "*12", accepting either '*' or "★" for the star. When `colors` is
  /// 0 the color count is the largest letter present (at least 1).
  static Word parse(std::string_view text, int colors = 0) {
    std::vector<std::uint8_t> letters;
    int max_letter = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == '*') {
        letters.push_back(star);
      } else if (c >= '1' && c <= '9') {
        letters.push_back(static_cast<std::uint8_t>(c - '0'));
        max_letter = std::max(max_letter, c - '0');
      } else if (text.substr(i, 3) == "\xE2\x98\x85") {
        letters.push_back(star);
        i += 2;
      } else {
        throw parse_error("word: unexpected character in '" + std::string(text) + "'");
      }
    }
    if (colors == 0) colors = max_letter;
    if (max_letter > colors) throw parse_error("word: letter exceeds d in '" + std::string(text) + "'");
    return Word(colors, std::move(letters));
  }

  [[nodiscard]] int colors() const { return colors_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] std::uint8_t operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] const std::vector<std::uint8_t>& letters() const { return letters_; }

  [[nodiscard]] int stars() const {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), star));
  }

  [[nodiscard]] std::string str() const {
    std::string s;
    for (auto c : letters_) s.push_back(c == star ? '*' : static_cast<char>('0' + c));
    return s;
  }

  /// Degree-then-lex with * below every color (after comparing d).
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.colors_ <=> b.colors_; c != 0) return c;
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const Word& a, const Word& b) = default;

 private:
  int colors_ = 1;
  std::vector<std::uint8_t> letters_;
};

/// The word of φ : [n] → [m]: letter i is * when i is in the image of f and
/// g(i) otherwise.
inline Word encode_word(const OIdMorphism& phi) {
  std::vector<std::uint8_t> letters(phi.tgt());
  for (int u = 1; u <= phi.tgt(); ++u) letters[u - 1] = static_cast<std::uint8_t>(phi.color(u));
  return Word(phi.colors(), std::move(letters));
}

inline OIdMorphism decode_word(const Word& w, int n) {
  if (w.stars() != n)
    throw domain_error("decode: word '" + w.str() + "' has " + std::to_string(w.stars()) + " stars, expected " +
                       std::to_string(n));
  std::vector<int> f;
  std::map<int, int> g;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int u = static_cast<int>(i) + 1;
    if (w[i] == Word::star) f.push_back(u);
    else g.emplace(u, w[i]);
  }
  return OIdMorphism(w.colors(), n, static_cast<int>(w.size()), std::move(f), g);
}

/// Leftmost embedding of `small` into `big` as 1-based increasing positions,
/// found by a greedy scan.
inline std::optional<std::vector<int>> is_subsequence(const Word& small, const Word& big) {
  std::vector<int> pos;
  pos.reserve(small.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < small.size(); ++i) {
    while (j < big.size() && big[j] != small[i]) ++j;
    if (j == big.size()) return std::nullopt;
    pos.push_back(static_cast<int>(++j));
  }
  return pos;
}

/// The ψ with ψ ∘ φ = φ' read off the leftmost embedding of w(φ) in w(φ'),
/// or nullopt when w(φ) is not a subsequence of w(φ').
inline std::optional<OIdMorphism> divides(const OIdMorphism& phi, const OIdMorphism& target) {
  require(phi.src() == target.src(), "divides: source size mismatch");
  require(phi.colors() == target.colors(), "divides: color count mismatch");
  const Word big = encode_word(target);
  auto emb = is_subsequence(encode_word(phi), big);
  if (!emb) return std::nullopt;
  std::vector<bool> hit(big.size() + 1, false);
  for (int p : *emb) hit[p] = true;
  std::map<int, int> g;
  for (int u = 1; u <= static_cast<int>(big.size()); ++u)
    if (!hit[u]) g.emplace(u, big[u - 1]);
  OIdMorphism psi(phi.colors(), phi.tgt(), target.tgt(), *emb, g);
  require(cat::compose(psi, phi) == target, "divides: reconstructed quotient does not compose back");
  return psi;
}

struct PosetWitness {
  std::size_t low = 0;   // 1-based stream index i
  std::size_t high = 0;  // 1-based stream index j > i
  std::vector<int> embedding;
};

struct HigmanReport {
  std::optional<PosetWitness> witness;  // empty: the scanned prefix is an antichain
  std::size_t scanned = 0;
};

/// Scans a stream of words (next() returns nullopt when exhausted) for the
/// first pair i < j with w_i a subsequence of w_j, ordered by j and then i.
/// Stops after `budget` words.
template <class Next>
HigmanReport higman_witness(Next&& next, std::size_t budget) {
  std::vector<Word> seen;
  HigmanReport report;
  while (seen.size() < budget) {
    std::optional<Word> w = next();
    if (!w) break;
    seen.push_back(std::move(*w));
    const std::size_t j = seen.size();
    for (std::size_t i = 1; i < j; ++i)
      if (auto emb = is_subsequence(seen[i - 1], seen[j - 1])) {
        report.witness = PosetWitness{i, j, std::move(*emb)};
        report.scanned = j;
        return report;
      }
  }
  report.scanned = seen.size();
  return report;
}

inline HigmanReport higman_witness(const std::vector<Word>& words) {
  std::size_t k = 0;
  return higman_witness([&]() -> std::optional<Word> {
    if (k == words.size()) return std::nullopt;
    return words[k++];
  }, words.size());
}

/// The minimal elements of a finite set under the subsequence order, sorted.
inline std::vector<Word> minimal_words(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<Word> out;
  // Sorted by length, so any word below w precedes it.
  for (const auto& w : words) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](const Word& m) {
      return m.colors() == w.colors() && is_subsequence(m, w).has_value();
    });
    if (!dominated) out.push_back(w);
  }
  return out;
}

}  // namespace repstab
