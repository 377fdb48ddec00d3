#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "repstab/automaton.hpp"
#include "repstab/errors.hpp"
#include "repstab/hilbert.hpp"

using namespace repstab;

namespace {

Word W(const char* s, int d = 1) { return Word::parse(s, d); }

std::vector<Integer> brute_counts(const MonomialSubmodule& sub, int max_len) {
  std::vector<Integer> out;
  auto gens = sub.generator_words();
  for (int m = 0; m <= max_len; ++m) {
    long c = 0;
    for (const auto& w : oracle::words_with_stars(sub.colors(), m, sub.n())) {
      bool hit = false;
      for (const auto& g : gens) hit = hit || oracle::subsequence_dp(g.letters(), w);
      c += !hit;
    }
    out.emplace_back(c);
  }
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("subsequence automata") {
  Dfa a = determinize(subsequence_nfa(W("1*2", 2), 3));
  CHECK(a.accepts(W("11*22", 2)));
  CHECK_FALSE(a.accepts(W("2*1", 2)));
  Dfa m = minimize(a);
  CHECK(m.size() == 4);
  for (const auto& l : oracle::words_with_stars(2, 4, 1)) CHECK(m.accepts(Word(2, l)) == a.accepts(Word(2, l)));
}

TEST_CASE("count by length on simple automata") {
  CHECK(count_by_length(all_words_dfa(2), 5) == ints({1, 2, 4, 8, 16, 32}));
  auto star_ones = standard_word_automaton(MonomialSubmodule::from_words(1, 1, {W("1*")}));
  CHECK(count_by_length(star_ones.dfa, 5) == ints({0, 1, 1, 1, 1, 1}));
  auto empty = standard_word_automaton(MonomialSubmodule::from_words(1, 1, {W("*")}));
  CHECK(count_by_length(empty.dfa, 5) == ints({0, 0, 0, 0, 0, 0}));
  auto free = standard_word_automaton(MonomialSubmodule(1, 1, {}));
  CHECK(count_by_length(free.dfa, 5) == ints({0, 1, 2, 3, 4, 5}));
  for (int m = 1; m <= 12; ++m) CHECK(star_ones.dfa.accepts(Word(1, [&] {
          std::vector<std::uint8_t> w(m, 1);
          w[0] = 0;
          return w;
        }())));
}

TEST_CASE("generating functions") {
  CHECK(generating_function(all_words_dfa(3)).str() == "1/(1 - 3*t)");
  CHECK(generating_function(all_words_dfa(2)).str() == "1/(1 - 2*t)");
  auto star_ones = standard_word_automaton(MonomialSubmodule::from_words(1, 1, {W("1*")}));
  CHECK(generating_function(star_ones.dfa).str() == "t/(1 - t)");
  auto free = standard_word_automaton(MonomialSubmodule(1, 1, {}));
  RationalGF g = generating_function(free.dfa);
  CHECK(g.str() == "t/(1 - 2*t + t^2)");
  CHECK(g.series(6) == ints({0, 1, 2, 3, 4, 5}));
  auto empty = standard_word_automaton(MonomialSubmodule::from_words(1, 1, {W("*")}));
  CHECK(generating_function(empty.dfa).str() == "0");
}

TEST_CASE("rational function normalization") {
  // (t - t^2) / (1 - 2t + t^2) = t / (1 - t)
  RationalGF g(IntPoly(ints({0, 1, -1})), IntPoly(ints({1, -2, 1})));
  CHECK(g.numerator() == IntPoly(ints({0, 1})));
  CHECK(g.denominator() == IntPoly(ints({1, -1})));
  RationalGF h(IntPoly(ints({0, 2})), IntPoly(ints({2, -2})));
  CHECK(h.str() == "t/(1 - t)");
  CHECK_THROWS_AS(RationalGF(IntPoly(ints({1})), IntPoly(ints({0, 1}))), domain_error);
}

TEST_CASE("eventual polynomial fitting") {
  auto p = fit_eventual_polynomial(ints({0, 1, 2, 3, 4, 5, 6, 7}), 4);
  CHECK(p.onset == 0);
  CHECK(p.str() == "m");
  auto c = fit_eventual_polynomial(ints({0, 1, 1, 1, 1, 1, 1, 1}), 4);
  CHECK(c.onset == 1);
  CHECK(c.str() == "1");
  std::vector<Integer> pow2;
  for (int k = 0; k < 16; ++k) pow2.push_back(Integer(1) << k);
  CHECK_THROWS_AS(fit_eventual_polynomial(pow2, 8), domain_error);
  try {
    (void)fit_eventual_polynomial(pow2, 8);
  } catch (const domain_error& e) {
    CHECK(std::string(e.what()) == "not eventually polynomial within budget");
  }
  auto q = fit_eventual_polynomial(ints({5, 0, 2, 6, 12, 20, 30, 42, 56}), 6);
  CHECK(q.onset == 1);
  for (long m = 1; m <= 20; ++m) CHECK(q(m) == m * (m - 1));
}

TEST_CASE("automaton counts and generating functions agree with brute force") {
  std::vector<MonomialSubmodule> fixtures{
      MonomialSubmodule(1, 1, {}),
      MonomialSubmodule::from_words(1, 1, {W("1*")}),
      MonomialSubmodule::from_words(1, 1, {W("1*1"), W("11*")}),
      MonomialSubmodule::from_words(2, 1, {W("*1*"), W("1**1")}),
      MonomialSubmodule::from_words(1, 2, {W("1*", 2)}),
      MonomialSubmodule::from_words(1, 2, {W("12*", 2), W("*21", 2)}),
      MonomialSubmodule::from_words(2, 2, {W("*1*", 2)}),
  };
  for (const auto& sub : fixtures) {
    auto built = standard_word_automaton(sub);
    const int len = sub.colors() == 1 ? 12 : 9;
    auto counts = count_by_length(built.dfa, 20);
    REQUIRE(std::vector<Integer>(counts.begin(), counts.begin() + len + 1) == brute_counts(sub, len));
    CHECK(generating_function(built.dfa).series(21) == counts);
    CHECK(built.dfa.size() <= built.product_states);
  }
}

TEST_CASE("standard and non-standard words partition all words") {
  auto sub = MonomialSubmodule::from_words(1, 2, {W("12*", 2), W("2*", 2)});
  auto built = standard_word_automaton(sub);
  for (int m = 0; m <= 7; ++m) {
    long standard = 0, total = 0;
    for (const auto& l : oracle::words_with_stars(2, m, 1)) {
      ++total;
      bool in_sub = member(sub, decode_word(Word(2, l), 1)).has_value();
      bool acc = built.dfa.accepts(Word(2, l));
      CHECK(acc != in_sub);
      standard += acc;
    }
    CHECK(standard + (total - standard) == oracle::oi_count(2, 1, m).get_si());
  }
}

TEST_CASE("Hilbert functions of principal projectives") {
  auto p1 = hilbert_function(MonomialSubmodule(1, 1, {}), 12);
  for (int m = 0; m <= 12; ++m) CHECK(p1.counts[m] == m);
  REQUIRE(p1.polynomial);
  CHECK(p1.polynomial->str() == "m");
  auto fi1 = fi_projective_counts(p1.counts, 1);
  for (int m = 0; m <= 12; ++m) CHECK(fi1[m] == oracle::fi_count(1, 1, m));

  auto p2 = hilbert_function(MonomialSubmodule(2, 1, {}), 12);
  auto fi2 = fi_projective_counts(p2.counts, 2);
  for (int m = 0; m <= 12; ++m) {
    CHECK(fi2[m] == m * (m - 1));
    CHECK(fi2[m] == oracle::fi_count(1, 2, m));
  }

  auto q = hilbert_function(MonomialSubmodule::from_words(1, 1, {W("1*")}), 12);
  CHECK(q.counts == ints({0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  REQUIRE(q.polynomial);
  CHECK(q.polynomial->onset == 1);
  CHECK(q.polynomial->str() == "1");

  auto exp = hilbert_function(MonomialSubmodule(1, 2, {}), 12);
  CHECK_FALSE(exp.polynomial.has_value());
}

TEST_CASE("random d = 1 quotients are eventually polynomial and predict held-out values") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    std::vector<Word> gens;
    const int k = static_cast<int>(rng() % 5);
    for (int g = 0; g < k; ++g) {
      const int len = n + static_cast<int>(rng() % (7 - n));
      auto words = oracle::words_with_stars(1, len, n);
      gens.emplace_back(1, words[rng() % words.size()]);
    }
    auto sub = MonomialSubmodule::from_words(n, 1, gens);
    const int D = 24;
    auto rep = hilbert_function(sub, D);
    REQUIRE(rep.polynomial);
    auto more = count_by_length(standard_word_automaton(sub).dfa, D + 5);
    for (int m = D + 1; m <= D + 5; ++m) CHECK((*rep.polynomial)(m) == Rational(more[m]));
  }
}
