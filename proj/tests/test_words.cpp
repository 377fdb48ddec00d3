#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "repstab/errors.hpp"
#include "repstab/words.hpp"

using namespace repstab;
using cat::OrderPreserving;

namespace {
Word W(const char* s, int d = 0) { return Word::parse(s, d); }
oracle::Letters L(const Word& w) { return w.letters(); }
}  // namespace

TEST_CASE("encoding examples") {
  OIdMorphism phi(2, 1, 3, {2}, {{1, 1}, {3, 2}});
  CHECK(encode_word(phi).str() == "1*2");
  CHECK(encode_word(OIdMorphism::identity(2, 3)).str() == "***");
  CHECK(decode_word(W("1*2", 2), 1) == phi);
  CHECK(decode_word(W("\xE2\x98\x85"), 1) == OIdMorphism::identity(1, 1));
  CHECK(W("1\xE2\x98\x85" "2").str() == "1*2");
  CHECK_THROWS_AS(decode_word(W("**"), 1), domain_error);
  CHECK_THROWS_AS(W("1x"), parse_error);
  CHECK_THROWS_AS(W("13", 2), parse_error);
}

TEST_CASE("encoding is a bijection onto words with n stars") {
  for (int d = 1; d <= 2; ++d)
    for (int n = 0; n <= 3; ++n)
      for (int m = n; m <= 6; ++m) {
        auto homs = cat::enumerate_hom<OrderPreserving>(d, n, m);
        auto words = oracle::words_with_stars(d, m, n);
        REQUIRE(homs.size() == words.size());
        std::set<std::vector<std::uint8_t>> seen;
        for (const auto& h : homs) {
          Word w = encode_word(h);
          CHECK(w.stars() == n);
          CHECK(static_cast<int>(w.size()) == m);
          CHECK(decode_word(w, n) == h);
          seen.insert(w.letters());
        }
        CHECK(seen == std::set<std::vector<std::uint8_t>>(words.begin(), words.end()));
      }
}

TEST_CASE("subsequence examples") {
  CHECK(is_subsequence(W("1*2"), W("11*22")) == std::vector<int>{1, 3, 4});
  CHECK_FALSE(is_subsequence(W("*1"), W("1*")).has_value());
  CHECK(is_subsequence(W(""), W("12")) == std::vector<int>{});
}

TEST_CASE("subsequence agrees with the dynamic-programming oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    std::uniform_int_distribution<int> len(0, 7), letter(0, 2);
    std::vector<std::uint8_t> a(len(rng)), b(len(rng));
    for (auto& c : a) c = static_cast<std::uint8_t>(letter(rng));
    for (auto& c : b) c = static_cast<std::uint8_t>(letter(rng));
    Word x(2, a), y(2, b);
    auto emb = is_subsequence(x, y);
    REQUIRE(emb.has_value() == oracle::subsequence_dp(a, b));
    if (emb) {
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(y[(*emb)[i] - 1] == a[i]);
      for (std::size_t i = 1; i < a.size(); ++i) CHECK((*emb)[i - 1] < (*emb)[i]);
    }
  }
}

TEST_CASE("divides examples") {
  auto phi = decode_word(W("1*"), 1);
  auto target = decode_word(W("11*"), 1);
  auto psi = divides(phi, target);
  REQUIRE(psi.has_value());
  CHECK(*psi == OIdMorphism(1, 2, 3, {1, 3}, {{2, 1}}));
  CHECK(divides(phi, phi) == OIdMorphism::identity(1, 2));
  CHECK_FALSE(divides(decode_word(W("*1"), 1), decode_word(W("1*"), 1)).has_value());
  CHECK_THROWS_AS(divides(phi, decode_word(W("**"), 2)), domain_error);
}

TEST_CASE("divides agrees with brute-force search and is monotone") {
  for (int d = 1; d <= 2; ++d)
    for (int n = 0; n <= 2; ++n)
      for (int m = n; m <= 4; ++m)
        for (int m2 = m; m2 <= 5; ++m2)
          for (const auto& phi : cat::enumerate_hom<OrderPreserving>(d, n, m)) {
            auto psis = cat::enumerate_hom<OrderPreserving>(d, m, m2);
            for (const auto& target : cat::enumerate_hom<OrderPreserving>(d, n, m2)) {
              bool brute = false;
              for (const auto& p : psis)
                if (cat::compose(p, phi) == target) brute = true;
              REQUIRE(divides(phi, target).has_value() == brute);
            }
            for (const auto& p : psis) CHECK(is_subsequence(encode_word(phi), encode_word(cat::compose(p, phi))));
          }
}

TEST_CASE("Higman witnesses") {
  std::vector<Word> chain{W("1"), W("11"), W("111")};
  auto r = higman_witness(chain);
  REQUIRE(r.witness);
  CHECK(r.witness->low == 1);
  CHECK(r.witness->high == 2);

  auto r2 = higman_witness(std::vector<Word>{W("12"), W("21"), W("2211")});
  REQUIRE(r2.witness);
  CHECK(r2.witness->low == 2);
  CHECK(r2.witness->high == 3);
  CHECK(r2.witness->embedding == std::vector<int>{1, 3});

  auto r3 = higman_witness(std::vector<Word>{W("12"), W("21")});
  CHECK_FALSE(r3.witness);
  CHECK(r3.scanned == 2);
}

TEST_CASE("minimal words") {
  auto m = minimal_words({W("*"), W("1*"), W("11*")});
  CHECK(m == std::vector<Word>{W("*")});
  auto anti = minimal_words({W("12"), W("21")});
  CHECK(anti.size() == 2);
  CHECK(minimal_words({}).empty());

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Word> in;
    std::uniform_int_distribution<int> len(0, 5), letter(0, 2), count(0, 8);
    for (int k = count(rng); k > 0; --k) {
      std::vector<std::uint8_t> w(len(rng));
      for (auto& c : w) c = static_cast<std::uint8_t>(letter(rng));
      in.emplace_back(2, w);
    }
    auto out = minimal_words(in);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < out.size(); ++j)
        if (i != j) CHECK_FALSE(oracle::subsequence_dp(L(out[i]), L(out[j])));
    for (const auto& w : in) {
      bool dominated = false;
      for (const auto& o : out) dominated = dominated || oracle::subsequence_dp(L(o), L(w));
      CHECK(dominated);
    }
  }
}
