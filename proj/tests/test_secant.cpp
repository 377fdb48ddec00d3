#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "repstab/errors.hpp"
#include "repstab/secant.hpp"

using namespace repstab;

namespace {

// "z201" -> {2, 0, 1}; names with an underscore separate wide parts.
std::vector<int> parts_of(const std::string& name) {
  std::vector<int> p;
  std::string body = name.substr(1);
  if (body.find('_') != std::string::npos) {
    std::size_t start = 0;
    while (start <= body.size()) {
      auto end = body.find('_', start);
      p.push_back(std::stoi(body.substr(start, end - start)));
      if (end == std::string::npos) break;
      start = end + 1;
    }
  } else {
    for (char c : body) p.push_back(c - '0');
  }
  return p;
}

// Every basis vector of every piece vanishes on `points` random points of
// the order-fold secant variety.
bool vanishes_on_secant_points(const GradedIdealBasis& I, int r, int order, int points, std::uint64_t seed) {
  std::vector<std::vector<int>> vars;
  for (const auto& n : I.names()) vars.push_back(parts_of(n));
  std::mt19937_64 rng(seed);
  for (int k = 0; k < points; ++k) {
    auto z = oracle::secant_point(vars, r, order, rng);
    std::vector<Rational> pt(z.begin(), z.end());
    for (int e = 0; e <= I.truncation(); ++e)
      for (const auto& p : I.basis(e))
        if (p.evaluate(pt) != 0) return false;
  }
  return true;
}

SparsePoly var(int n, int i) { return SparsePoly::variable(n, i); }

}  // namespace

TEST_CASE("coproduct examples") {
  SparsePoly x = var(1, 0);
  CHECK(delta(x) == var(2, 0) + var(2, 1));
  SparsePoly expected = var(2, 0) * var(2, 0) + var(2, 0) * var(2, 1) * Rational(2) + var(2, 1) * var(2, 1);
  CHECK(delta(x * x) == expected);
  CHECK(delta(SparsePoly::constant(1, 1)) == SparsePoly::constant(2, 1));
}

TEST_CASE("coproduct is a cocommutative ring homomorphism") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 4), nterms(1, 4);
  auto random_poly = [&](int n) {
    SparsePoly p(n);
    for (int t = nterms(rng); t > 0; --t) {
      Exponent e(n, 0);
      for (int k = deg(rng); k > 0; --k) ++e[rng() % n];
      Rational c(coef(rng), 1 + static_cast<int>(rng() % 3));
      c.canonicalize();
      p.add_term(e, c);
    }
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    SparsePoly p = random_poly(n), q = random_poly(n);
    REQUIRE(delta(p * q) == delta(p) * delta(q));
    REQUIRE(delta(p + q) == delta(p) + delta(q));
    REQUIRE(swap_tensor_factors(delta(p)) == delta(p));
  }
}

TEST_CASE("polynomial printing uses graded lex") {
  auto I = veronese_ideal_truncated(2, 2, 2);
  REQUIRE(I.dim(2) == 1);
  auto b = I.basis(2)[0];
  CHECK(b.to_string(I.names()) == "z20*z02 - z11^2");
}

TEST_CASE("Veronese ideals") {
  auto conic = veronese_ideal_truncated(2, 2, 2);
  CHECK(conic.names() == std::vector<std::string>{"z20", "z11", "z02"});
  CHECK(conic.dim(0) == 0);
  CHECK(conic.dim(1) == 0);
  CHECK(conic.dim(2) == 1);
  auto cubic = veronese_ideal_truncated(2, 3, 2);
  CHECK(cubic.dim(2) == 3);
  for (int d = 1; d <= 4; ++d) {
    auto line = veronese_ideal_truncated(1, d, 4);
    for (int e = 0; e <= 4; ++e) CHECK(line.dim(e) == 0);
  }
  for (int d = 2; d <= 4; ++d) {
    auto I = veronese_ideal_truncated(2, d, 3);
    CHECK(I.is_closed_under_multiplication());
    CHECK(vanishes_on_secant_points(I, 2, 1, 20, 100 + d));
    for (int e = 1; e <= 3; ++e) CHECK(I.dim(e) == oracle::vanishing_dimension(2, d, 1, e, 3, 200 + d * 10 + e));
  }
  auto plane = veronese_ideal_truncated(3, 2, 3);
  for (int e = 1; e <= 3; ++e) CHECK(plane.dim(e) == oracle::vanishing_dimension(3, 2, 1, e, 3, 300 + e));
}

TEST_CASE("joins") {
  const std::vector<std::string> xy{"x", "y"};
  auto I = GradedIdealBasis::generated_by(xy, {var(2, 0)}, 4);
  auto J = GradedIdealBasis::generated_by(xy, {var(2, 1)}, 4);
  auto IJ = join_truncated(I, J, 4);
  for (int e = 0; e <= 4; ++e) CHECK(IJ.dim(e) == 0);

  auto conic = veronese_ideal_truncated(2, 2, 4);
  auto full = GradedIdealBasis::irrelevant(conic.names(), 4);
  auto same = join_truncated(conic, full, 4);
  auto swapped = join_truncated(full, conic, 4);
  CHECK(same == conic);
  CHECK(swapped == conic);
  CHECK_THROWS_AS(join_truncated(conic, full, 5), domain_error);
  try {
    (void)join_truncated(conic, full, 5);
  } catch (const domain_error& e) {
    CHECK(std::string(e.what()) == "join: truncation too small");
  }
}

TEST_CASE("joins are symmetric and monotone") {
  const std::vector<std::string> xyz{"x", "y", "z"};
  const int n = 3;
  auto sq = [&](int i) { return var(n, i) * var(n, i); };
  auto A = GradedIdealBasis::generated_by(xyz, {var(n, 0) * var(n, 1)}, 4);
  auto A2 = GradedIdealBasis::generated_by(xyz, {var(n, 0) * var(n, 1), sq(2)}, 4);
  auto B = GradedIdealBasis::generated_by(xyz, {sq(0) - var(n, 1) * var(n, 2)}, 4);
  auto AB = join_truncated(A, B, 4), BA = join_truncated(B, A, 4), A2B = join_truncated(A2, B, 4);
  CHECK(AB == BA);
  for (int e = 0; e <= 4; ++e)
    for (const auto& p : AB.basis(e)) CHECK(A2B.contains(p));
  CHECK(AB.is_closed_under_multiplication());
}

TEST_CASE("secant ideals of rational normal curves") {
  auto conic = veronese_ideal_truncated(2, 2, 3);
  CHECK(secant_truncated(conic, 1, 3) == conic);
  auto sec_conic = secant_truncated(conic, 2, 3);
  for (int e = 0; e <= 3; ++e) CHECK(sec_conic.dim(e) == 0);
  CHECK(oracle::vanishing_dimension(2, 2, 2, 3, 3, 7) == 0);

  auto cubic = veronese_ideal_truncated(2, 3, 3);
  auto sec_cubic = secant_truncated(cubic, 2, 3);
  for (int e = 0; e <= 3; ++e) {
    CHECK(sec_cubic.dim(e) == 0);
    CHECK(oracle::vanishing_dimension(2, 3, 2, e, 3, 70 + e) == 0);
  }

  auto quartic = veronese_ideal_truncated(2, 4, 4);
  auto sec = secant_truncated(quartic, 2, 4);
  CHECK(sec.dim(2) == 0);
  CHECK(sec.dim(3) == 1);
  CHECK(oracle::vanishing_dimension(2, 4, 2, 3, 3, 9) == 1);
  CHECK(vanishes_on_secant_points(sec, 2, 2, 20, 11));
  CHECK(sec.is_closed_under_multiplication());
  // Secant varieties grow, so their ideals shrink.
  for (int e = 0; e <= 4; ++e)
    for (const auto& p : sec.basis(e)) CHECK(quartic.contains(p));
  auto table = generator_degrees(sec);
  CHECK(table.max_generator_degree == 3);
  CHECK(table.new_generators[3] == 1);
}

TEST_CASE("generator degree tables") {
  for (int d = 2; d <= 5; ++d) {
    auto t = generator_degrees(veronese_ideal_truncated(2, d, 4));
    CHECK(t.max_generator_degree == 2);
    CHECK(t.new_generators[2] == static_cast<std::size_t>(d * (d - 1) / 2));
  }
  auto zero = generator_degrees(GradedIdealBasis::zero({"x"}, 3));
  CHECK_FALSE(zero.max_generator_degree.has_value());
  for (auto k : zero.new_generators) CHECK(k == 0);
}
