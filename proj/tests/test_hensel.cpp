#include "doctest.h"
#include "oracles.hpp"
#include "padyn/error.hpp"
#include "padyn/hensel.hpp"

using namespace padyn;

namespace {

PadicPolynomial poly(long p, std::vector<long> c) {
  std::vector<mpq_class> q(c.begin(), c.end());
  return PadicPolynomial(p, q);
}

mpz_class eval_int(const std::vector<mpq_class>& c, const mpz_class& x, const mpz_class& m) {
  return oracle::reduce(oracle::eval(c, mpq_class(x)), m);
}

}  // namespace

TEST_SUITE("hensel-solver") {

TEST_CASE("hypothesis examples") {
  const auto pass = check_hensel_hypothesis(poly(5, {1, 0, 1}), 2, 1, 1);
  CHECK(pass.pass);
  CHECK(pass.hl_pass);
  CHECK(pass.v_F == 1);
  CHECK(pass.v_dF == 0);

  const auto fail = check_hensel_hypothesis(poly(2, {1, 0, 1}), 1, 1, 1);
  CHECK_FALSE(fail.pass);
  CHECK_FALSE(fail.checks.empty());

  const auto rep = check_hensel_hypothesis(poly(3, {1, -1, 0, 0, 0, 0, 1}), 2);
  CHECK_FALSE(rep.checks.empty());
  CHECK(rep.x0 == 2);
}

TEST_CASE("lifting examples") {
  const auto c = hensel_lift(poly(5, {1, 0, 1}), 2, 30);
  CHECK(c.root.residue(3) == 57);
  CHECK(eval_int({1, 0, 1}, c.root_residue, oracle::power(5, 30)) == 0);

  const auto f = hensel_lift(poly(5, {1, -5, 1}), 2, 30);
  CHECK(eval_int({1, -5, 1}, f.root_residue, oracle::power(5, 30)) == 0);
  // x^2 - 5x + 1 = 0 says (x^2 + 1)/5 = x.
  const mpz_class r = f.root_residue;
  const mpz_class m = oracle::power(5, 29);
  const mpz_class s = r * r + 1;
  REQUIRE(s % 5 == 0);
  CHECK(mpz_class(s / 5 - r) % m == 0);

  CHECK_THROWS_AS(hensel_lift(poly(2, {1, 0, 1}), 1, 20, 1, 1), Error);
}

TEST_CASE("root counts of x^N + 1 mod p") {
  CHECK(count_roots_unity_shift(7, 2) == 1);
  CHECK(count_roots_unity_shift(2, 5) == 2);
  CHECK(count_roots_unity_shift(4, 5) == 0);
  long mismatches = 0;
  for (long p = 2; p <= 97; ++p) {
    bool prime = p > 1;
    for (long d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (!prime) continue;
    for (long q = 1; q <= 20; ++q) {
      if (q % p == 0) continue;
      for (long m = 0, pm = 1; m <= 2; ++m, pm *= p) {
        const long N = q * pm;
        if (count_roots_unity_shift(N, p) != oracle::root_count(N, p)) ++mismatches;
      }
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("fixed points of f_N") {
  const auto two = fixed_points_of_fN(5, 2, 5, 20);
  REQUIRE(two.size() == 2);
  std::vector<long> res;
  for (const auto& x : two) res.push_back(x.residue(1).get_si());
  std::sort(res.begin(), res.end());
  CHECK(res == std::vector<long>{2, 3});

  const auto one = fixed_points_of_fN(3, 3, mpq_class(1, 9), 20);
  REQUIRE(one.size() == 1);
  CHECK(one[0].valuation() == 2);

  const auto sy3 = fixed_points_of_fN(2, 3, 2, 20);
  REQUIRE(sy3.size() == 1);
  CHECK(sy3[0].residue(2) == 1);
}

TEST_CASE("randomized lifts are roots, unique in their ball") {
  auto g = oracle::rng(17);
  long found = 0, uniqueness = 0;
  for (int trial = 0; trial < 2000 && found < 60; ++trial) {
    const long p = std::vector<long>{2, 3, 5, 7}[trial % 4];
    std::uniform_int_distribution<long> coeff(-20, 20), deg(2, 4), seed(0, p * p - 1);
    std::vector<long> c(deg(g) + 1);
    for (auto& x : c) x = coeff(g);
    c.back() = c.back() == 0 ? 1 : c.back();
    const long x0 = seed(g);
    // Force F(x0) = 0 mod p^2 so a seed exists often.
    std::vector<mpq_class> q(c.begin(), c.end());
    const mpz_class r = oracle::reduce(oracle::eval(q, x0), oracle::power(p, 2));
    c[0] -= r.get_si();
    q.assign(c.begin(), c.end());
    const PadicPolynomial F(p, q);
    const auto h = check_hensel_hypothesis(F, x0);
    if (!h.pass || h.v_F >= PadicNumber::kExact) continue;
    ++found;
    const auto cert = hensel_lift(F, x0, 40);
    CHECK(eval_int(q, cert.root_residue, oracle::power(p, 40)) == 0);
    REQUIRE(h.locating_ball);
    CHECK(h.locating_ball->contains(cert.root));
    if (uniqueness < 15) {
      ++uniqueness;
      const long t = h.locating_ball->radius_exponent;
      const long k = h.s + 2;
      const mpz_class pk = oracle::power(p, k), step = oracle::power(p, t);
      const mpz_class base = mpz_class(x0) % step;
      for (mpz_class y = base; y < pk; y += step) {
        const auto hy = check_hensel_hypothesis(F, y);
        if (!hy.pass || hy.v_F >= PadicNumber::kExact) continue;
        const auto other = hensel_lift(F, y, 40);
        CHECK(other.root_residue == cert.root_residue);
      }
    }
  }
  CHECK(found >= 40);
}

TEST_CASE("roots in classes") {
  const auto roots = roots_in_classes(poly(7, {-2, 0, 1}), {1, 2, 3, 4, 5, 6}, 20);
  CHECK(roots.size() == 2);
  try {
    (void)roots_in_classes(poly(5, {-2, 0, 1}), {1, 2, 3, 4}, 20);
    FAIL("expected NoRootInRegion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoRootInRegion);
  }
  // (x - 1)^2 (x + 2): the double root is split off exactly.
  const auto dbl = roots_in_classes(poly(5, {2, -3, 0, 1}), {1, 3}, 20);
  CHECK(dbl.size() == 2);
}

}
