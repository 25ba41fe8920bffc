#include "doctest.h"
#include "oracles.hpp"
#include "padyn/binomial.hpp"

using namespace padyn;

TEST_SUITE("valuation-combinatorics") {

TEST_CASE("digit sums") {
  CHECK(wt_p(137, 5) == 5);
  CHECK(wt_p(0, 3) == 0);
  CHECK(wt_p(255, 2) == 8);
}

TEST_CASE("binomial valuation examples") {
  CHECK(vp_binomial(4, 2, 2) == 1);
  const auto eq = lemma24_check(4, 2, 2);
  CHECK(eq.equality);
  CHECK(eq.lhs_exponent == eq.rhs_exponent);
  const auto strict = lemma24_check(4, 2, 3);
  CHECK_FALSE(strict.equality);
  const auto r = lemma24_check(9, 0, 3);
  CHECK(r.lhs_exponent == 8);
  CHECK(r.rhs_exponent == 2);
  CHECK_FALSE(r.equality);
}

TEST_CASE("digit sums agree with factorial valuations") {
  long mismatches = 0;
  for (long p : {2L, 3L, 5L, 7L, 11L}) {
    for (long n = 0; n <= 500; ++n) {
      for (long k = 0; k <= n; ++k) {
        if (vp_binomial(n, k, p) != oracle::vp_binomial(n, k, p)) ++mismatches;
        if (vp_binomial(n, k, p) != vp_binomial(n, n - k, p)) ++mismatches;
      }
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("inequality sweep and equality set") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    const auto s = binomial_sweep(p, 300);
    CHECK(s.violations == 0);
    CHECK(s.checked == 299L * 300L / 2);
    if (p != 2) {
      CHECK(s.equalities.empty());
      continue;
    }
    CHECK(s.equalities.size() == 150);
    for (const auto& r : s.equalities) {
      CHECK(r.K == r.N - 2);
      CHECK(r.N % 2 == 0);
    }
  }
}

TEST_CASE("odd N has no equality at p = 2") {
  // |C(N,2)|_2 / 2 = 2^-v(N-1) < 1 = |N|_2 for N odd.
  for (long n = 3; n <= 301; n += 2) {
    const auto r = lemma24_check(n, n - 2, 2);
    CHECK_FALSE(r.equality);
    CHECK(r.lhs_exponent == oracle::vp(mpz_class(n - 1), 2));
  }
}

TEST_CASE("records against an exact rational evaluation") {
  for (long p : {2L, 3L, 5L}) {
    for (long n = 2; n <= 40; ++n) {
      for (long k = 0; k <= n - 2; ++k) {
        const auto r = lemma24_check(n, k, p);
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), n, k);
        // |C|_p p^(1-(N-K)) = p^-(v(C) + (N-K) - 1).
        CHECK(r.lhs_exponent == oracle::vp(c, p) + (n - k) - 1);
        CHECK(r.rhs_exponent == oracle::vp(mpz_class(n), p));
        CHECK(r.equality == (r.lhs_exponent == r.rhs_exponent));
      }
    }
  }
}

}
