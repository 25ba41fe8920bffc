#pragma once

// Base-p digit sums and the valuation of binomial coefficients, plus the
// inequality |C(N,K)|_p * p^(1-(N-K)) <= |N|_p checked in exponent form.

#include <vector>

namespace padyn {

/// Sum of the base-p digits of n.
long wt_p(long n, long p);

/// v_p(C(N, K)) from digit sums. Throws RangeError unless 0 <= K <= N.
long vp_binomial(long N, long K, long p);

/// Both sides as exponents e with |side|_p = p^-e, so the inequality
/// lhs <= rhs in norms reads lhs_exponent >= rhs_exponent.
struct BinomialValuationRecord {
  long N;
  long K;
  long p;
  long v;
  long lhs_exponent;
  long rhs_exponent;
  bool equality;
};

/// Requires N >= 2 and 0 <= K <= N-2. Throws InternalInconsistency if the
/// inequality fails.
BinomialValuationRecord lemma24_check(long N, long K, long p);

struct BinomialSweep {
  long p;
  long n_max;
  long checked = 0;
  long violations = 0;
  std::vector<BinomialValuationRecord> equalities;
};

/// lemma24_check over 2 <= N <= n_max, 0 <= K <= N-2, counting rather
/// than throwing on violations.
BinomialSweep binomial_sweep(long p, long n_max);

}  // namespace padyn
