#include "padyn/binomial.hpp"

#include <string>

#include "padyn/error.hpp"
#include "padyn/integer.hpp"

namespace padyn {

long wt_p(long n, long p) {
  if (n < 0) throw Error(ErrorCode::RangeError, "wt_p of a negative integer");
  long s = 0;
  for (; n > 0; n /= p) s += n % p;
  return s;
}

long vp_binomial(long N, long K, long p) {
  if (K < 0 || K > N) {
    throw Error(ErrorCode::RangeError,
                "C(" + std::to_string(N) + "," + std::to_string(K) + ") needs 0 <= K <= N");
  }
  return (wt_p(K, p) + wt_p(N - K, p) - wt_p(N, p)) / (p - 1);
}

namespace {

BinomialValuationRecord record(long N, long K, long p) {
  if (N < 2 || K < 0 || K > N - 2) {
    throw Error(ErrorCode::RangeError, "needs N >= 2 and 0 <= K <= N-2");
  }
  BinomialValuationRecord r{N, K, p, vp_binomial(N, K, p), 0, 0, false};
  r.lhs_exponent = r.v + (N - K) - 1;
  r.rhs_exponent = split_prime_power(N, p).m;
  r.equality = r.lhs_exponent == r.rhs_exponent;
  return r;
}

}  // namespace

BinomialValuationRecord lemma24_check(long N, long K, long p) {
  const auto r = record(N, K, p);
  if (r.lhs_exponent < r.rhs_exponent) {
    throw Error(ErrorCode::InternalInconsistency,
                "|C(" + std::to_string(N) + "," + std::to_string(K) + ")|_" + std::to_string(p) +
                    " * p^(1-(N-K)) exceeds |N|_p");
  }
  return r;
}

BinomialSweep binomial_sweep(long p, long n_max) {
  BinomialSweep out;
  out.p = p;
  out.n_max = n_max;
  for (long N = 2; N <= n_max; ++N) {
    for (long K = 0; K <= N - 2; ++K) {
      const auto r = record(N, K, p);
      ++out.checked;
      if (r.lhs_exponent < r.rhs_exponent) ++out.violations;
      if (r.equality) out.equalities.push_back(r);
    }
  }
  return out;
}

}  // namespace padyn
