#pragma once

// Root existence and lifting for polynomials over Z_p.
//
// Conditions are stated in valuations with H_k = F^(k)/k! (Hasse
// derivatives), evaluated exactly at the integer seed x0:
//   hl1      v(H_L) + v(F')           < v(F)
//   hl2[k]   v(H_k) + v(F')           < v(H_{k+1}) + v(F)      1 <= k < L
//   phl0     s                        <= v(F)
//   phl1     v(H_L)                   < s - v(F')
//   phl2[k]  v(F') + v(H_k) - v(H_{k+1}) < s                   1 <= k < L
// Either family certifies a unique root x with x = x0 mod p^(s - v(F')).

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "padyn/padic.hpp"
#include "padyn/polynomial.hpp"

namespace padyn {

struct HenselInequality {
  std::string name;
  int k;
  long lhs;
  long rhs;
  /// "<" or "<=".
  std::string relation;
  bool holds;
};

struct HenselReport {
  mpz_class x0;
  int L = 1;
  int s = 0;
  /// v_p(F(x0)); PadicNumber::kExact when x0 is an exact root.
  long v_F = 0;
  long v_dF = 0;
  std::vector<HenselInequality> checks;
  bool hl_pass = false;
  bool phl_pass = false;
  bool pass = false;
  /// x = x0 mod p^(s - v(F')), present when pass.
  std::optional<Ball> locating_ball;
};

/// L = 0 searches 1..deg(F); s = 0 takes s = v(F(x0)).
/// Throws PreconditionViolated if F is not in Z_p[x].
HenselReport check_hensel_hypothesis(const PadicPolynomial& F, const mpz_class& x0, int L = 0,
                                     int s = 0);

struct HenselCertificate {
  std::string polynomial;
  HenselReport hypothesis;
  PadicNumber root;
  /// root mod p^precision.
  mpz_class root_residue;
  int precision;
  /// v(F(x)) after each Newton step.
  std::vector<long> progress;
};

/// Throws HypothesisFailed when no L passes, NoConvergence if the iteration
/// stalls.
HenselCertificate hensel_lift(const PadicPolynomial& F, const mpz_class& x0, int target_precision,
                              int L = 0, int s = 0);

/// Number of solutions of x^N + 1 = 0 mod p.
long count_roots_unity_shift(long N, long p);

/// Roots of F in the classes `seeds` mod p, each isolated to a class on
/// which a Newton certificate applies and then lifted. Throws
/// NoRootInRegion when there are none or a class cannot be isolated.
std::vector<HenselCertificate> roots_in_classes(const PadicPolynomial& F,
                                                const std::vector<long>& seeds, int precision);

/// Solutions of x^N - a x + 1 = 0 (the finite fixed points of x -> (x^N+1)/a):
/// units when |a|_p <= 1, the root of size 1/|a|_p when |a|_p > 1.
std::vector<PadicNumber> fixed_points_of_fN(long p, long N, const mpq_class& a, int precision);

}  // namespace padyn
