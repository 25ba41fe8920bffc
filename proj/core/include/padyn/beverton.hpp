#pragma once

// The family phi_N(z) = a z^N / (z^N + 1) on P^1(Q_p), studied through the
// conjugate polynomial f_N(x) = (x^N + 1) / a (conjugacy z -> 1/z).

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "padyn/dynamics.hpp"
#include "padyn/padic.hpp"
#include "padyn/polynomial.hpp"
#include "padyn/residue_set.hpp"

namespace padyn {

struct FamilyParams {
  long p = 0;
  long N = 0;
  /// N = q p^m with gcd(q, p) = 1.
  long q = 0;
  int m = 0;
  mpq_class a;
  long v_a = 0;
  /// First two base-p digits of the unit part of a.
  long a0 = 0;
  long a1 = 0;

  /// Throws PreconditionViolated (p not prime, N < 2) or ZeroParameter.
  static FamilyParams make(long p, long N, const mpq_class& a);
};

enum class Regime { SY1, SY1EmptySphere, SY2i, SY2ii, SY3i, SY3ii, SY3iii, SY3iv, SY4 };

std::string_view to_string(Regime r) noexcept;

struct RegimeVerdict {
  Regime regime;
  /// |a|_p = p^((N-1) s) on the nonempty-sphere side of |a|_p > 1.
  std::optional<long> sphere_exponent;
  /// gcd(p-1, q) when |a|_p < |N|_p^2 and it is >= 2.
  std::optional<long> ell;
  /// |a|_2 = 2^-k.
  std::optional<long> k;
  std::vector<std::string> notes;
};

RegimeVerdict classify_regime(const FamilyParams& fp);

/// f_N as a polynomial: coefficients [1/a, 0, ..., 0, 1/a].
PadicPolynomial conjugate_to_polynomial(long p, long N, const mpq_class& a);

/// f_N on P^1: infinity is fixed.
Extended apply_fN(const FamilyParams& fp, const Extended& x, int precision);
/// phi_N on P^1: phi_N(infinity) = a, and z^N = -1 maps to infinity.
Extended apply_phiN(const FamilyParams& fp, const Extended& z, int precision);

/// g_N(x) = x^N / (a |a|_p) + |a|_p^(1/(N-1)) / a, in Z_p[x].
/// Requires |a|_p > 1 and (N-1) | v_p(a).
PadicPolynomial build_gN(const FamilyParams& fp);

/// h_N(x) = ((2x+1)^N + 1 - a) / (2a), in Z_2[x]. Requires p = 2,
/// |a|_2 = 1/2, |N|_2 = 1/2.
PadicPolynomial build_hN(const FamilyParams& fp);

enum class OrbitVerdict { DivergesToInfinity, ConvergesTo, EntersSphere, Undecided };

std::string_view to_string(OrbitVerdict v) noexcept;

struct OrbitReport {
  OrbitVerdict verdict = OrbitVerdict::Undecided;
  /// Iterations performed before the verdict.
  int steps = 0;
  /// Valuations of f^n(x), PadicNumber::kExact for 0; empty entries for
  /// infinity are recorded as std::nullopt.
  std::vector<std::optional<long>> valuations;
  std::optional<PadicNumber> limit;
  /// Valuations of f^n(x) - limit along the orbit, when converging.
  std::vector<long> distances;
  /// The distances never moved away from the limit.
  bool monotone = true;
  std::string reason;
};

/// Iterates f_N from x. Divergence is declared only by the growth criteria
/// (N-1) v(x) < v_p(a) when |a|_p > 1 and v(x) <= -1 when |a|_p <= 1;
/// convergence when the distance to one of `targets` (by default the
/// finite fixed points) reaches p^-precision.
OrbitReport orbit(const FamilyParams& fp, const Extended& x0, int max_iter, int precision,
                  const std::vector<PadicNumber>* targets = nullptr);

/// Working relative precision for orbits of `max_iter` steps.
int orbit_working_precision(const FamilyParams& fp, int max_iter, int precision);

/// j -> a0^-1 j^N mod p on 1..p-1 (index 0 unused). Requires |a|_p > 1,
/// (N-1) | v_p(a), p >= 3.
std::vector<long> sphere_level1_map(const FamilyParams& fp);

struct RepellerReport {
  long ell = 0;
  std::vector<PadicNumber> fixed_points;
  std::vector<Ball> disks;
  std::vector<Ball> image_disks;
  /// v_p(a) - v_p(N), the same for every disk.
  long tau = 0;
  long expansion_samples = 0;
  bool expansion_exact = true;
  std::vector<std::vector<int>> incidence;
  bool irreducible = false;
  int depth = 0;
  /// Digits of x needed to fix the first `depth` symbols.
  int coding_precision = 0;
  long cylinders_expected = 0;
  long cylinders_realized = 0;
  /// A few (residue mod p^coding_precision, word) pairs.
  std::vector<std::pair<mpz_class, std::string>> coding_sample;
  long shift_checked = 0;
  bool shift_equivariant = true;
  /// |a|_p < |N|_p^2: the invariant set equals the unit-norm-forever set.
  bool invariant_set_is_unit_orbit_set = false;
  std::optional<long> ell_formula;
  std::vector<std::string> notes;
};

/// Requires regime SY2i. Throws PreconditionViolated otherwise.
RepellerReport repeller_analysis(const FamilyParams& fp, int depth, long samples = 100,
                                 std::uint64_t seed = 1);

struct GeneratorCheck {
  long generator;
  long m;
  /// Smallest n in 1..p-1 with m (N^n - 1)/(N - 1) = 0 mod p-1, if any.
  std::optional<long> min_n;
  bool cond1;
};

struct Dsy1Report {
  long p = 0;
  bool cond1 = false;
  bool cond1_orbit = false;
  /// First return time of 1 under the sphere map, if 1 returns.
  std::optional<long> return_time;
  std::vector<GeneratorCheck> generators;
  bool cond2 = false;
  /// alpha, beta (and gamma = g''/2) of g^(p-1) at 1, mod p.
  long alpha = 0;
  long beta = 0;
  long gamma = 0;
  bool minimal = false;
  /// p = 2: second digit of a, level-1 and level-2 data at 1.
  std::optional<long> a1;
  std::optional<CycleRecord> level1;
  std::optional<CycleRecord> level2;
  std::vector<std::string> notes;
};

Dsy1Report dsy1_condition_check(const FamilyParams& fp);

struct Dsy3Prediction {
  /// 1..6 for the applicable case, 0 when none of the listed sets is minimal.
  int item = 0;
  bool attracting_fixed_point = false;
  std::vector<ResidueSet> minimal_components;
  std::string description;
};

/// Candidate sets whose minimality the classification decides.
std::vector<ResidueSet> dsy3_candidate_sets();

/// The sets of item `item` are all minimal if and only if its congruences
/// hold. Item 6 is a joint statement about three balls: a single ball can
/// be minimal outside it.
struct Dsy3Claim {
  int item;
  std::vector<ResidueSet> sets;
};

std::vector<Dsy3Claim> dsy3_claims();

/// Requires a = 1 mod 3 (a a 3-adic unit) and N even.
Dsy3Prediction dsy3_classify(const mpq_class& a, long N);

/// Uniform sample of p^v * u with u a unit carrying `precision` digits.
PadicNumber random_with_valuation(long p, long v, int precision, std::mt19937_64& rng);

}  // namespace padyn
