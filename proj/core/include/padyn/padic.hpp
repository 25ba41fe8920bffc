#pragma once

// Finite-precision arithmetic in Q_p.
//
// A nonzero value is stored as p^v * u where u is a unit known modulo p^r
// (r is the relative precision). Zero carries the absolute precision to
// which it is known: an exactly-constructed 0 is exact, while the result
// of cancelling x - x is O(p^k) for the k the operands guaranteed.

#include <compare>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace padyn {

/// The p-adic absolute value p^exponent, or 0. Never a float.
struct Norm {
  long prime = 0;
  long exponent = 0;
  bool zero = true;

  static Norm of_zero(long p) { return Norm{p, 0, true}; }
  static Norm power(long p, long exponent) { return Norm{p, exponent, false}; }

  friend std::strong_ordering operator<=>(const Norm& a, const Norm& b) {
    if (a.zero || b.zero) return !a.zero <=> !b.zero;
    return a.exponent <=> b.exponent;
  }
  friend bool operator==(const Norm& a, const Norm& b) { return (a <=> b) == 0; }

  friend Norm operator*(const Norm& a, const Norm& b);
  friend Norm operator/(const Norm& a, const Norm& b);

  mpq_class value() const;
  /// "0", "1", or "p^e".
  std::string to_string() const;
};

class PadicNumber {
 public:
  static constexpr int kDefaultPrecision = 64;
  static constexpr long kExact = std::numeric_limits<long>::max() / 4;

  /// Zero known modulo p^absolute_precision (exact by default).
  static PadicNumber zero(long p, long absolute_precision = kExact);
  static PadicNumber from_integer(long p, const mpz_class& n, int precision = kDefaultPrecision);
  static PadicNumber from_rational(long p, const mpq_class& r,
                                   int precision = kDefaultPrecision);
  /// p^valuation * unit, unit reduced mod p^precision. unit must be prime to p.
  static PadicNumber from_unit(long p, long valuation, const mpz_class& unit, int precision);
  /// Digits least significant first; the first digit must be nonzero.
  static PadicNumber from_digits(long p, long valuation, std::span<const int> digits);

  long prime() const noexcept { return prime_; }
  bool is_zero() const noexcept { return zero_; }
  bool is_exact_zero() const noexcept { return zero_ && absolute_ >= kExact; }

  /// v_p(x). Throws PrecisionExhausted for zero.
  long valuation() const;
  /// Relative precision of the unit part; 0 for zero.
  int precision() const noexcept { return zero_ ? 0 : precision_; }
  /// v + r for nonzero values, the known bound for zero.
  long absolute_precision() const noexcept;
  const mpz_class& unit() const noexcept { return unit_; }

  /// First `count` digits of the unit part, least significant first.
  std::vector<int> digits(int count) const;
  /// Coefficient x_i of p^i in the expansion.
  int digit(long i) const;

  bool is_integral() const noexcept { return zero_ || valuation_ >= 0; }
  /// x mod p^k as an integer in [0, p^k). Requires an integral value.
  mpz_class residue(long k) const;
  /// The rational p^v * u represented by the stored digits.
  mpq_class to_rational() const;

  PadicNumber with_precision(int relative) const;
  PadicNumber inverse() const;
  PadicNumber pow(long exponent) const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

  /// Equal iff the difference is indistinguishable from zero.
  friend bool operator==(const PadicNumber& a, const PadicNumber& b);

  /// "v:<v> u:<digits, most significant first>" or "O(p^k)" / "0".
  std::string to_string() const;

 private:
  PadicNumber(long p, bool zero, long valuation, mpz_class unit, int precision, long absolute);

  long prime_ = 0;
  bool zero_ = true;
  long valuation_ = 0;
  mpz_class unit_ = 0;
  int precision_ = 0;
  long absolute_ = kExact;
};

Norm norm(const PadicNumber& x);

enum class ArithOp { Add, Sub, Mul, Div, Pow };

/// Checked field operation: unlike the operators, a result that is
/// indistinguishable from zero at working precision raises
/// PrecisionExhausted instead of returning O(p^k).
PadicNumber arith(ArithOp op, const PadicNumber& lhs, const PadicNumber& rhs);
PadicNumber arith_pow(const PadicNumber& base, long exponent);

/// Literal syntax: "num/den" (or an integer), or "v:<int> u:<digits base p>".
/// Digits are written most significant first using 0-9a-z, or as a
/// comma-separated decimal list for p > 36.
PadicNumber parse_padic(long p, std::string_view text,
                        int precision = PadicNumber::kDefaultPrecision);

/// A point x in Q_p or infinity, as used by orbit code.
class Extended {
 public:
  Extended(PadicNumber value) : prime_(value.prime()), value_(std::move(value)) {}
  static Extended infinity(long p) { return Extended(p); }

  bool is_infinity() const noexcept { return !value_.has_value(); }
  const PadicNumber& value() const;
  long prime() const noexcept { return prime_; }
  std::string to_string() const;

 private:
  explicit Extended(long p) : prime_(p) {}
  long prime_;
  std::optional<PadicNumber> value_;
};

/// A point of P^1(Q_p), kept in canonical form [x:1] or [1:0].
class ProjectivePoint {
 public:
  static ProjectivePoint finite(PadicNumber x);
  static ProjectivePoint infinity(long p);
  /// [x:y] with x, y not both zero.
  static ProjectivePoint from_pair(const PadicNumber& x, const PadicNumber& y);
  static ProjectivePoint from_extended(const Extended& e);

  bool is_infinity() const noexcept { return !x_.has_value(); }
  long prime() const noexcept { return prime_; }
  const PadicNumber& affine() const;
  /// Representative [x:y] scaled so that max(|x|_p, |y|_p) = 1.
  std::pair<PadicNumber, PadicNumber> unit_coordinates() const;

 private:
  explicit ProjectivePoint(long p) : prime_(p) {}
  long prime_;
  std::optional<PadicNumber> x_;
};

/// rho(P, Q) = |x1 y2 - x2 y1|_p / (max(|x1|,|y1|) max(|x2|,|y2|)).
Norm spherical_distance(const ProjectivePoint& a, const ProjectivePoint& b);

/// Closed disk D(center, p^-radius_exponent).
struct Ball {
  PadicNumber center;
  long radius_exponent;

  static Ball residue_class(long p, const mpz_class& residue, long radius_exponent);

  long prime() const noexcept { return center.prime(); }
  Norm radius() const { return Norm::power(prime(), -radius_exponent); }
  /// v_p(x - center) >= radius_exponent. Throws PrecisionExhausted when the
  /// operands do not carry enough digits to decide.
  bool contains(const PadicNumber& x) const;
  std::string to_string() const;
};

enum class BallRelation { Equal, Disjoint, AInB, BInA };

std::string_view to_string(BallRelation r) noexcept;

BallRelation ball_relation(const Ball& a, const Ball& b);

/// Uniform sample from the ball, carrying `precision` digits beyond its radius.
PadicNumber sample_ball(const Ball& ball, int precision, std::mt19937_64& rng);

/// Uniform random integer in [0, p^k).
mpz_class random_residue(long p, long k, std::mt19937_64& rng);

}  // namespace padyn
