#pragma once

// Polynomials over Q with a distinguished prime. Coefficients are kept as
// exact rationals so that evaluation at rational points, derivatives and
// Hasse derivatives never lose information; reductions mod p^k are taken
// on demand for the residue-level machinery.

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "padyn/integer.hpp"
#include "padyn/padic.hpp"

namespace padyn {

class PadicPolynomial {
 public:
  /// Coefficients lowest degree first. Trailing zeros are dropped.
  PadicPolynomial(long p, std::vector<mpq_class> coefficients);

  static PadicPolynomial monomial(long p, const mpq_class& c, int degree);
  /// "c0,c1,...,cd" with each entry an integer or num/den.
  static PadicPolynomial parse(long p, std::string_view text, std::string_view flag = "poly");

  long prime() const noexcept { return prime_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
  mpq_class coefficient(int i) const;

  /// Every coefficient has v_p >= 0.
  bool has_integral_coefficients() const;
  /// Smallest coefficient valuation; kExact for the zero polynomial.
  long min_valuation() const;

  mpq_class evaluate(const mpq_class& x) const;
  PadicNumber evaluate(const PadicNumber& x) const;

  PadicPolynomial derivative() const;
  /// F^(k) / k!, which keeps integral coefficients integral.
  PadicPolynomial hasse(int k) const;
  /// this(inner(x)).
  PadicPolynomial compose(const PadicPolynomial& inner) const;

  friend PadicPolynomial operator+(const PadicPolynomial& a, const PadicPolynomial& b);
  friend PadicPolynomial operator-(const PadicPolynomial& a, const PadicPolynomial& b);
  friend PadicPolynomial operator*(const PadicPolynomial& a, const PadicPolynomial& b);
  friend PadicPolynomial operator*(const mpq_class& c, const PadicPolynomial& f);
  friend bool operator==(const PadicPolynomial& a, const PadicPolynomial& b);

  /// Coefficients mod p^k. Throws PreconditionViolated when a denominator
  /// is divisible by p.
  std::vector<mpz_class> reduce(long k) const;

  /// "c0,c1,...", the same syntax parse() accepts.
  std::string to_string() const;

 private:
  long prime_;
  std::vector<mpq_class> coeffs_;
};

/// A polynomial reduced mod m < 2^63 for fast table construction.
class ModularPolynomial {
 public:
  ModularPolynomial(const PadicPolynomial& f, int level);

  u64 modulus() const noexcept { return modulus_; }
  int level() const noexcept { return level_; }
  u64 operator()(u64 x) const;

 private:
  u64 modulus_;
  int level_;
  std::vector<u64> coeffs_;
};

/// Value, first derivative and half second derivative of an iterate,
/// carried mod p^k through the chain rule.
struct Jet {
  mpz_class value;
  mpz_class d1;
  mpz_class half_d2;
};

class JetEvaluator {
 public:
  JetEvaluator(const PadicPolynomial& f, long k);

  long prime() const noexcept { return prime_; }
  long level() const noexcept { return level_; }
  const mpz_class& modulus() const noexcept { return modulus_; }

  Jet start(const mpz_class& x) const;
  /// Jet of f o g from the jet of g.
  Jet step(const Jet& g) const;
  /// Jet of f^iterations at x.
  Jet iterate(const mpz_class& x, long iterations) const;
  mpz_class value(const mpz_class& x) const;

 private:
  mpz_class eval(const std::vector<mpz_class>& c, const mpz_class& x) const;

  long prime_;
  long level_;
  mpz_class modulus_;
  std::vector<mpz_class> f_, d1_, half_d2_;
};

}  // namespace padyn
