#include "padyn/padic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "padyn/error.hpp"
#include "padyn/integer.hpp"

namespace padyn {

namespace {

void check_same_prime(const PadicNumber& a, const PadicNumber& b) {
  if (a.prime() != b.prime()) {
    throw Error(ErrorCode::PrimeMismatch, "operands over Q_" + std::to_string(a.prime()) +
                                              " and Q_" + std::to_string(b.prime()));
  }
}

char digit_char(int d) { return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10); }

}  // namespace

// ---------------------------------------------------------------- Norm

Norm operator*(const Norm& a, const Norm& b) {
  if (a.zero || b.zero) return Norm::of_zero(a.prime ? a.prime : b.prime);
  return Norm::power(a.prime, a.exponent + b.exponent);
}

Norm operator/(const Norm& a, const Norm& b) {
  if (b.zero) throw Error(ErrorCode::DivisionByZero, "norm quotient by zero");
  if (a.zero) return a;
  return Norm::power(a.prime, a.exponent - b.exponent);
}

mpq_class Norm::value() const {
  if (zero) return 0;
  mpq_class out(prime_power(prime, std::labs(exponent)));
  if (exponent < 0) out = 1 / out;
  return out;
}

std::string Norm::to_string() const {
  if (zero) return "0";
  if (exponent == 0) return "1";
  return std::to_string(prime) + "^" + std::to_string(exponent);
}

// ---------------------------------------------------------------- PadicNumber

PadicNumber::PadicNumber(long p, bool zero, long valuation, mpz_class unit, int precision,
                         long absolute)
    : prime_(p),
      zero_(zero),
      valuation_(valuation),
      unit_(std::move(unit)),
      precision_(precision),
      absolute_(absolute) {}

PadicNumber PadicNumber::zero(long p, long absolute_precision) {
  return PadicNumber(p, true, 0, 0, 0, std::min(absolute_precision, kExact));
}

PadicNumber PadicNumber::from_unit(long p, long valuation, const mpz_class& unit, int precision) {
  if (precision < 1) throw Error(ErrorCode::RangeError, "relative precision must be >= 1");
  const mpz_class& modulus = prime_power(p, precision);
  mpz_class u;
  mpz_mod(u.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
  if (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(p))) {
    throw Error(ErrorCode::RangeError, "unit part divisible by p");
  }
  return PadicNumber(p, false, valuation, std::move(u), precision, valuation + precision);
}

PadicNumber PadicNumber::from_integer(long p, const mpz_class& n, int precision) {
  if (n == 0) return zero(p);
  const long v = padyn::valuation(n, p);
  mpz_class u;
  mpz_divexact(u.get_mpz_t(), n.get_mpz_t(), prime_power(p, v).get_mpz_t());
  return from_unit(p, v, u, precision);
}

PadicNumber PadicNumber::from_rational(long p, const mpq_class& r, int precision) {
  if (r == 0) return zero(p);
  const long vn = padyn::valuation(mpz_class(r.get_num()), p);
  const long vd = padyn::valuation(mpz_class(r.get_den()), p);
  mpz_class num, den;
  mpz_divexact(num.get_mpz_t(), r.get_num_mpz_t(), prime_power(p, vn).get_mpz_t());
  mpz_divexact(den.get_mpz_t(), r.get_den_mpz_t(), prime_power(p, vd).get_mpz_t());
  const mpz_class& modulus = prime_power(p, precision);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  return from_unit(p, vn - vd, num * inv, precision);
}

PadicNumber PadicNumber::from_digits(long p, long valuation, std::span<const int> digits) {
  if (digits.empty()) throw Error(ErrorCode::RangeError, "no digits");
  if (digits.front() == 0) throw Error(ErrorCode::RangeError, "leading unit digit is zero");
  mpz_class u = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it < 0 || *it >= p) throw Error(ErrorCode::RangeError, "digit out of range");
    u = u * p + *it;
  }
  return from_unit(p, valuation, u, static_cast<int>(digits.size()));
}

long PadicNumber::valuation() const {
  if (zero_) throw Error(ErrorCode::PrecisionExhausted, "valuation of " + to_string());
  return valuation_;
}

long PadicNumber::absolute_precision() const noexcept {
  return zero_ ? absolute_ : valuation_ + precision_;
}

std::vector<int> PadicNumber::digits(int count) const {
  if (zero_) throw Error(ErrorCode::PrecisionExhausted, "digits of zero");
  if (count > precision_) {
    throw Error(ErrorCode::PrecisionExhausted,
                "requested " + std::to_string(count) + " digits of a value known to " +
                    std::to_string(precision_));
  }
  std::vector<int> out;
  out.reserve(static_cast<size_t>(count));
  mpz_class t = unit_;
  for (int i = 0; i < count; ++i) {
    out.push_back(static_cast<int>(mpz_fdiv_q_ui(t.get_mpz_t(), t.get_mpz_t(),
                                                 static_cast<unsigned long>(prime_))));
  }
  return out;
}

int PadicNumber::digit(long i) const {
  if (i >= absolute_precision()) {
    throw Error(ErrorCode::PrecisionExhausted, "digit beyond known precision");
  }
  if (zero_ || i < valuation_) return 0;
  mpz_class t;
  mpz_fdiv_q(t.get_mpz_t(), unit_.get_mpz_t(), prime_power(prime_, i - valuation_).get_mpz_t());
  return static_cast<int>(mpz_fdiv_ui(t.get_mpz_t(), static_cast<unsigned long>(prime_)));
}

mpz_class PadicNumber::residue(long k) const {
  if (!is_integral()) throw Error(ErrorCode::RangeError, "residue of a non-integral value");
  if (k <= 0) return 0;
  if (absolute_precision() < k) {
    throw Error(ErrorCode::PrecisionExhausted, "residue mod p^" + std::to_string(k) +
                                                   " of " + to_string());
  }
  if (zero_ || valuation_ >= k) return 0;
  mpz_class out = unit_ * prime_power(prime_, valuation_);
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), prime_power(prime_, k).get_mpz_t());
  return out;
}

mpq_class PadicNumber::to_rational() const {
  if (zero_) return 0;
  mpq_class out(unit_);
  const mpz_class& scale = prime_power(prime_, std::labs(valuation_));
  if (valuation_ >= 0) {
    out *= mpq_class(scale);
  } else {
    out /= mpq_class(scale);
  }
  return out;
}

PadicNumber PadicNumber::with_precision(int relative) const {
  if (zero_ || relative >= precision_) return *this;
  return from_unit(prime_, valuation_, unit_, relative);
}

PadicNumber PadicNumber::inverse() const {
  if (is_exact_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
  if (zero_) throw Error(ErrorCode::PrecisionExhausted, "inverse of " + to_string());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), prime_power(prime_, precision_).get_mpz_t());
  return PadicNumber(prime_, false, -valuation_, std::move(inv), precision_,
                     -valuation_ + precision_);
}

PadicNumber PadicNumber::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  if (exponent == 0) {
    return from_integer(prime_, 1, zero_ ? kDefaultPrecision : precision_);
  }
  if (zero_) {
    if (is_exact_zero()) return *this;
    return zero(prime_, absolute_ * exponent);
  }
  mpz_class u;
  mpz_powm_ui(u.get_mpz_t(), unit_.get_mpz_t(), static_cast<unsigned long>(exponent),
              prime_power(prime_, precision_).get_mpz_t());
  const long v = valuation_ * exponent;
  return PadicNumber(prime_, false, v, std::move(u), precision_, v + precision_);
}

PadicNumber PadicNumber::operator-() const {
  if (zero_) return *this;
  mpz_class u = prime_power(prime_, precision_) - unit_;
  return PadicNumber(prime_, false, valuation_, std::move(u), precision_, absolute_precision());
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  const long p = a.prime_;
  const long absolute = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.zero_ && b.zero_) return PadicNumber::zero(p, absolute);
  if (a.zero_ || b.zero_) {
    const PadicNumber& x = a.zero_ ? b : a;
    if (absolute >= x.absolute_precision()) return x;
    if (absolute <= x.valuation_) return PadicNumber::zero(p, absolute);
    return x.with_precision(static_cast<int>(absolute - x.valuation_));
  }
  const long vmin = std::min(a.valuation_, b.valuation_);
  const long width = absolute - vmin;
  const mpz_class& modulus = prime_power(p, width);
  mpz_class s = a.unit_ * prime_power(p, a.valuation_ - vmin) +
                b.unit_ * prime_power(p, b.valuation_ - vmin);
  mpz_mod(s.get_mpz_t(), s.get_mpz_t(), modulus.get_mpz_t());
  if (s == 0) return PadicNumber::zero(p, absolute);
  const long k = valuation(s, p);
  mpz_divexact(s.get_mpz_t(), s.get_mpz_t(), prime_power(p, k).get_mpz_t());
  const long v = vmin + k;
  const int r = static_cast<int>(width - k);
  return PadicNumber(p, false, v, std::move(s), r, v + r);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  const long p = a.prime_;
  if (a.zero_ || b.zero_) {
    if (a.is_exact_zero() || b.is_exact_zero()) return PadicNumber::zero(p);
    if (a.zero_ && b.zero_) return PadicNumber::zero(p, a.absolute_ + b.absolute_);
    const PadicNumber& z = a.zero_ ? a : b;
    const PadicNumber& x = a.zero_ ? b : a;
    return PadicNumber::zero(p, z.absolute_ + x.valuation_);
  }
  const int r = std::min(a.precision_, b.precision_);
  mpz_class u = a.unit_ * b.unit_;
  mpz_mod(u.get_mpz_t(), u.get_mpz_t(), prime_power(p, r).get_mpz_t());
  const long v = a.valuation_ + b.valuation_;
  return PadicNumber(p, false, v, std::move(u), r, v + r);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  if (b.is_exact_zero()) throw Error(ErrorCode::DivisionByZero, "division by 0");
  if (b.zero_) throw Error(ErrorCode::PrecisionExhausted, "division by " + b.to_string());
  if (a.zero_) {
    if (a.is_exact_zero()) return a;
    return PadicNumber::zero(a.prime_, a.absolute_ - b.valuation_);
  }
  return a * b.inverse();
}

bool operator==(const PadicNumber& a, const PadicNumber& b) {
  if (a.prime_ != b.prime_) return false;
  return (a - b).is_zero();
}

std::string PadicNumber::to_string() const {
  if (zero_) {
    if (is_exact_zero()) return "0";
    return "O(" + std::to_string(prime_) + "^" + std::to_string(absolute_) + ")";
  }
  const auto ds = digits(precision_);
  std::ostringstream out;
  out << "v:" << valuation_ << " u:";
  if (prime_ <= 36) {
    for (auto it = ds.rbegin(); it != ds.rend(); ++it) out << digit_char(*it);
  } else {
    for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
      if (it != ds.rbegin()) out << ',';
      out << *it;
    }
  }
  return out.str();
}

Norm norm(const PadicNumber& x) {
  if (x.is_zero()) return Norm::of_zero(x.prime());
  return Norm::power(x.prime(), -x.valuation());
}

PadicNumber arith(ArithOp op, const PadicNumber& lhs, const PadicNumber& rhs) {
  PadicNumber out = PadicNumber::zero(lhs.prime());
  switch (op) {
    case ArithOp::Add: out = lhs + rhs; break;
    case ArithOp::Sub: out = lhs - rhs; break;
    case ArithOp::Mul: out = lhs * rhs; break;
    case ArithOp::Div: out = lhs / rhs; break;
    case ArithOp::Pow:
      throw Error(ErrorCode::RangeError, "pow takes an integer exponent; use arith_pow");
  }
  if (out.is_zero() && !out.is_exact_zero()) {
    throw Error(ErrorCode::PrecisionExhausted,
                "result indistinguishable from 0: " + out.to_string());
  }
  return out;
}

PadicNumber arith_pow(const PadicNumber& base, long exponent) {
  PadicNumber out = base.pow(exponent);
  if (out.is_zero() && !out.is_exact_zero()) {
    throw Error(ErrorCode::PrecisionExhausted,
                "result indistinguishable from 0: " + out.to_string());
  }
  return out;
}

PadicNumber parse_padic(long p, std::string_view text, int precision) {
  auto fail = [&](const std::string& why) -> PadicNumber {
    throw Error(ErrorCode::ParseError, "p-adic literal '" + std::string(text) + "': " + why);
  };
  if (text.rfind("v:", 0) != 0) {
    return PadicNumber::from_rational(p, parse_rational(text, "literal"), precision);
  }
  const auto space = text.find(' ');
  if (space == std::string_view::npos) return fail("expected 'v:<int> u:<digits>'");
  std::string_view vpart = text.substr(2, space - 2);
  std::string_view upart = text.substr(space + 1);
  while (!upart.empty() && upart.front() == ' ') upart.remove_prefix(1);
  if (upart.rfind("u:", 0) != 0) return fail("missing 'u:' digits");
  upart.remove_prefix(2);
  long v = 0;
  try {
    size_t used = 0;
    v = std::stol(std::string(vpart), &used);
    if (used != vpart.size()) return fail("bad valuation");
  } catch (const std::logic_error&) {
    return fail("bad valuation");
  }
  std::vector<int> msd_first;
  if (upart.find(',') != std::string_view::npos || p > 36) {
    std::string item;
    std::istringstream in{std::string(upart)};
    while (std::getline(in, item, ',')) {
      try {
        msd_first.push_back(std::stoi(item));
      } catch (const std::logic_error&) {
        return fail("bad digit '" + item + "'");
      }
    }
  } else {
    for (char c : upart) {
      const char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      int d = -1;
      if (lc >= '0' && lc <= '9') d = lc - '0';
      if (lc >= 'a' && lc <= 'z') d = lc - 'a' + 10;
      if (d < 0) return fail(std::string("bad digit '") + c + "'");
      msd_first.push_back(d);
    }
  }
  if (msd_first.empty()) return fail("no digits");
  std::vector<int> lsd_first(msd_first.rbegin(), msd_first.rend());
  for (int d : lsd_first) {
    if (d < 0 || d >= p) return fail("digit out of range for p=" + std::to_string(p));
  }
  if (lsd_first.front() == 0) return fail("last (unit) digit must be nonzero");
  return PadicNumber::from_digits(p, v, lsd_first);
}

// ---------------------------------------------------------------- Extended / projective

const PadicNumber& Extended::value() const {
  if (!value_) throw Error(ErrorCode::RangeError, "value of infinity");
  return *value_;
}

std::string Extended::to_string() const { return value_ ? value_->to_string() : "inf"; }

ProjectivePoint ProjectivePoint::finite(PadicNumber x) {
  ProjectivePoint out(x.prime());
  out.x_ = std::move(x);
  return out;
}

ProjectivePoint ProjectivePoint::infinity(long p) { return ProjectivePoint(p); }

ProjectivePoint ProjectivePoint::from_pair(const PadicNumber& x, const PadicNumber& y) {
  check_same_prime(x, y);
  if (x.is_zero() && y.is_zero()) {
    throw Error(ErrorCode::RangeError, "[0:0] is not a projective point");
  }
  if (y.is_zero()) return infinity(x.prime());
  return finite(x / y);
}

ProjectivePoint ProjectivePoint::from_extended(const Extended& e) {
  return e.is_infinity() ? infinity(e.prime()) : finite(e.value());
}

const PadicNumber& ProjectivePoint::affine() const {
  if (!x_) throw Error(ErrorCode::RangeError, "affine coordinate of infinity");
  return *x_;
}

std::pair<PadicNumber, PadicNumber> ProjectivePoint::unit_coordinates() const {
  const int r = PadicNumber::kDefaultPrecision;
  const PadicNumber one = PadicNumber::from_integer(prime_, 1, r);
  if (!x_) return {one, PadicNumber::zero(prime_)};
  if (!x_->is_zero() && x_->valuation() < 0) return {one, x_->inverse()};
  return {*x_, one};
}

Norm spherical_distance(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.prime() != b.prime()) throw Error(ErrorCode::PrimeMismatch, "spherical_distance");
  const auto [x1, y1] = a.unit_coordinates();
  const auto [x2, y2] = b.unit_coordinates();
  return norm(x1 * y2 - x2 * y1);
}

// ---------------------------------------------------------------- Ball

Ball Ball::residue_class(long p, const mpz_class& residue, long radius_exponent) {
  const int r = static_cast<int>(std::max<long>(radius_exponent, 1)) + 8;
  return Ball{PadicNumber::from_integer(p, residue, r), radius_exponent};
}

bool Ball::contains(const PadicNumber& x) const {
  const PadicNumber d = x - center;
  if (!d.is_zero()) return d.valuation() >= radius_exponent;
  if (d.absolute_precision() >= radius_exponent) return true;
  throw Error(ErrorCode::PrecisionExhausted, "cannot decide membership in " + to_string());
}

std::string Ball::to_string() const {
  return "D(" + center.to_string() + ", " + radius().to_string() + ")";
}

std::string_view to_string(BallRelation r) noexcept {
  switch (r) {
    case BallRelation::Equal: return "Equal";
    case BallRelation::Disjoint: return "Disjoint";
    case BallRelation::AInB: return "AinB";
    case BallRelation::BInA: return "BinA";
  }
  return "?";
}

BallRelation ball_relation(const Ball& a, const Ball& b) {
  if (a.prime() != b.prime()) throw Error(ErrorCode::PrimeMismatch, "ball_relation");
  if (a.radius_exponent >= b.radius_exponent) {
    if (!b.contains(a.center)) return BallRelation::Disjoint;
    return a.radius_exponent == b.radius_exponent ? BallRelation::Equal : BallRelation::AInB;
  }
  return a.contains(b.center) ? BallRelation::BInA : BallRelation::Disjoint;
}

mpz_class random_residue(long p, long k, std::mt19937_64& rng) {
  const mpz_class& modulus = prime_power(p, k);
  const size_t words = mpz_sizeinbase(modulus.get_mpz_t(), 2) / 64 + 2;
  mpz_class acc = 0;
  for (size_t i = 0; i < words; ++i) {
    acc <<= 64;
    const std::uint64_t w = rng();
    acc += mpz_class(static_cast<unsigned long>(w >> 32)) << 32;
    acc += static_cast<unsigned long>(w & 0xffffffffu);
  }
  mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), modulus.get_mpz_t());
  return acc;
}

PadicNumber sample_ball(const Ball& ball, int precision, std::mt19937_64& rng) {
  const long p = ball.prime();
  const mpz_class t = random_residue(p, precision, rng);
  if (t == 0) return ball.center;
  PadicNumber offset = PadicNumber::from_integer(p, t, precision);
  offset = offset * PadicNumber::from_unit(p, ball.radius_exponent, 1, precision);
  return ball.center + offset;
}

}  // namespace padyn
