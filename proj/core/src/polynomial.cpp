#include "padyn/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "padyn/error.hpp"

namespace padyn {

PadicPolynomial::PadicPolynomial(long p, std::vector<mpq_class> coefficients)
    : prime_(p), coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PadicPolynomial PadicPolynomial::monomial(long p, const mpq_class& c, int degree) {
  std::vector<mpq_class> cs(static_cast<size_t>(degree) + 1, mpq_class(0));
  cs.back() = c;
  return PadicPolynomial(p, std::move(cs));
}

PadicPolynomial PadicPolynomial::parse(long p, std::string_view text, std::string_view flag) {
  std::vector<mpq_class> cs;
  size_t start = 0;
  while (true) {
    const size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    cs.push_back(parse_rational(item, flag));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return PadicPolynomial(p, std::move(cs));
}

mpq_class PadicPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

bool PadicPolynomial::has_integral_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const mpq_class& c) {
    return mpz_divisible_ui_p(c.get_den_mpz_t(), static_cast<unsigned long>(prime_)) == 0;
  });
}

long PadicPolynomial::min_valuation() const {
  long out = PadicNumber::kExact;
  for (const auto& c : coeffs_) {
    if (c != 0) out = std::min(out, valuation(c, prime_));
  }
  return out;
}

mpq_class PadicPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PadicNumber PadicPolynomial::evaluate(const PadicNumber& x) const {
  const int r = (x.is_zero() ? PadicNumber::kDefaultPrecision : x.precision()) + 32;
  PadicNumber acc = PadicNumber::zero(prime_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + PadicNumber::from_rational(prime_, *it, r);
  }
  return acc;
}

PadicPolynomial PadicPolynomial::derivative() const { return hasse(1); }

PadicPolynomial PadicPolynomial::hasse(int k) const {
  if (k == 0) return *this;
  std::vector<mpq_class> out;
  for (int i = k; i <= degree(); ++i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(k));
    out.push_back(coeffs_[static_cast<size_t>(i)] * mpq_class(binom));
  }
  return PadicPolynomial(prime_, std::move(out));
}

PadicPolynomial PadicPolynomial::compose(const PadicPolynomial& inner) const {
  PadicPolynomial acc(prime_, {});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner + PadicPolynomial(prime_, {*it});
  }
  return acc;
}

PadicPolynomial operator+(const PadicPolynomial& a, const PadicPolynomial& b) {
  std::vector<mpq_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()), mpq_class(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return PadicPolynomial(a.prime_, std::move(out));
}

PadicPolynomial operator-(const PadicPolynomial& a, const PadicPolynomial& b) {
  return a + mpq_class(-1) * b;
}

PadicPolynomial operator*(const PadicPolynomial& a, const PadicPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return PadicPolynomial(a.prime_, {});
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PadicPolynomial(a.prime_, std::move(out));
}

PadicPolynomial operator*(const mpq_class& c, const PadicPolynomial& f) {
  std::vector<mpq_class> out = f.coeffs_;
  for (auto& x : out) x *= c;
  return PadicPolynomial(f.prime_, std::move(out));
}

bool operator==(const PadicPolynomial& a, const PadicPolynomial& b) {
  return a.prime_ == b.prime_ && a.coeffs_ == b.coeffs_;
}

std::vector<mpz_class> PadicPolynomial::reduce(long k) const {
  if (!has_integral_coefficients()) {
    throw Error(ErrorCode::PreconditionViolated,
                "polynomial " + to_string() + " has a coefficient outside Z_" +
                    std::to_string(prime_));
  }
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(residue(c, prime_, k));
  return out;
}

std::string PadicPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ',';
    out << coeffs_[i].get_str();
  }
  return out.str();
}

// ---------------------------------------------------------------- ModularPolynomial

ModularPolynomial::ModularPolynomial(const PadicPolynomial& f, int level)
    : modulus_(prime_power_u64(f.prime(), level)), level_(level) {
  for (const auto& c : f.reduce(level)) coeffs_.push_back(c.get_ui());
}

u64 ModularPolynomial::operator()(u64 x) const {
  u64 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = mul_mod(acc, x, modulus_) + *it;
    if (acc >= modulus_) acc -= modulus_;
  }
  return acc;
}

// ---------------------------------------------------------------- JetEvaluator

JetEvaluator::JetEvaluator(const PadicPolynomial& f, long k)
    : prime_(f.prime()),
      level_(k),
      modulus_(prime_power(f.prime(), k)),
      f_(f.reduce(k)),
      d1_(f.derivative().reduce(k)),
      half_d2_(f.hasse(2).reduce(k)) {}

mpz_class JetEvaluator::eval(const std::vector<mpz_class>& c, const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + *it;
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), modulus_.get_mpz_t());
  }
  return acc;
}

Jet JetEvaluator::start(const mpz_class& x) const {
  mpz_class v;
  mpz_mod(v.get_mpz_t(), x.get_mpz_t(), modulus_.get_mpz_t());
  return Jet{v, 1, 0};
}

Jet JetEvaluator::step(const Jet& g) const {
  const mpz_class fv = eval(f_, g.value);
  const mpz_class f1 = eval(d1_, g.value);
  const mpz_class f2 = eval(half_d2_, g.value);
  Jet out{fv, f1 * g.d1, f2 * g.d1 * g.d1 + f1 * g.half_d2};
  mpz_mod(out.d1.get_mpz_t(), out.d1.get_mpz_t(), modulus_.get_mpz_t());
  mpz_mod(out.half_d2.get_mpz_t(), out.half_d2.get_mpz_t(), modulus_.get_mpz_t());
  return out;
}

Jet JetEvaluator::iterate(const mpz_class& x, long iterations) const {
  Jet j = start(x);
  for (long i = 0; i < iterations; ++i) j = step(j);
  return j;
}

mpz_class JetEvaluator::value(const mpz_class& x) const { return eval(f_, x); }

}  // namespace padyn
