#include "padyn/integer.hpp"

#include <array>
#include <map>
#include <numeric>
#include <string>

#include "padyn/error.hpp"

namespace padyn {

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 e, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1u) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1u;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++r;
  }
  // This witness set is deterministic for all n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_prime(long p) {
  if (p < 2 || !is_prime(static_cast<u64>(p))) {
    throw Error(ErrorCode::PreconditionViolated, std::to_string(p) + " is not prime");
  }
}

const mpz_class& prime_power(long p, long e) {
  thread_local std::map<std::pair<long, long>, mpz_class> cache;
  auto [it, inserted] = cache.try_emplace({p, e});
  if (inserted) {
    mpz_ui_pow_ui(it->second.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e));
  }
  return it->second;
}

u64 prime_power_u64(long p, int e) {
  u128 value = 1;
  for (int i = 0; i < e; ++i) {
    value *= static_cast<u128>(p);
    if (value >= (static_cast<u128>(1) << 63)) {
      throw Error(ErrorCode::SizeGuard,
                  std::to_string(p) + "^" + std::to_string(e) + " exceeds 63 bits");
    }
  }
  return static_cast<u64>(value);
}

long valuation(const mpz_class& n, long p) {
  if (n == 0) throw Error(ErrorCode::RangeError, "valuation of zero");
  mpz_class t = n;
  long v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

long valuation(const mpq_class& r, long p) {
  if (r == 0) throw Error(ErrorCode::RangeError, "valuation of zero");
  return valuation(mpz_class(r.get_num()), p) - valuation(mpz_class(r.get_den()), p);
}

mpz_class residue(const mpq_class& r, long p, long k) {
  const mpz_class& modulus = prime_power(p, k);
  if (r == 0) return 0;
  if (valuation(r, p) < 0) {
    throw Error(ErrorCode::RangeError, "rational is not a p-adic integer");
  }
  mpz_class den = r.get_den();
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw Error(ErrorCode::InternalInconsistency, "denominator not invertible");
  }
  mpz_class out = r.get_num() * inv;
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

PrimePowerSplit split_prime_power(long n, long p) {
  if (n == 0) throw Error(ErrorCode::RangeError, "cannot split zero");
  PrimePowerSplit out{n, 0};
  while (out.q % p == 0) {
    out.q /= p;
    ++out.m;
  }
  return out;
}

long multiplicative_order(long a, long p) {
  const u64 m = static_cast<u64>(p);
  u64 x = static_cast<u64>(((a % p) + p) % p);
  if (x == 0) throw Error(ErrorCode::RangeError, "order of a non-unit");
  u64 y = x;
  long order = 1;
  while (y != 1) {
    y = mul_mod(y, x, m);
    ++order;
  }
  return order;
}

std::vector<long> primitive_roots(long p) {
  std::vector<long> roots;
  for (long g = 1; g < p; ++g) {
    if (multiplicative_order(g, p) == p - 1) roots.push_back(g);
  }
  return roots;
}

mpq_class parse_rational(std::string_view text, std::string_view flag) {
  auto fail = [&](const char* why) -> mpq_class {
    throw Error(ErrorCode::ParseError, "--" + std::string(flag) + ": '" + std::string(text) +
                                           "' " + why);
  };
  auto digits_only = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!digits_only(num)) return fail("is not a rational literal (expected num/den)");
  if (den.empty() || den.front() == '-' || den.front() == '+' || !digits_only(den)) {
    return fail("has a malformed denominator");
  }
  std::string num_s(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_s, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return fail("has a zero denominator");
  mpq_class out(n, d);
  out.canonicalize();
  return out;
}

}  // namespace padyn
