#pragma once

// Integer and rational helpers shared by every module: prime-power
// bookkeeping, modular arithmetic on 64-bit residues, and parsing of the
// "num/den" literals accepted everywhere a parameter of Q_p is expected.

#include <cstdint>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace padyn {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

/// Deterministic primality for 64-bit inputs.
bool is_prime(u64 n);

/// Throws PreconditionViolated unless p is prime.
void require_prime(long p);

/// p^e as a big integer; e >= 0. Small powers are cached per thread.
const mpz_class& prime_power(long p, long e);

/// p^e as a machine word. Throws SizeGuard if it does not fit below 2^63.
u64 prime_power_u64(long p, int e);

/// v_p(n) for n != 0.
long valuation(const mpz_class& n, long p);

/// v_p(r) for r != 0.
long valuation(const mpq_class& r, long p);

/// r mod p^k for r with v_p(r) >= 0, as an integer in [0, p^k).
mpz_class residue(const mpq_class& r, long p, long k);

/// N = q * p^m with gcd(q, p) = 1.
struct PrimePowerSplit {
  long q;
  int m;
};
PrimePowerSplit split_prime_power(long n, long p);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 e, u64 m);

/// Order of a in (Z/pZ)^*; a must be a unit mod p.
long multiplicative_order(long a, long p);

/// All generators of (Z/pZ)^*, ascending.
std::vector<long> primitive_roots(long p);

/// "num/den" with optional sign, or a bare integer. den must be nonzero.
/// Throws ParseError with `flag` in the message on malformed input.
mpq_class parse_rational(std::string_view text, std::string_view flag = "value");

}  // namespace padyn
