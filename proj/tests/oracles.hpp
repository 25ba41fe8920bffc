#pragma once

// Independent reference computations. Nothing here calls into padyn, so a
// bug in the library cannot be mirrored by the oracle.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline long vp_factorial(long n, long p) {
  long v = 0;
  for (long q = p; q <= n; q *= p) {
    v += n / q;
    if (q > n / p) break;
  }
  return v;
}

inline long vp_binomial(long n, long k, long p) {
  return vp_factorial(n, p) - vp_factorial(k, p) - vp_factorial(n - k, p);
}

inline long vp(mpz_class n, long p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline long vp(const mpq_class& r, long p) { return vp(r.get_num(), p) - vp(r.get_den(), p); }

inline mpz_class power(long p, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

inline long modpow(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = static_cast<long>((__int128)r * b % m);
    b = static_cast<long>((__int128)b * b % m);
    e >>= 1;
  }
  return r;
}

/// Solutions of x^N + 1 = 0 mod p by exhaustion.
inline long root_count(long N, long p) {
  long c = 0;
  for (long x = 0; x < p; ++x) {
    if ((modpow(x, N, p) + 1) % p == 0) ++c;
  }
  return c;
}

/// Horner evaluation of sum c_i x^i with rational coefficients.
inline mpq_class eval(const std::vector<mpq_class>& c, const mpq_class& x) {
  mpq_class r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

/// r mod m for r with denominator prime to m.
inline mpz_class reduce(const mpq_class& r, const mpz_class& m) {
  mpz_class inv;
  mpz_class den = r.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) return -1;
  mpz_class out = r.get_num() * inv % m;
  if (out < 0) out += m;
  return out;
}

/// f mod m as a lookup table on 0..m-1.
inline std::vector<std::uint64_t> table(const std::vector<mpq_class>& c, std::uint64_t m) {
  std::vector<std::uint64_t> t(m);
  const mpz_class mm(static_cast<unsigned long>(m));
  for (std::uint64_t x = 0; x < m; ++x) {
    t[x] = reduce(eval(c, mpq_class(static_cast<unsigned long>(x))), mm).get_ui();
  }
  return t;
}

/// Cycles of the functional graph of t restricted to the forward-closed set
/// `domain`. Each cycle is returned starting at its smallest element.
inline std::vector<std::vector<std::uint64_t>> cycles(const std::vector<std::uint64_t>& t,
                                                      const std::vector<std::uint64_t>& domain) {
  std::map<std::uint64_t, int> state;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t s : domain) {
    if (state[s] != 0) continue;
    std::vector<std::uint64_t> path;
    std::uint64_t x = s;
    while (state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = t[x];
    }
    if (state[x] == 1) {
      std::vector<std::uint64_t> cyc;
      auto it = std::find(path.begin(), path.end(), x);
      cyc.assign(it, path.end());
      std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
      out.push_back(cyc);
    }
    for (auto y : path) state[y] = 2;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Whether t permutes `domain` as one cycle.
inline bool single_cycle(const std::vector<std::uint64_t>& t, const std::vector<std::uint64_t>& domain) {
  if (domain.empty()) return false;
  std::set<std::uint64_t> dom(domain.begin(), domain.end());
  std::uint64_t x = domain.front();
  for (size_t i = 0; i < domain.size(); ++i) {
    x = t[x];
    if (!dom.count(x)) return false;
    if (x == domain.front() && i + 1 < domain.size()) return false;
  }
  return x == domain.front();
}

enum class Class { Grows, Splits, GrowsTails, PartiallySplits };

/// A polynomial map with integral coefficients and its tables mod p^n.
class Dyn {
 public:
  Dyn(std::vector<mpq_class> c, long p) : c_(std::move(c)), p_(p) {
    for (size_t i = 1; i < c_.size(); ++i) d_.push_back(c_[i] * static_cast<long>(i));
  }

  long prime() const { return p_; }

  const std::vector<std::uint64_t>& at(int n) {
    auto it = tables_.find(n);
    if (it == tables_.end()) it = tables_.emplace(n, table(c_, power(p_, n).get_ui())).first;
    return it->second;
  }

  struct Verdict {
    std::uint64_t alpha, beta;
    Class cls;
  };

  /// alpha = (f^k)'(x_1) mod p, beta = (f^k(x_1) - x_1) / p^n mod p.
  Verdict classify(int n, const std::vector<std::uint64_t>& cycle) {
    const std::uint64_t pn = power(p_, n).get_ui(), pn1 = pn * p_;
    const auto& t = at(n + 1);
    std::uint64_t y = cycle.front();
    for (size_t i = 0; i < cycle.size(); ++i) y = t[y];
    const std::uint64_t beta = ((y + pn1 - cycle.front()) % pn1) / pn;
    mpz_class alpha = 1;
    for (auto x : cycle) alpha = alpha * reduce(eval(d_, mpq_class(static_cast<unsigned long>(x))), p_) % p_;
    const std::uint64_t a = alpha.get_ui();
    Class cls = Class::PartiallySplits;
    if (a == 0) cls = Class::GrowsTails;
    else if (a == 1) cls = beta == 0 ? Class::Splits : Class::Grows;
    return {a, beta, cls};
  }

  /// Cycles of f mod p^(n+1) lying over `cycle`.
  std::vector<std::vector<std::uint64_t>> lifts(int n, const std::vector<std::uint64_t>& cycle) {
    const std::uint64_t pn = power(p_, n).get_ui();
    std::vector<std::uint64_t> over;
    for (auto x : cycle) {
      for (long j = 0; j < p_; ++j) over.push_back(x + j * pn);
    }
    std::sort(over.begin(), over.end());
    return cycles(at(n + 1), over);
  }

 private:
  std::vector<mpq_class> c_, d_;
  long p_;
  std::map<int, std::vector<std::uint64_t>> tables_;
};

/// The lift table for a classified cycle of length k: lengths of the
/// lifts, and which classes they may take.
inline std::string lift_violation(Dyn& f, int n, const std::vector<std::uint64_t>& cycle) {
  const long p = f.prime();
  const auto v = f.classify(n, cycle);
  const auto ls = f.lifts(n, cycle);
  const size_t k = cycle.size();
  std::vector<size_t> lengths;
  for (const auto& l : ls) lengths.push_back(l.size());
  std::sort(lengths.begin(), lengths.end());
  switch (v.cls) {
    case Class::Grows:
      if (lengths != std::vector<size_t>{k * p}) return "growing cycle did not lift to one cycle of length pk";
      break;
    case Class::Splits:
      if (lengths != std::vector<size_t>(p, k)) return "splitting cycle did not lift to p cycles of length k";
      break;
    case Class::GrowsTails:
      if (lengths != std::vector<size_t>{k}) return "grows-tails cycle did not have a single lift";
      if (f.classify(n + 1, ls[0]).cls != Class::GrowsTails) return "lift of a grows-tails cycle changed class";
      break;
    case Class::PartiallySplits: {
      size_t d = 1;
      for (std::uint64_t x = v.alpha; x != 1; x = x * v.alpha % p) ++d;
      for (const auto& l : ls) {
        const auto c = f.classify(n + 1, std::vector<std::uint64_t>(l.begin(), l.end()));
        if (l.size() == k && c.cls != Class::PartiallySplits) return "same-length lift does not partially split";
        if (l.size() != k && l.size() != k * d) return "lift length is neither k nor kd";
        if (l.size() == k * d && c.cls != Class::Grows && c.cls != Class::Splits)
          return "long lift neither grows nor splits";
      }
      break;
    }
  }
  if (v.cls == Class::Grows || v.cls == Class::Splits) {
    for (const auto& l : ls) {
      const auto c = f.classify(n + 1, l).cls;
      if (c != Class::Grows && c != Class::Splits) return "lift of a grows/splits cycle neither grows nor splits";
    }
  }
  if (v.cls == Class::Grows && (p >= 5 || (p == 3 && n >= 2))) {
    if (f.classify(n + 1, ls[0]).cls != Class::Grows) return "growing cycle has a non-growing lift";
  }
  return {};
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace oracle
