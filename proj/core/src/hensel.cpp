#include "padyn/hensel.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>

#include "padyn/error.hpp"
#include "padyn/integer.hpp"

namespace padyn {

namespace {

constexpr long kInf = PadicNumber::kExact;
constexpr int kAutoSCap = 512;
constexpr int kMaxIsolationDepth = 64;
constexpr size_t kMaxCandidates = 100000;

long vq(const mpq_class& x, long p) { return x == 0 ? kInf : valuation(x, p); }

long add(long a, long b) { return (a >= kInf || b >= kInf) ? kInf : a + b; }

HenselInequality strict(std::string name, int k, long lhs, long rhs) {
  return {std::move(name), k, lhs, rhs, "<", lhs < kInf && lhs < rhs};
}

struct Derivatives {
  long v_F;
  std::vector<long> v_H;  // v_H[k] = v(H_k(x0)), k = 0..deg
};

Derivatives derivatives_at(const PadicPolynomial& F, const mpz_class& x0) {
  const long p = F.prime();
  const mpq_class x(x0);
  Derivatives d{vq(F.evaluate(x), p), {}};
  for (int k = 0; k <= std::max(F.degree(), 1); ++k) d.v_H.push_back(vq(F.hasse(k).evaluate(x), p));
  return d;
}

HenselReport report_for(const PadicPolynomial& F, const mpz_class& x0, const Derivatives& d,
                        int L, int s) {
  HenselReport r;
  r.x0 = x0;
  r.L = L;
  r.v_F = d.v_F;
  r.v_dF = d.v_H[1];
  r.s = s > 0 ? s : static_cast<int>(std::min<long>(d.v_F, kAutoSCap));
  const long e = r.v_dF;
  const auto H = [&](int k) { return k < static_cast<int>(d.v_H.size()) ? d.v_H[k] : kInf; };

  r.checks.push_back(strict("hl1", L, add(H(L), e), d.v_F));
  bool hl = r.checks.back().holds;
  for (int k = 1; k < L; ++k) {
    r.checks.push_back(strict("hl2", k, add(H(k), e), add(H(k + 1), d.v_F)));
    hl = hl && r.checks.back().holds;
  }

  const long s_val = r.s;
  HenselInequality phl0{"phl0", 0, s_val, d.v_F, "<=", s_val >= 1 && s_val <= d.v_F};
  r.checks.push_back(phl0);
  bool phl = phl0.holds;
  r.checks.push_back(strict("phl1", L, H(L), e >= kInf ? -kInf : s_val - e));
  phl = phl && r.checks.back().holds;
  for (int k = 1; k < L; ++k) {
    long lhs = add(e, H(k));
    if (lhs < kInf) lhs = H(k + 1) >= kInf ? -kInf : lhs - H(k + 1);
    r.checks.push_back(strict("phl2", k, lhs, s_val));
    phl = phl && r.checks.back().holds;
  }

  r.hl_pass = hl;
  r.phl_pass = phl;
  r.pass = hl || phl;
  if (r.pass) {
    const long radius = phl ? s_val - e : std::min<long>(d.v_F, kAutoSCap) - e;
    r.locating_ball = Ball::residue_class(F.prime(), x0, std::max<long>(radius, 0));
  }
  return r;
}

std::string failing(const HenselReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    if (c.holds) continue;
    out << ' ' << c.name;
    if (c.name == "hl2" || c.name == "phl2") out << '[' << c.k << ']';
    out << ": " << (c.lhs >= kInf ? std::string("inf") : std::to_string(c.lhs)) << ' '
        << c.relation << ' ' << (c.rhs >= kInf ? std::string("inf") : std::to_string(c.rhs))
        << " fails;";
  }
  return out.str();
}

mpz_class mod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class eval_mod(const std::vector<mpz_class>& c, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = mod(acc * x + *it, m);
  return acc;
}

long vz(const mpz_class& x, long p, long cap) { return x == 0 ? cap : valuation(x, p); }

struct NewtonResult {
  mpz_class x;
  std::vector<long> progress;
  long v_F;
};

// Integer Newton iteration from c with v(F(c)) > 2 v(F'(c)) = 2e, until
// v(F(x)) >= target + e.
NewtonResult newton(const PadicPolynomial& F, const mpz_class& c, long e, int target) {
  const long p = F.prime();
  const long K = target + e + 4;
  const mpz_class& M = prime_power(p, K + e);
  const auto f = F.reduce(K + e);
  const auto df = F.derivative().reduce(K + e);
  const mpz_class& pe = prime_power(p, e);
  const mpz_class& PK = prime_power(p, K);

  NewtonResult out{mod(c, M), {}, 0};
  long w = vz(eval_mod(f, out.x, M), p, K + e);
  out.progress.push_back(w);
  for (int step = 0; step < 128 && w < target + e; ++step) {
    const mpz_class fx = eval_mod(f, out.x, M);
    const mpz_class dfx = eval_mod(df, out.x, M);
    if (vz(dfx, p, K + e) != e) {
      throw Error(ErrorCode::NoConvergence, "derivative valuation changed during Newton");
    }
    mpz_class u, num, inv;
    mpz_divexact(u.get_mpz_t(), dfx.get_mpz_t(), pe.get_mpz_t());
    mpz_divexact(num.get_mpz_t(), fx.get_mpz_t(), pe.get_mpz_t());
    mpz_invert(inv.get_mpz_t(), u.get_mpz_t(), PK.get_mpz_t());
    out.x = mod(out.x - num * inv, PK);
    const long w_new = vz(eval_mod(f, out.x, M), p, K + e);
    if (w_new <= w || w_new < std::min(2 * (w - e), K + e)) {
      throw Error(ErrorCode::NoConvergence,
                  "Newton step lost quadratic progress: v(F) " + std::to_string(w) + " -> " +
                      std::to_string(w_new));
    }
    w = w_new;
    out.progress.push_back(w);
  }
  if (w < target + e) throw Error(ErrorCode::NoConvergence, "Newton iteration did not converge");
  out.v_F = w;
  return out;
}

}  // namespace

HenselReport check_hensel_hypothesis(const PadicPolynomial& F, const mpz_class& x0, int L, int s) {
  if (!F.has_integral_coefficients()) {
    throw Error(ErrorCode::PreconditionViolated, "F must have coefficients in Z_p");
  }
  if (F.degree() < 1) throw Error(ErrorCode::PreconditionViolated, "F must be nonconstant");
  const Derivatives d = derivatives_at(F, x0);
  if (L > 0) return report_for(F, x0, d, L, s);
  for (int l = 1; l <= F.degree(); ++l) {
    HenselReport r = report_for(F, x0, d, l, s);
    if (r.pass) return r;
  }
  return report_for(F, x0, d, 1, s);
}

HenselCertificate hensel_lift(const PadicPolynomial& F, const mpz_class& x0, int target_precision,
                              int L, int s) {
  if (target_precision < 1) throw Error(ErrorCode::RangeError, "target precision must be >= 1");
  const long p = F.prime();
  HenselReport rep = check_hensel_hypothesis(F, x0, L, s);
  if (!rep.pass) {
    throw Error(ErrorCode::HypothesisFailed,
                "no root certificate at x0=" + x0.get_str() + ":" + failing(rep));
  }
  const long rho = rep.locating_ball->radius_exponent;
  const mpz_class& target_mod = prime_power(p, target_precision);

  mpz_class root;
  std::vector<long> progress;
  if (rep.v_F >= kInf) {
    root = x0;
    progress.push_back(kInf);
  } else {
    // Refine residue classes of the locating ball until Newton applies.
    std::vector<mpz_class> candidates{mod(x0, prime_power(p, rho))};
    long j = rho;
    bool found = false;
    while (!found) {
      for (const auto& c : candidates) {
        const Derivatives d = derivatives_at(F, c);
        const long e = d.v_H[1];
        if (e >= kInf) continue;
        if (d.v_F >= kInf) {
          root = c;
          progress = {kInf};
          found = true;
          break;
        }
        if (d.v_F <= 2 * e) continue;
        NewtonResult nr = newton(F, c, e, target_precision);
        if (mod(nr.x - x0, prime_power(p, std::min<long>(rho, target_precision))) != 0) continue;
        root = nr.x;
        progress = std::move(nr.progress);
        found = true;
        break;
      }
      if (found) break;
      if (j > rho + target_precision + 64 || candidates.empty()) {
        throw Error(ErrorCode::NoConvergence, "could not isolate the root near " + x0.get_str());
      }
      std::vector<mpz_class> next;
      const mpz_class& pj = prime_power(p, j);
      const mpq_class modulus(prime_power(p, j + 1));
      for (const auto& c : candidates) {
        for (long t = 0; t < p; ++t) {
          const mpz_class child = c + pj * t;
          const mpq_class v = F.evaluate(mpq_class(child));
          if (v == 0 || vq(v, p) >= j + 1) next.push_back(child);
        }
      }
      if (next.size() > kMaxCandidates) {
        throw Error(ErrorCode::NoConvergence, "candidate explosion while isolating the root");
      }
      candidates = std::move(next);
      ++j;
    }
  }

  const mpz_class r = mod(root, target_mod);
  const long check_k = std::min<long>(rho, target_precision);
  if (mod(r - x0, prime_power(p, check_k)) != 0) {
    throw Error(ErrorCode::InternalInconsistency, "lifted root left the locating ball");
  }
  const mpq_class fr = F.evaluate(mpq_class(r));
  if (fr != 0 && vq(fr, p) < target_precision) {
    throw Error(ErrorCode::InternalInconsistency, "lifted root fails F(root) = 0 mod p^target");
  }
  PadicNumber value = r == 0 ? PadicNumber::zero(p, target_precision)
                             : PadicNumber::from_integer(
                                   p, r, static_cast<int>(target_precision - valuation(r, p)));
  return HenselCertificate{F.to_string(), std::move(rep), std::move(value), r, target_precision,
                           std::move(progress)};
}

long count_roots_unity_shift(long N, long p) {
  if (p == 2) return 1;
  const long q = split_prime_power(N, p).q;
  const long g = std::gcd(p - 1, q);
  return ((p - 1) / 2) % g == 0 ? g : 0;
}

namespace {

struct Isolation {
  std::vector<HenselCertificate> roots;
  long unresolved = 0;
  /// An integer at which F vanishes exactly, found before isolation ended.
  std::optional<mpz_class> exact;
};

Isolation isolate(const PadicPolynomial& F, const std::vector<long>& seeds, int precision) {
  const long p = F.prime();
  Isolation out;
  std::deque<std::pair<mpz_class, long>> queue;
  for (long r : seeds) {
    const mpq_class v = F.evaluate(mpq_class(r));
    if (v == 0) {
      out.exact = r;
      return out;
    }
    if (vq(v, p) >= 1) queue.emplace_back(mpz_class(r), 1);
  }
  size_t processed = 0;
  while (!queue.empty()) {
    auto [c, j] = queue.front();
    queue.pop_front();
    if (++processed > kMaxCandidates) {
      throw Error(ErrorCode::SizeGuard, "root isolation exceeded the candidate budget");
    }
    const Derivatives d = derivatives_at(F, c);
    const long e = d.v_H[1];
    if (e < kInf && j > e && d.v_F > 2 * e) {
      HenselCertificate cert = hensel_lift(F, c, precision, 1, 0);
      if (mod(cert.root_residue - c, prime_power(p, std::min<long>(j, precision))) == 0) {
        out.roots.push_back(std::move(cert));
      }
      continue;
    }
    if (j >= kMaxIsolationDepth) {
      ++out.unresolved;
      continue;
    }
    const mpz_class& pj = prime_power(p, j);
    for (long t = 0; t < p; ++t) {
      const mpz_class child = c + pj * t;
      const mpq_class v = F.evaluate(mpq_class(child));
      if (v == 0) {
        out.exact = child;
        return out;
      }
      if (vq(v, p) >= j + 1) queue.emplace_back(child, j + 1);
    }
  }
  return out;
}

/// F / (x - c), assuming F(c) = 0.
PadicPolynomial deflate(const PadicPolynomial& F, const mpz_class& c) {
  const auto& a = F.coefficients();
  std::vector<mpq_class> b(a.size() - 1);
  mpq_class carry = 0;
  for (size_t k = a.size() - 1; k >= 1; --k) {
    carry = a[k] + carry * c;
    b[k - 1] = carry;
  }
  return PadicPolynomial(F.prime(), std::move(b));
}

HenselCertificate exact_root(const PadicPolynomial& F, const mpz_class& c, int precision) {
  const long p = F.prime();
  HenselReport rep;
  rep.x0 = c;
  rep.v_F = kInf;
  rep.v_dF = vq(F.derivative().evaluate(mpq_class(c)), p);
  rep.pass = true;
  rep.locating_ball = Ball::residue_class(p, c, precision);
  const mpz_class r = mod(c, prime_power(p, precision));
  PadicNumber value = c == 0 ? PadicNumber::zero(p)
                             : PadicNumber::from_integer(
                                   p, c, static_cast<int>(precision - valuation(c, p)));
  return HenselCertificate{F.to_string(), std::move(rep), std::move(value), r, precision, {kInf}};
}

}  // namespace

std::vector<HenselCertificate> roots_in_classes(const PadicPolynomial& F,
                                                const std::vector<long>& seeds, int precision) {
  if (!F.has_integral_coefficients()) {
    throw Error(ErrorCode::PreconditionViolated, "F must have coefficients in Z_p");
  }
  // Exact integer roots are split off first, so repeated rational roots
  // never reach the isolation step.
  std::vector<HenselCertificate> roots;
  PadicPolynomial G = F;
  Isolation iso;
  while (G.degree() >= 1) {
    iso = isolate(G, seeds, precision);
    if (!iso.exact) break;
    roots.push_back(exact_root(F, *iso.exact, precision));
    while (G.degree() >= 1 && G.evaluate(mpq_class(*iso.exact)) == 0) G = deflate(G, *iso.exact);
    iso = Isolation{};
  }
  for (auto& r : iso.roots) roots.push_back(std::move(r));
  if (iso.unresolved > 0) {
    throw Error(ErrorCode::NoRootInRegion,
                std::to_string(iso.unresolved) +
                    " residue class(es) could not be isolated (repeated root)");
  }
  if (roots.empty()) {
    throw Error(ErrorCode::NoRootInRegion, "F = " + F.to_string() + " has no root in the given classes");
  }
  std::sort(roots.begin(), roots.end(), [](const HenselCertificate& a, const HenselCertificate& b) {
    return a.root_residue < b.root_residue;
  });
  return roots;
}

std::vector<PadicNumber> fixed_points_of_fN(long p, long N, const mpq_class& a, int precision) {
  if (a == 0) throw Error(ErrorCode::ZeroParameter, "a must be nonzero");
  if (N < 2) throw Error(ErrorCode::PreconditionViolated, "N must be >= 2");
  const long v_a = valuation(a, p);
  std::vector<PadicNumber> out;
  if (v_a >= 0) {
    if (p > 100000) throw Error(ErrorCode::SizeGuard, "residue scan limited to p <= 10^5");
    std::vector<mpq_class> c(static_cast<size_t>(N) + 1, mpq_class(0));
    c[0] = 1;
    c[1] = -a;
    c[static_cast<size_t>(N)] += 1;
    std::vector<long> seeds(static_cast<size_t>(p));
    std::iota(seeds.begin(), seeds.end(), 0L);
    for (auto& cert : roots_in_classes(PadicPolynomial(p, std::move(c)), seeds, precision)) {
      out.push_back(std::move(cert.root));
    }
    return out;
  }
  // y = a x turns x^N - a x + 1 into H(y) = (y/a)^N - y + 1, whose roots
  // in the relevant region are y = 1 mod p.
  std::vector<mpq_class> c(static_cast<size_t>(N) + 1, mpq_class(0));
  c[0] = 1;
  c[1] = -1;
  mpq_class lead = 1;
  for (long i = 0; i < N; ++i) lead /= a;
  c[static_cast<size_t>(N)] = lead;
  const int work = precision + static_cast<int>(-v_a);
  const PadicNumber inv_a = PadicNumber::from_rational(p, 1 / a, precision + 8);
  for (auto& cert : roots_in_classes(PadicPolynomial(p, std::move(c)), {1}, work)) {
    out.push_back((cert.root * inv_a).with_precision(precision));
  }
  return out;
}

}  // namespace padyn
