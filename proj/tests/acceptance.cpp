// Acceptance run: one line per criterion, exit 0 when all pass, 3 when a
// cycle violates the lift tables, 1 otherwise.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "padyn/beverton.hpp"
#include "padyn/binomial.hpp"
#include "padyn/error.hpp"
#include "padyn/hensel.hpp"

using namespace padyn;

namespace {

using Clock = std::chrono::steady_clock;
using Coeffs = std::vector<mpq_class>;

struct Outcome {
  bool pass;
  std::string detail;
};

mpq_class q(long n, long d = 1) {
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

mpq_class pw(long p, long e) { return e >= 0 ? mpq_class(oracle::power(p, e)) : q(1) / oracle::power(p, -e); }

Coeffs coeffs(const PadicPolynomial& f) {
  Coeffs c;
  for (int i = 0; i <= f.degree(); ++i) c.push_back(f.coefficient(i));
  return c;
}

/// A polynomial map and the levels at which its cycles are checked in
/// criterion 11.
struct Encounter {
  std::string label;
  Coeffs c;
  long p;
  std::vector<u64> domain_mod_p;
  int levels;
};

std::vector<Encounter> encountered;

void encounter(std::string label, const PadicPolynomial& f, std::vector<u64> dom, int levels) {
  encountered.push_back({std::move(label), coeffs(f), f.prime(), std::move(dom), levels});
}

Outcome c1() {
  long checked = 0, bad = 0;
  for (long p : {2L, 3L, 5L, 7L, 11L}) {
    for (long n = 0; n <= 500; ++n) {
      for (long k = 0; k <= n; ++k, ++checked) {
        if (vp_binomial(n, k, p) != oracle::vp_binomial(n, k, p)) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome c2() {
  long violations = 0, eq_p2 = 0, eq_other = 0, eq_wrong_shape = 0, n_with_eq = 0;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    const auto s = binomial_sweep(p, 300);
    violations += s.violations;
    for (const auto& r : s.equalities) {
      if (p != 2) ++eq_other;
      else ++eq_p2;
      if (r.K != r.N - 2) ++eq_wrong_shape;
    }
  }
  // Independent count: at p = 2, K = N-2, equality holds iff v_2(N-1) = v_2(N) (only N even).
  for (long n = 2; n <= 300; ++n) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, n - 2);
    if (oracle::vp(c, 2) + 1 == oracle::vp(mpz_class(n), 2)) ++n_with_eq;
  }
  const bool pass = violations == 0 && eq_other == 0 && eq_wrong_shape == 0 && eq_p2 == n_with_eq && eq_p2 == 150;
  return {pass, std::to_string(violations) + " violations; equalities only at p=2, K=N-2: " +
                    std::to_string(eq_p2) + " (every even N; odd N is strict, so not one per N)"};
}

Outcome c3() {
  long checked = 0, bad = 0;
  for (long p = 2; p <= 97; ++p) {
    if (!is_prime(static_cast<u64>(p))) continue;
    for (long qq = 1; qq <= 20; ++qq) {
      if (qq % p == 0) continue;
      for (long m = 0, pm = 1; m <= 2; ++m, pm *= p, ++checked) {
        const long N = qq * pm;
        const long brute = oracle::root_count(N, p);
        long formula;
        if (p == 2) formula = 1;
        else {
          const long g = std::gcd(p - 1, qq);
          formula = ((p - 1) / 2) % g == 0 ? g : 0;
        }
        if (count_roots_unity_shift(N, p) != brute || formula != brute) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " (p, N) pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome c4() {
  auto g = oracle::rng(2025);
  long done = 0, bad = 0;
  while (done < 200) {
    const long p = std::vector<long>{3, 5, 7}[done % 3];
    std::uniform_int_distribution<long> n_dist(2, 50), small(1, 500), val(-3, 3), gap(1, 3);
    const long N = n_dist(g);
    const mpq_class a = q(small(g) * (g() % 2 ? 1 : -1)) * pw(p, val(g));
    const long w = val(g);
    const mpq_class omega = pw(p, w) * q(1 + p * small(g), 1 + p * small(g));
    const long t = w + gap(g);
    const mpq_class x = omega + pw(p, t) * small(g), y = omega + pw(p, t) * small(g);
    if (x == y) continue;
    ++done;
    const auto fp = FamilyParams::make(p, N, a);
    const long rhs = oracle::vp(mpz_class(N), p) - oracle::vp(a, p) + (N - 1) * w + oracle::vp(mpq_class(x - y), p);
    mpq_class xn = 1, yn = 1;
    for (long k = 0; k < N; ++k) {
      xn *= x;
      yn *= y;
    }
    const long exact = oracle::vp(mpq_class((xn - yn) / a), p);
    // x^N + 1 cancels N*w digits when w > 0.
    const int prec = 60 + static_cast<int>(N * std::max(w, 0L));
    const auto fx = apply_fN(fp, Extended(PadicNumber::from_rational(p, x, prec)), prec);
    const auto fy = apply_fN(fp, Extended(PadicNumber::from_rational(p, y, prec)), prec);
    const long lib = (fx.value() - fy.value()).valuation();
    if (exact != rhs || lib != rhs) ++bad;
  }
  return {bad == 0, "200 instances, " + std::to_string(bad) + " off the identity (exact and library valuations)"};
}

Outcome c5() {
  const auto fp = FamilyParams::make(5, 2, q(5));
  const auto r = repeller_analysis(fp, 8, 100, 1);
  std::set<long> res;
  for (const auto& w : r.fixed_points) res.insert(w.residue(1).get_si());
  bool ones = r.incidence.size() == 2;
  for (const auto& row : r.incidence) {
    for (int v : row) ones = ones && v == 1;
  }
  // Independent coding: every x mod 5^8 whose first 8 iterates stay in 2, 3 mod 5.
  const long D = 8;
  const u64 M = oracle::power(5, D).get_ui();
  std::set<std::string> words;
  std::vector<std::pair<u64, std::string>> coded;
  for (u64 x = 0; x < M; ++x) {
    std::string w;
    mpz_class y = x;
    for (long k = 0; k < D; ++k) {
      const long s = mpz_class(y % 5).get_si();
      if (s != 2 && s != 3) break;
      w.push_back(s == 2 ? '0' : '1');
      y = (y * y + 1) / 5;
    }
    if (static_cast<long>(w.size()) == D) {
      words.insert(w);
      coded.emplace_back(x, w);
    }
  }
  auto g = oracle::rng(5);
  long shift_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& [x, w] = coded[g() % coded.size()];
    const u64 fx = mpz_class((mpz_class(x) * x + 1) / 5 % (M / 5)).get_ui();
    const auto it = std::find_if(coded.begin(), coded.end(),
                                 [&](const auto& e) { return e.first % (M / 5) == fx; });
    if (it != coded.end() && it->second.substr(0, D - 1) == w.substr(1)) ++shift_ok;
  }
  const bool pass = r.ell == 2 && res == std::set<long>{2, 3} && ones && r.irreducible &&
                    r.cylinders_expected == 256 && r.cylinders_realized == 256 && words.size() == 256 &&
                    r.shift_equivariant && r.shift_checked >= 100 && shift_ok == 100;
  return {pass, "l=" + std::to_string(r.ell) + ", residues {2,3}, cylinders " + std::to_string(r.cylinders_realized) +
                    "/256 (oracle " + std::to_string(words.size()) + "), shift checks " +
                    std::to_string(r.shift_checked) + " + " + std::to_string(shift_ok)};
}

Outcome c6() {
  const auto fp = FamilyParams::make(3, 3, q(1, 9));
  const int work = orbit_working_precision(fp, 60, 40);
  const auto fps = fixed_points_of_fN(3, 3, q(1, 9), work);
  if (fps.size() != 1) return {false, "expected one finite fixed point"};
  const auto& x0 = fps[0];
  // 9x^3 - x + 9 = 0 evaluated on the rational x0 to within its precision.
  const mpq_class r = x0.to_rational();
  const long residual = oracle::vp(mpq_class(9 * r * r * r - r + 9), 3);
  encounter("sy1 g_N on S(0,1)", build_gN(fp), {1, 2}, 4);
  auto g = oracle::rng(6);
  long conv = 0, mono = 0, div = 0;
  for (int i = 0; i < 100; ++i) {
    mpz_class u = random_residue(3, work, g);
    if (u == 0) u = 1;
    const auto o = orbit(fp, Extended(PadicNumber::from_integer(3, u, work)), 60, 40);
    if (o.verdict == OrbitVerdict::ConvergesTo && o.steps <= 60 && o.limit && *o.limit == x0) ++conv;
    if (o.monotone) ++mono;
    std::uniform_int_distribution<long> v(-12, -2);
    const auto z = random_with_valuation(3, v(g), work, g);
    const auto d = orbit(fp, Extended(z), 60, 40);
    if (d.verdict == OrbitVerdict::DivergesToInfinity) ++div;
  }
  const bool pass = x0.valuation() == 2 && residual >= 35 && conv == 100 && mono == 100 && div == 100;
  return {pass, "|x0|=3^-" + std::to_string(x0.valuation()) + ", converged " + std::to_string(conv) +
                    "/100 (monotone " + std::to_string(mono) + "), diverged " + std::to_string(div) +
                    "/100, precision 3^-40"};
}

Outcome c7() {
  std::vector<long> sat(7, 0), viol(7, 0);
  long pairs = 0, disagreements = 0;
  bool whole = false, three = false;
  for (long base : {1L, 4L, 7L, 10L, 13L, 16L, 19L, 22L, 25L}) {
    for (long k : {0L, 1L}) {
      const long a = base + 27 * k;
      for (long N = 2; N <= 20; N += 2) {
        ++pairs;
        const auto pred = dsy3_classify(a, N);
        const auto f = conjugate_to_polynomial(3, N, a);
        for (int item = 1; item <= 6; ++item) (pred.item == item ? sat : viol)[item]++;
        std::vector<bool> got;
        for (const auto& claim : dsy3_claims()) {
          bool all = true;
          for (const auto& s : claim.sets) all = minimal_to_depth(f, s, 5) && all;
          if (all != (pred.item == claim.item)) ++disagreements;
          got.push_back(all);
        }
        if (pred.attracting_fixed_point &&
            classify_cycle(f, {2}, 1).cls != CycleClass::GrowsTails) ++disagreements;
        if (a == 4 && N == 2) whole = got[1];
        if (a == 7 && N == 2) three = got[4];
        if (k == 0 && N <= 6) encounter("dsy3 a=" + std::to_string(a) + " N=" + std::to_string(N), f, {0, 1, 2}, 3);
      }
    }
  }
  bool coverage = true;
  for (int item = 1; item <= 6; ++item) coverage = coverage && sat[item] >= 2 && viol[item] >= 2;
  std::string counts;
  for (int item = 1; item <= 6; ++item) counts += " " + std::to_string(sat[item]);
  return {coverage && disagreements == 0 && whole && three,
          std::to_string(pairs) + " (a, N) pairs x 5 claims to level 5, " + std::to_string(disagreements) +
              " disagreements; satisfying per item:" + counts};
}

Outcome c8() {
  long ok = 0, total = 0;
  std::string fails;
  for (long a : {1L, 3L, 5L}) {
    for (long N = 2; N <= 5; ++N) {
      ++total;
      const auto f = conjugate_to_polynomial(2, N, a);
      encounter("dsy2 a=" + std::to_string(a) + " N=" + std::to_string(N), f, {0, 1}, 6);
      const auto c = classify_cycle(f, {0, 1}, 1);
      auto g = oracle::rng(static_cast<std::uint64_t>(100 * a + N));
      const auto b = grows_tails_basin(f, c, 40, 50, g);
      const mpz_class m = oracle::power(2, 40);
      const Coeffs co = coeffs(f);
      const mpz_class x0 = b.orbit[0];
      const mpz_class y = oracle::reduce(oracle::eval(co, mpq_class(x0)), m);
      const mpz_class z = oracle::reduce(oracle::eval(co, mpq_class(y)), m);
      const bool periodic = z == x0 % m && y != x0 % m;
      if (periodic && b.converged == 50) ++ok;
      else fails += " (a=" + std::to_string(a) + ",N=" + std::to_string(N) + ")";
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                           " parameter sets: f^2(x0)=x0 mod 2^40 and 50/50 samples attracted" + fails};
}

Outcome c9() {
  const auto yes = dsy1_condition_check(FamilyParams::make(5, 5, q(2, 625)));
  bool gens = !yes.generators.empty();
  for (const auto& gc : yes.generators) gens = gens && gc.cond1;
  const auto no_fp = FamilyParams::make(5, 2, q(1, 5));
  const auto no = dsy1_condition_check(no_fp);
  const auto lvl1 = minimality_check(build_gN(no_fp), ResidueSet::sphere(5), 1);
  encounter("dsy1 p=5 N=5", build_gN(FamilyParams::make(5, 5, q(2, 625))), {1, 2, 3, 4}, 3);
  encounter("dsy1 p=5 N=2", build_gN(no_fp), {1, 2, 3, 4}, 3);

  long consistent = 0;
  const std::vector<std::pair<long, mpq_class>> sets{{2, q(1, 2)}, {3, q(3, 4)}, {2, q(3, 8)}, {3, q(1, 4)}, {5, q(5, 16)}};
  for (const auto& [N, a] : sets) {
    const auto fp = FamilyParams::make(2, N, a);
    const auto r = dsy1_condition_check(fp);
    const auto g = build_gN(fp);
    encounter("dsy1 p=2 N=" + std::to_string(N), g, {1}, 5);
    const Coeffs c = coeffs(g);
    const auto t4 = oracle::table(c, 4), t8 = oracle::table(c, 8);
    bool direct_nonminimal;
    std::optional<u64> beta2;
    if (t4[1] % 2 != 1) direct_nonminimal = true;
    else if (!oracle::single_cycle(t4, {1, 3})) direct_nonminimal = true;
    else {
      beta2 = ((t8[t8[1]] + 8 - 1) % 8) / 4;
      direct_nonminimal = *beta2 == 0;
    }
    bool agrees = !r.minimal && direct_nonminimal;
    if (beta2 && r.level2) agrees = agrees && r.level2->beta == *beta2;
    if (agrees) ++consistent;
  }
  const bool pass = yes.cond1 && yes.cond1_orbit && gens && !no.cond1 && !no.cond1_orbit && !lvl1[0].minimal &&
                    consistent == 5;
  return {pass, "cond1(5,5,2/625) arithmetic=" + std::string(yes.cond1 ? "true" : "false") +
                    " orbit=" + (yes.cond1_orbit ? "true" : "false") + " over " + std::to_string(yes.generators.size()) +
                    " generators; cond1(5,2,1/5)=" + (no.cond1 ? "true" : "false") + ", level-1 minimal=" +
                    (lvl1[0].minimal ? "true" : "false") + "; p=2 non-minimal and level-2 consistent " +
                    std::to_string(consistent) + "/5"};
}

Outcome c10() {
  auto g = oracle::rng(10);
  long found = 0, roots_ok = 0, unique_checked = 0, unique_ok = 0;
  while (found < 100) {
    const long p = std::vector<long>{2, 3, 5, 7, 11}[found % 5];
    std::uniform_int_distribution<long> coeff(-30, 30), deg(2, 5), seed(0, p * p * p - 1);
    Coeffs c(deg(g) + 1);
    for (auto& x : c) x = coeff(g);
    if (c.back() == 0) c.back() = 1;
    const long x0 = seed(g);
    c[0] -= oracle::reduce(oracle::eval(c, x0), oracle::power(p, 3));
    const PadicPolynomial F(p, c);
    const auto h = check_hensel_hypothesis(F, x0);
    if (!h.pass || h.v_F >= PadicNumber::kExact) continue;
    ++found;
    const auto cert = hensel_lift(F, x0, 60);
    const bool root = oracle::reduce(oracle::eval(c, mpq_class(cert.root_residue)), oracle::power(p, 60)) == 0;
    if (root && h.locating_ball && h.locating_ball->contains(cert.root)) ++roots_ok;
    if (unique_checked < 20) {
      ++unique_checked;
      const long t = h.locating_ball->radius_exponent;
      const long k = std::max(3L, t);
      const mpz_class pk = oracle::power(p, k), step = oracle::power(p, t);
      bool same = true;
      long seeds = 0;
      for (mpz_class y = mpz_class(x0) % step; y < pk; y += step) {
        const auto hy = check_hensel_hypothesis(F, y);
        if (!hy.pass || hy.v_F >= PadicNumber::kExact) continue;
        ++seeds;
        same = same && hensel_lift(F, y, 60).root_residue == cert.root_residue;
      }
      if (same && seeds >= 1) ++unique_ok;
    }
  }
  return {roots_ok == 100 && unique_ok == 20,
          std::to_string(roots_ok) + "/100 roots with F(root)=0 mod p^60 in the locating ball; unique in ball " +
              std::to_string(unique_ok) + "/20"};
}

Outcome c11(bool& inconsistent) {
  long cycles = 0;
  std::string first;
  for (const auto& e : encountered) {
    oracle::Dyn ref(e.c, e.p);
    const PadicPolynomial f(e.p, e.c);
    for (int n = 1; n <= e.levels; ++n) {
      const u64 pn = oracle::power(e.p, n).get_ui();
      std::vector<u64> dom;
      for (u64 x = 0; x < pn; ++x) {
        if (std::find(e.domain_mod_p.begin(), e.domain_mod_p.end(), x % e.p) != e.domain_mod_p.end()) dom.push_back(x);
      }
      for (const auto& cyc : oracle::cycles(ref.at(n), dom)) {
        ++cycles;
        std::string why;
        try {
          const auto lib = classify_cycle(f, cyc, n);
          const auto lifts = lift_cycles(f, lib);
          why = oracle::lift_violation(ref, n, cyc);
          size_t total = 0;
          for (const auto& l : lifts.lifts) total += l.length();
          if (why.empty() && total != [&] {
                size_t s = 0;
                for (const auto& l : ref.lifts(n, cyc)) s += l.size();
                return s;
              }())
            why = "library lifts differ from the level table";
          if (why.empty() && lib.cls == CycleClass::Grows && e.p >= 5 && !grows_forever(lib, e.p))
            why = "growing cycle at p >= 5 not certified to grow forever";
        } catch (const Error& err) {
          why = err.what();
        }
        if (!why.empty()) {
          inconsistent = true;
          if (first.empty()) first = e.label + " level " + std::to_string(n) + ": " + why;
        }
      }
    }
  }
  return {!inconsistent, std::to_string(cycles) + " cycles from " + std::to_string(encountered.size()) +
                             " maps checked against the lift table" + (first.empty() ? "" : "; first: " + first)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  bool inconsistent = false;
  const std::vector<Criterion> criteria{
      {"1 Kummer vs Legendre, p<=11, N<=500", 30, c1},
      {"2 binomial inequality sweep, p<=13, N<=300", 60, c2},
      {"3 roots of x^N+1 mod p, p<=97, q<=20, m<=2", 0, c3},
      {"4 chordal expansion identity, 200 instances", 0, c4},
      {"5 full-shift repeller (5, 2, 5), depth 8", 30, c5},
      {"6 sy1 convergence/divergence (3, 3, 1/9)", 0, c6},
      {"7 dsy3 concordance to level 5", 60, c7},
      {"8 dsy2 periodic point and basin, p=2", 0, c8},
      {"9 dsy1 condition engine", 0, c9},
      {"10 Hensel battery, 100 certificates", 0, c10},
      {"11 lift-table self-consistency", 0, [&] { return c11(inconsistent); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool pass = o.pass;
    std::string timing = std::to_string(secs).substr(0, std::to_string(secs).find('.') + 3) + " s";
    if (c.limit_s > 0) {
      timing += " (limit " + std::to_string(static_cast<int>(c.limit_s)) + " s)";
      pass = pass && secs < c.limit_s;
    }
    std::printf("[%s] criterion %s: %s; %s\n", pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
    if (!pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  if (inconsistent) return 3;
  return failed == 0 ? 0 : 1;
}
