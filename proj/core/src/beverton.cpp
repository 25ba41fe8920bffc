#include "padyn/beverton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "padyn/error.hpp"
#include "padyn/hensel.hpp"
#include "padyn/integer.hpp"

namespace padyn {

namespace {

mpz_class mod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class inverse_mod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorCode::InternalInconsistency, "non-invertible residue");
  }
  return r;
}

mpq_class p_power(long p, long e) {
  return e >= 0 ? mpq_class(prime_power(p, e)) : mpq_class(1, prime_power(p, -e));
}

bool has_sphere(const FamilyParams& fp) { return fp.v_a < 0 && (-fp.v_a) % (fp.N - 1) == 0; }

void require_sphere(const FamilyParams& fp, const char* what) {
  if (!has_sphere(fp)) {
    throw Error(ErrorCode::PreconditionViolated,
                std::string(what) + " requires |a|_p > 1 and (N-1) | v_p(a)");
  }
}

/// p-adic distance exponent of x - t, or the known absolute bound when the
/// difference vanishes at working precision.
long distance_exponent(const PadicNumber& x, const PadicNumber& t) {
  const PadicNumber d = x - t;
  return d.is_zero() ? d.absolute_precision() : d.valuation();
}

}  // namespace

FamilyParams FamilyParams::make(long p, long N, const mpq_class& a) {
  if (p < 2 || !is_prime(static_cast<u64>(p))) {
    throw Error(ErrorCode::PreconditionViolated, "p = " + std::to_string(p) + " is not prime");
  }
  if (N < 2) throw Error(ErrorCode::PreconditionViolated, "N must be >= 2");
  if (a == 0) throw Error(ErrorCode::ZeroParameter, "a must be nonzero");
  FamilyParams fp;
  fp.p = p;
  fp.N = N;
  const auto split = split_prime_power(N, p);
  fp.q = split.q;
  fp.m = split.m;
  fp.a = a;
  fp.a.canonicalize();
  fp.v_a = valuation(fp.a, p);
  const mpq_class unit = fp.a / p_power(p, fp.v_a);
  const mpz_class r2 = residue(unit, p, 2);
  fp.a0 = mpz_class(r2 % p).get_si();
  fp.a1 = mpz_class(r2 / p).get_si();
  return fp;
}

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::SY1: return "SY1";
    case Regime::SY1EmptySphere: return "SY1-EmptySphere";
    case Regime::SY2i: return "SY2i";
    case Regime::SY2ii: return "SY2ii";
    case Regime::SY3i: return "SY3i";
    case Regime::SY3ii: return "SY3ii";
    case Regime::SY3iii: return "SY3iii";
    case Regime::SY3iv: return "SY3iv";
    case Regime::SY4: return "SY4";
  }
  return "?";
}

std::string_view to_string(OrbitVerdict v) noexcept {
  switch (v) {
    case OrbitVerdict::DivergesToInfinity: return "DivergesToInfinity";
    case OrbitVerdict::ConvergesTo: return "ConvergesTo";
    case OrbitVerdict::EntersSphere: return "EntersSphere";
    case OrbitVerdict::Undecided: return "Undecided";
  }
  return "?";
}

RegimeVerdict classify_regime(const FamilyParams& fp) {
  RegimeVerdict r{Regime::SY4, std::nullopt, std::nullopt, std::nullopt, {}};
  const long p = fp.p;
  if (fp.v_a < 0) {
    if (has_sphere(fp)) {
      r.regime = Regime::SY1;
      r.sphere_exponent = -fp.v_a / (fp.N - 1);
      r.notes.push_back("S(0, p^" + std::to_string(*r.sphere_exponent) +
                        ") is invariant and conjugate to (S(0,1), g_N)");
    } else {
      r.regime = Regime::SY1EmptySphere;
      r.notes.push_back("(N-1) does not divide v_p(a): the critical sphere is empty");
    }
    return r;
  }
  if (fp.v_a == 0) {
    r.notes.push_back("every x outside Z_p diverges");
    return r;
  }
  if (p >= 3) {
    const long g = std::gcd(p - 1, fp.q);
    if (((p - 1) / 2) % g == 0 && fp.v_a > fp.m) {
      r.regime = Regime::SY2i;
      r.ell = g;
      if (fp.v_a > 2 * fp.m) {
        r.notes.push_back("|a|_p < |N|_p^2: l = gcd(p-1, q) and K_f = A_f");
      } else {
        r.notes.push_back("|N|_p^2 <= |a|_p < |N|_p: l is the number of fixed points in S(0,1)");
      }
      if (g == 1) r.notes.push_back("l = 1: the repeller is a single fixed point");
    } else {
      r.regime = Regime::SY2ii;
      r.notes.push_back("every finite point diverges");
    }
    return r;
  }
  r.k = fp.v_a;
  if (fp.N % 2 == 1) {
    r.regime = Regime::SY3i;
  } else if (fp.v_a >= 2) {
    r.regime = Regime::SY3ii;
  } else if (fp.m >= 2) {
    r.regime = Regime::SY3iii;
  } else {
    r.regime = Regime::SY3iv;
    r.notes.push_back("S(0,1) is conjugate to (Z_2, h_N) by x -> (x-1)/2");
  }
  return r;
}

PadicPolynomial conjugate_to_polynomial(long p, long N, const mpq_class& a) {
  if (a == 0) throw Error(ErrorCode::ZeroParameter, "a must be nonzero");
  if (N < 2) throw Error(ErrorCode::PreconditionViolated, "N must be >= 2");
  std::vector<mpq_class> c(static_cast<size_t>(N) + 1, mpq_class(0));
  c.front() = 1 / a;
  c.back() = 1 / a;
  return PadicPolynomial(p, std::move(c));
}

Extended apply_fN(const FamilyParams& fp, const Extended& x, int precision) {
  if (x.is_infinity()) return x;
  const int cp = precision + 64;
  const PadicNumber one = PadicNumber::from_integer(fp.p, 1, cp);
  const PadicNumber a = PadicNumber::from_rational(fp.p, fp.a, cp);
  return Extended((x.value().pow(fp.N) + one) / a);
}

Extended apply_phiN(const FamilyParams& fp, const Extended& z, int precision) {
  const int cp = precision + 64;
  const PadicNumber a = PadicNumber::from_rational(fp.p, fp.a, cp);
  if (z.is_infinity()) return Extended(a);
  const PadicNumber zn = z.value().pow(fp.N);
  const PadicNumber den = zn + PadicNumber::from_integer(fp.p, 1, cp);
  if (den.is_exact_zero()) return Extended::infinity(fp.p);
  if (den.is_zero()) {
    throw Error(ErrorCode::PrecisionExhausted, "z^N + 1 vanishes at working precision");
  }
  return Extended(a * zn / den);
}

PadicPolynomial build_gN(const FamilyParams& fp) {
  require_sphere(fp, "g_N");
  const long s = -fp.v_a / (fp.N - 1);
  const mpq_class abs_a = p_power(fp.p, -fp.v_a);
  std::vector<mpq_class> c(static_cast<size_t>(fp.N) + 1, mpq_class(0));
  c.back() = 1 / (fp.a * abs_a);
  c.front() = mpq_class(prime_power(fp.p, s)) / fp.a;
  PadicPolynomial g(fp.p, std::move(c));
  if (!g.has_integral_coefficients()) {
    throw Error(ErrorCode::InternalInconsistency, "g_N has a non-integral coefficient");
  }
  return g;
}

PadicPolynomial build_hN(const FamilyParams& fp) {
  if (fp.p != 2 || fp.v_a != 1 || fp.m != 1) {
    throw Error(ErrorCode::PreconditionViolated, "h_N requires p = 2, |a|_2 = 1/2, |N|_2 = 1/2");
  }
  const PadicPolynomial base(2, {mpq_class(1), mpq_class(2)});
  PadicPolynomial power(2, {mpq_class(1)});
  for (long i = 0; i < fp.N; ++i) power = power * base;
  PadicPolynomial h = mpq_class(1) / (2 * fp.a) *
                      (power + PadicPolynomial(2, {mpq_class(1) - fp.a}));
  if (!h.has_integral_coefficients()) {
    throw Error(ErrorCode::InternalInconsistency, "h_N has a non-integral coefficient");
  }
  return h;
}

int orbit_working_precision(const FamilyParams& fp, int max_iter, int precision) {
  return precision + max_iter * static_cast<int>(std::max(1L, std::labs(fp.v_a))) + 8;
}

OrbitReport orbit(const FamilyParams& fp, const Extended& x0, int max_iter, int precision,
                  const std::vector<PadicNumber>* targets) {
  std::vector<PadicNumber> fixed;
  if (targets == nullptr) {
    try {
      fixed = fixed_points_of_fN(fp.p, fp.N, fp.a, precision + 16);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoRootInRegion && e.code() != ErrorCode::SizeGuard) throw;
    }
    targets = &fixed;
  }
  const Regime regime = classify_regime(fp).regime;
  const int work = orbit_working_precision(fp, max_iter, precision);

  OrbitReport r;
  std::vector<std::vector<long>> dist(targets->size());
  Extended x = x0;
  for (int step = 0;; ++step) {
    r.steps = step;
    if (x.is_infinity()) {
      r.valuations.push_back(std::nullopt);
      r.verdict = OrbitVerdict::DivergesToInfinity;
      r.reason = "reached infinity";
      return r;
    }
    const PadicNumber& v = x.value();
    const long val = v.is_zero() ? PadicNumber::kExact : v.valuation();
    if (v.is_zero() && !v.is_exact_zero()) {
      r.valuations.push_back(v.absolute_precision());
    } else {
      r.valuations.push_back(val);
    }
    for (size_t t = 0; t < targets->size(); ++t) {
      const long d = distance_exponent(v, (*targets)[t]);
      dist[t].push_back(d);
      if (d >= precision) {
        r.verdict = OrbitVerdict::ConvergesTo;
        r.limit = (*targets)[t];
        r.distances = dist[t];
        r.monotone = std::is_sorted(dist[t].begin(), dist[t].end());
        r.reason = "within p^-" + std::to_string(precision) + " of a known periodic point";
        return r;
      }
    }
    if (v.is_zero() && !v.is_exact_zero()) {
      r.reason = "precision exhausted";
      return r;
    }
    if (!v.is_zero()) {
      if (fp.v_a < 0 && (fp.N - 1) * val < fp.v_a) {
        r.verdict = OrbitVerdict::DivergesToInfinity;
        r.reason = "|x|^(N-1) > |a|";
        return r;
      }
      if (fp.v_a >= 0 && val <= -1) {
        r.verdict = OrbitVerdict::DivergesToInfinity;
        r.reason = "|x| >= p";
        return r;
      }
      if ((regime == Regime::SY1 && (fp.N - 1) * val == fp.v_a) ||
          (regime == Regime::SY3iv && val == 0)) {
        r.verdict = OrbitVerdict::EntersSphere;
        r.reason = "entered the invariant sphere";
        return r;
      }
      if (v.precision() < 2) {
        r.reason = "precision exhausted";
        return r;
      }
    }
    if (step == max_iter) break;
    x = apply_fN(fp, x, work);
  }
  r.reason = "iteration budget reached";
  return r;
}

std::vector<long> sphere_level1_map(const FamilyParams& fp) {
  require_sphere(fp, "sphere_level1_map");
  if (fp.p < 3) throw Error(ErrorCode::PreconditionViolated, "sphere_level1_map requires p >= 3");
  const u64 p = static_cast<u64>(fp.p);
  const u64 inv = pow_mod(static_cast<u64>(fp.a0), p - 2, p);
  std::vector<long> map(p, 0);
  for (u64 j = 1; j < p; ++j) {
    map[j] = static_cast<long>(mul_mod(inv, pow_mod(j, static_cast<u64>(fp.N), p), p));
  }
  return map;
}

namespace {

struct Coder {
  long p;
  long N;
  long v_a;
  /// Residues mod p of the fixed points, in symbol order.
  std::vector<long> symbols;
  /// Unit part of a, mod p^(working precision).
  mpz_class unit;

  /// Symbols of x known mod p^known, until the digits run out; nullopt if
  /// the orbit visibly leaves the disks.
  std::optional<std::string> word(mpz_class y, long known) const {
    std::string w;
    while (known >= 1) {
      const long r = mpz_class(y % p).get_si();
      const auto it = std::find(symbols.begin(), symbols.end(), r);
      if (it == symbols.end()) return std::nullopt;
      w.push_back(static_cast<char>('0' + (it - symbols.begin())));
      if (known - v_a < 1) break;
      auto next = step(y, known);
      if (!next) return std::nullopt;
      y = *next;
      known -= v_a;
    }
    return w;
  }

  /// f(y) mod p^(known - v_a), or nullopt if f(y) is not integral.
  std::optional<mpz_class> step(const mpz_class& y, long known) const {
    const mpz_class& mod_k = prime_power(p, known);
    mpz_class t;
    mpz_powm_ui(t.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(N), mod_k.get_mpz_t());
    t = mod(t + 1, mod_k);
    const mpz_class& pv = prime_power(p, v_a);
    if (t % pv != 0) return std::nullopt;
    const mpz_class& out_mod = prime_power(p, known - v_a);
    return mod((t / pv) * inverse_mod(unit, out_mod), out_mod);
  }
};

bool strongly_connected(const std::vector<std::vector<int>>& a) {
  const size_t n = a.size();
  for (size_t s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::vector<size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const size_t u = stack.back();
      stack.pop_back();
      for (size_t v = 0; v < n; ++v) {
        if (a[u][v] != 0 && !seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  }
  return true;
}

}  // namespace

RepellerReport repeller_analysis(const FamilyParams& fp, int depth, long samples,
                                 std::uint64_t seed) {
  const RegimeVerdict verdict = classify_regime(fp);
  if (verdict.regime != Regime::SY2i) {
    throw Error(ErrorCode::PreconditionViolated,
                "repeller analysis requires regime SY2i, got " + std::string(to_string(verdict.regime)));
  }
  if (depth < 1) throw Error(ErrorCode::PreconditionViolated, "depth must be >= 1");
  const long p = fp.p;
  RepellerReport r;
  r.depth = depth;
  r.tau = fp.v_a - fp.m;
  r.coding_precision = static_cast<int>(1 + (depth - 1) * fp.v_a);
  const int prec = std::max(40, r.coding_precision + 8);

  r.fixed_points = fixed_points_of_fN(p, fp.N, fp.a, prec);
  std::sort(r.fixed_points.begin(), r.fixed_points.end(),
            [](const PadicNumber& x, const PadicNumber& y) { return x.residue(1) < y.residue(1); });
  r.ell = static_cast<long>(r.fixed_points.size());
  const mpq_class unit = fp.a / p_power(p, fp.v_a);
  Coder coder{p, fp.N, fp.v_a, {},
              mod(unit.get_num() * inverse_mod(unit.get_den(), prime_power(p, prec)),
                  prime_power(p, prec))};
  for (const auto& w : r.fixed_points) {
    const long res = w.residue(1).get_si();
    if (!coder.symbols.empty() && coder.symbols.back() == res) {
      throw Error(ErrorCode::InternalInconsistency, "two fixed points share a residue mod p");
    }
    coder.symbols.push_back(res);
    r.disks.push_back(Ball{w, 1});
    r.image_disks.push_back(Ball{w, 1 - r.tau});
  }

  std::mt19937_64 rng(seed);
  for (long s = 0; s < samples && r.ell > 0; ++s) {
    const Ball& d = r.disks[static_cast<size_t>(s % r.ell)];
    const PadicNumber x = sample_ball(d, prec, rng);
    const PadicNumber y = sample_ball(d, prec, rng);
    const PadicNumber diff = x - y;
    if (diff.is_zero()) continue;
    const PadicNumber fd = apply_fN(fp, Extended(x), prec).value() -
                           apply_fN(fp, Extended(y), prec).value();
    ++r.expansion_samples;
    if (fd.is_zero() || fd.valuation() != diff.valuation() - r.tau) r.expansion_exact = false;
  }

  r.incidence.assign(static_cast<size_t>(r.ell), std::vector<int>(static_cast<size_t>(r.ell), 0));
  for (size_t i = 0; i < r.disks.size(); ++i) {
    for (size_t j = 0; j < r.disks.size(); ++j) {
      const BallRelation rel = ball_relation(r.disks[j], r.image_disks[i]);
      r.incidence[i][j] = (rel == BallRelation::AInB || rel == BallRelation::Equal) ? 1 : 0;
    }
  }
  r.irreducible = r.ell > 0 && strongly_connected(r.incidence);

  // Depth-first search over residues: a class mod p^J survives while the
  // symbols it determines stay inside the disks.
  constexpr size_t kLeafLimit = 1'000'000;
  std::set<std::string> words;
  std::vector<std::pair<mpz_class, std::string>> leaves;
  std::vector<std::pair<mpz_class, long>> stack;
  for (auto it = coder.symbols.rbegin(); it != coder.symbols.rend(); ++it) stack.emplace_back(*it, 1);
  while (!stack.empty()) {
    auto [c, known] = stack.back();
    stack.pop_back();
    const auto w = coder.word(c, known);
    if (!w) continue;
    if (known == r.coding_precision) {
      if (leaves.size() >= kLeafLimit) {
        throw Error(ErrorCode::SizeGuard, "repeller coding exceeds 10^6 residue classes");
      }
      words.insert(*w);
      leaves.emplace_back(c, *w);
      continue;
    }
    const mpz_class& pk = prime_power(p, known);
    for (long t = p - 1; t >= 0; --t) stack.emplace_back(c + pk * t, known + 1);
  }
  r.cylinders_realized = static_cast<long>(words.size());
  r.cylinders_expected = 1;
  for (int i = 0; i < depth; ++i) r.cylinders_expected *= r.ell;
  for (size_t i = 0; i < leaves.size() && i < 16; ++i) r.coding_sample.push_back(leaves[i]);

  if (depth >= 2) {
    std::uniform_int_distribution<size_t> pick(0, leaves.empty() ? 0 : leaves.size() - 1);
    for (long s = 0; s < samples && !leaves.empty(); ++s) {
      const auto& [c, w] = leaves[pick(rng)];
      const auto image = coder.step(c, r.coding_precision);
      const auto wi = image ? coder.word(*image, r.coding_precision - fp.v_a) : std::nullopt;
      ++r.shift_checked;
      if (!wi || *wi != w.substr(1)) r.shift_equivariant = false;
    }
  }

  r.invariant_set_is_unit_orbit_set = fp.v_a > 2 * fp.m;
  if (r.invariant_set_is_unit_orbit_set) r.ell_formula = std::gcd(p - 1, fp.q);
  r.notes = verdict.notes;
  if (r.ell > 2) r.notes.push_back("l > 2: the full shift has more than two symbols");
  return r;
}

Dsy1Report dsy1_condition_check(const FamilyParams& fp) {
  require_sphere(fp, "dsy1 conditions");
  const PadicPolynomial g = build_gN(fp);
  const long p = fp.p;
  Dsy1Report r;
  r.p = p;
  if (p == 2) {
    r.a1 = fp.a1;
    r.level1 = classify_cycle(g, {1}, 1);
    const bool grows = r.level1->cls == CycleClass::Grows;
    if (grows != (fp.N % 2 == 1 && fp.a1 == 1)) {
      throw Error(ErrorCode::InternalInconsistency,
                  "level-1 growth at 1 disagrees with (N odd and a1 = 1)");
    }
    if (grows) {
      const CycleLifts lifts = lift_cycles(g, *r.level1);
      r.level2 = lifts.lifts.front();
      r.notes.push_back("level-2 cycle " + std::string(to_string(r.level2->cls)) +
                        ", beta_2 = " + std::to_string(r.level2->beta));
    } else {
      r.notes.push_back("1 does not grow at level 1");
    }
    r.minimal = false;
    return r;
  }

  const std::vector<long> map = sphere_level1_map(fp);
  long j = 1;
  for (long t = 1; t <= p - 1; ++t) {
    j = map[static_cast<size_t>(j)];
    if (j == 1) {
      r.return_time = t;
      break;
    }
  }
  r.cond1_orbit = r.return_time == p - 1;

  const mpz_class one = 1;
  const JetEvaluator jets(g, 4);
  const Jet jet = jets.iterate(one, p - 1);
  const mpz_class pz = p;
  r.alpha = mpz_class(mod(jet.d1, pz)).get_si();
  r.beta = mpz_class(mod((jet.value - 1) / p, pz)).get_si();
  r.gamma = mpz_class(mod(jet.half_d2, pz)).get_si();

  if (p == 3) {
    r.cond1 = fp.N % 2 == 1 && fp.a0 == 2;
    if (r.cond1 != r.cond1_orbit) {
      throw Error(ErrorCode::InternalInconsistency, "p = 3 level-1 condition disagrees with orbit");
    }
    r.cond2 = r.alpha == 1 && r.beta != 0 && r.beta != r.gamma;
  } else {
    std::vector<long> gens;
    if (p <= 13) {
      gens = primitive_roots(p);
    } else {
      for (long c = 2; c < p && gens.empty(); ++c) {
        if (multiplicative_order(c, p) == p - 1) gens.push_back(c);
      }
    }
    const u64 pu = static_cast<u64>(p);
    for (long gen : gens) {
      GeneratorCheck gc{gen, 0, std::nullopt, false};
      u64 x = static_cast<u64>(fp.a0);
      while (x != 1) {
        x = mul_mod(x, static_cast<u64>(gen), pu);
        ++gc.m;
      }
      long s = 0;
      long pw = 1;
      for (long n = 1; n <= p - 1; ++n) {
        s = (s + pw) % (p - 1);
        pw = (pw * (fp.N % (p - 1))) % (p - 1);
        if ((gc.m * s) % (p - 1) == 0) {
          gc.min_n = n;
          break;
        }
      }
      gc.cond1 = gc.min_n == p - 1;
      if (gc.cond1 != r.cond1_orbit) {
        throw Error(ErrorCode::InternalInconsistency,
                    "arithmetic and orbit forms of the level-1 condition disagree");
      }
      r.generators.push_back(gc);
    }
    r.cond1 = r.cond1_orbit;
    r.cond2 = r.alpha == 1 && r.beta != 0;
  }
  r.minimal = r.cond1 && r.cond2;
  return r;
}

std::vector<ResidueSet> dsy3_candidate_sets() {
  auto classes = [](std::vector<u64> rs, int e) {
    std::vector<ResidueClass> out;
    for (u64 r : rs) out.push_back(ResidueClass{r, e});
    return ResidueSet::from_classes(3, std::move(out));
  };
  return {classes({2}, 1), classes({2, 8}, 2), classes({5, 8}, 2), classes({2, 5}, 2),
          classes({2}, 2), classes({5}, 2), classes({8}, 2)};
}

std::vector<Dsy3Claim> dsy3_claims() {
  const auto s = dsy3_candidate_sets();
  return {{2, {s[1]}}, {3, {s[0]}}, {4, {s[2]}}, {5, {s[3]}}, {6, {s[4], s[5], s[6]}}};
}

Dsy3Prediction dsy3_classify(const mpq_class& a, long N) {
  if (a == 0 || valuation(a, 3) != 0 || residue(a, 3, 1) != 1) {
    throw Error(ErrorCode::PreconditionViolated, "dsy3 classification requires a = 1 mod 3");
  }
  if (N < 2 || N % 2 != 0) {
    throw Error(ErrorCode::PreconditionViolated, "dsy3 classification requires N even");
  }
  const long a9 = residue(a, 3, 2).get_si();
  const long a27 = residue(a, 3, 3).get_si();
  const long n18 = N % 18;
  const auto sets = dsy3_candidate_sets();
  Dsy3Prediction out;
  if (N % 6 == 0) {
    out.item = 1;
    out.attracting_fixed_point = true;
    out.description = "2+3Z_3 lies in the basin of an attracting fixed point";
  } else if (a9 == 1 && (n18 == 4 || n18 == 16)) {
    out.item = 2;
    out.minimal_components = {sets[1]};
    out.description = "{2, 8} + 9Z_3 is minimal";
  } else if (a9 == 4 && N % 6 == 2) {
    out.item = 3;
    out.minimal_components = {sets[0]};
    out.description = "2+3Z_3 is minimal";
  } else if (a9 == 4 && (n18 == 10 || n18 == 16)) {
    out.item = 4;
    out.minimal_components = {sets[2]};
    out.description = "{5, 8} + 9Z_3 is minimal";
  } else if (a9 == 7 && (n18 == 4 || n18 == 10)) {
    out.item = 5;
    out.minimal_components = {sets[3]};
    out.description = "{2, 5} + 9Z_3 is minimal";
  } else if ((a27 == 7 && n18 == 2) || (a27 == 16 && (n18 == 8 || n18 == 14))) {
    out.item = 6;
    out.minimal_components = {sets[4], sets[5], sets[6]};
    out.description = "2+9Z_3, 5+9Z_3 and 8+9Z_3 are each minimal";
  } else {
    out.description = "none of the listed congruence cases holds";
  }
  return out;
}

PadicNumber random_with_valuation(long p, long v, int precision, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> lead(1, p - 1);
  const mpz_class u = lead(rng) + p * random_residue(p, std::max(precision - 1, 0), rng);
  return PadicNumber::from_unit(p, v, u, precision);
}

}  // namespace padyn
