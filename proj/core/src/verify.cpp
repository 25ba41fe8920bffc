#include "padyn/verify.hpp"

#include <algorithm>
#include <random>

#include "padyn/error.hpp"
#include "padyn/hensel.hpp"
#include "padyn/integer.hpp"

namespace padyn {

std::string_view to_string(Exactness e) noexcept {
  switch (e) {
    case Exactness::Exact: return "exact";
    case Exactness::Sampled: return "sampled";
    case Exactness::DepthBounded: return "depth-bounded";
  }
  return "?";
}

const std::vector<std::string>& theorem_tags() {
  static const std::vector<std::string> tags{"sy1", "sy2", "sy3", "sy4", "dsy1", "dsy2", "dsy3"};
  return tags;
}

namespace {

long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }
long ceil_div(long a, long b) { return -floor_div(-a, b); }

struct OrbitTally {
  long samples = 0;
  long matched = 0;
  long undecided = 0;
  long max_steps = 0;
  bool monotone = true;
};

class Verifier {
 public:
  Verifier(const FamilyParams& fp, const Budget& budget, std::uint64_t seed)
      : fp_(fp), budget_(budget), rng_(seed), verdict_(classify_regime(fp)) {}

  VerificationReport run(std::string_view tag) {
    report_.theorem = std::string(tag);
    report_.regime = std::string(to_string(verdict_.regime));
    if (tag == "sy1") sy1();
    else if (tag == "sy2") sy2();
    else if (tag == "sy3") sy3();
    else if (tag == "sy4") sy4();
    else if (tag == "dsy1") dsy1();
    else if (tag == "dsy2") dsy2();
    else if (tag == "dsy3") dsy3();
    else throw Error(ErrorCode::PreconditionViolated, "unknown theorem '" + std::string(tag) + "'");
    report_.pass = std::all_of(report_.evidence.begin(), report_.evidence.end(),
                               [](const Evidence& e) { return e.holds; });
    return std::move(report_);
  }

 private:
  const FamilyParams& fp_;
  Budget budget_;
  std::mt19937_64 rng_;
  RegimeVerdict verdict_;
  VerificationReport report_;

  void mismatch(bool in_regime, const std::string& what) {
    if (!in_regime) {
      throw Error(ErrorCode::RegimeMismatch,
                  report_.theorem + " requires " + what + ", got regime " + report_.regime);
    }
  }

  Evidence& add(std::string claim, Exactness ex, bool holds) {
    Evidence e;
    e.claim = std::move(claim);
    e.exactness = ex;
    e.holds = holds;
    report_.evidence.push_back(std::move(e));
    return report_.evidence.back();
  }

  void regime_evidence() {
    Evidence& e = add("regime " + report_.regime, Exactness::Exact, true);
    e.data.emplace_back("v_a", fp_.v_a);
    e.data.emplace_back("q", fp_.q);
    e.data.emplace_back("m", static_cast<long>(fp_.m));
    if (verdict_.sphere_exponent) e.data.emplace_back("sphere_exponent", *verdict_.sphere_exponent);
    if (verdict_.ell) e.data.emplace_back("ell", *verdict_.ell);
    if (verdict_.k) e.data.emplace_back("k", *verdict_.k);
  }

  int work() const { return orbit_working_precision(fp_, budget_.iterations, budget_.precision); }

  PadicNumber sample(long v_lo, long v_hi) {
    std::uniform_int_distribution<long> pick(v_lo, v_hi);
    return random_with_valuation(fp_.p, pick(rng_), work(), rng_);
  }

  OrbitTally orbits(const std::vector<PadicNumber>& points, OrbitVerdict expect,
                    const std::vector<PadicNumber>* targets) {
    OrbitTally t;
    for (const auto& x : points) {
      const OrbitReport r = orbit(fp_, Extended(x), budget_.iterations, budget_.precision, targets);
      ++t.samples;
      if (r.verdict == expect) ++t.matched;
      if (r.verdict == OrbitVerdict::Undecided) ++t.undecided;
      t.max_steps = std::max<long>(t.max_steps, r.steps);
      if (expect == OrbitVerdict::ConvergesTo && !r.monotone) t.monotone = false;
    }
    return t;
  }

  std::vector<PadicNumber> draw(long count, long v_lo, long v_hi) {
    std::vector<PadicNumber> out;
    for (long i = 0; i < count; ++i) out.push_back(sample(v_lo, v_hi));
    return out;
  }

  void tally_evidence(const std::string& claim, const OrbitTally& t, bool need_monotone = false) {
    Evidence& e = add(claim, Exactness::Sampled,
                      t.matched == t.samples && (!need_monotone || t.monotone));
    e.data.emplace_back("samples", t.samples);
    e.data.emplace_back("matched", t.matched);
    e.data.emplace_back("undecided", t.undecided);
    e.data.emplace_back("max_steps", t.max_steps);
    if (need_monotone) e.data.emplace_back("monotone", t.monotone);
  }

  /// Distance exponent of x - y, or the known bound when they agree.
  static long agreement(const PadicNumber& x, const PadicNumber& y) {
    const PadicNumber d = x - y;
    return d.is_zero() ? d.absolute_precision() : d.valuation();
  }

  void divergence(const std::string& claim, const std::vector<PadicNumber>& points) {
    const std::vector<PadicNumber> none;
    tally_evidence(claim, orbits(points, OrbitVerdict::DivergesToInfinity, &none));
  }

  std::vector<PadicNumber> fixed_points() {
    return fixed_points_of_fN(fp_.p, fp_.N, fp_.a, budget_.precision + 16);
  }

  void sy1() {
    mismatch(fp_.v_a < 0, "|a|_p > 1");
    regime_evidence();
    const long n1 = fp_.N - 1;
    const auto fps = fixed_points();
    {
      const bool one = fps.size() == 1 && fps.front().valuation() == -fp_.v_a;
      Evidence& e = add("exactly one finite fixed point x0, |x0|_p = 1/|a|_p", Exactness::Exact, one);
      e.data.emplace_back("fixed_points", static_cast<long>(fps.size()));
      if (!fps.empty()) e.data.emplace_back("x0", fps.front().to_string());
    }
    if (fps.size() != 1) return;
    const long inner = ceil_div(fp_.v_a, n1) + (verdict_.regime == Regime::SY1 ? 1 : 0);
    {
      const auto t = orbits(draw(budget_.samples, inner, inner + 3), OrbitVerdict::ConvergesTo, &fps);
      tally_evidence(verdict_.regime == Regime::SY1
                         ? "orbits in D(0, p^-1 |a|_p^(1/(N-1))) converge to x0"
                         : "orbits in D(0, |a|_p^(1/(N-1))) converge to x0",
                     t, true);
      report_.evidence.back().data.emplace_back("min_valuation", inner);
    }
    if (fp_.p == 2) {
      // S(0, 1/|a|_2) = D(x0, 1/(4|a|_2)) u D(-x0, 1/(4|a|_2)).
      const PadicNumber& x0 = fps.front();
      std::vector<PadicNumber> pts;
      for (long i = 0; i < budget_.samples; ++i) {
        const PadicNumber c = i % 2 == 0 ? x0 : -x0;
        pts.push_back(sample_ball(Ball{c, -fp_.v_a + 2}, work(), rng_));
      }
      tally_evidence("orbits in D(x0, 1/(4|a|_2)) and D(-x0, 1/(4|a|_2)) converge to x0",
                     orbits(pts, OrbitVerdict::ConvergesTo, &fps));
    } else {
      tally_evidence("orbits in S(0, 1/|a|_p) converge to x0",
                     orbits(draw(budget_.samples, -fp_.v_a, -fp_.v_a), OrbitVerdict::ConvergesTo, &fps));
    }
    const long outer = ceil_div(fp_.v_a, n1) - 1;
    divergence("orbits outside D(0, |a|_p^(1/(N-1))) diverge",
               draw(budget_.samples, outer - 3, outer));
    {
      const Extended inf = apply_fN(fp_, Extended::infinity(fp_.p), budget_.precision);
      add("infinity is fixed", Exactness::Exact, inf.is_infinity());
    }
    if (verdict_.regime == Regime::SY1EmptySphere) {
      add("(N-1) does not divide v_p(a), so S(0, |a|_p^(1/(N-1))) is empty", Exactness::Exact,
          (-fp_.v_a) % n1 != 0);
      return;
    }
    const long s = *verdict_.sphere_exponent;
    const PadicPolynomial g = build_gN(fp_);
    {
      Evidence& e = add("g_N has coefficients in Z_p", Exactness::Exact, g.has_integral_coefficients());
      e.data.emplace_back("g_N", g.to_string());
      e.data.emplace_back("constant_valuation", valuation(g.coefficient(0), fp_.p));
    }
    long agree = 0;
    long invariant = 0;
    const PadicNumber ps = PadicNumber::from_integer(fp_.p, prime_power(fp_.p, s), work() + 64);
    for (long i = 0; i < budget_.samples; ++i) {
      const PadicNumber x = sample(-s, -s);
      const PadicNumber fx = apply_fN(fp_, Extended(x), work()).value();
      if (!fx.is_zero() && fx.valuation() == -s) ++invariant;
      if (agreement(g.evaluate(ps * x), ps * fx) >= budget_.precision) ++agree;
    }
    Evidence& e = add("x -> p^s x conjugates f_N on S(0, p^s) to g_N on S(0,1)", Exactness::Sampled,
                      agree == budget_.samples && invariant == budget_.samples);
    e.data.emplace_back("samples", budget_.samples);
    e.data.emplace_back("conjugacy_holds", agree);
    e.data.emplace_back("sphere_invariant", invariant);
  }

  void sy2_repeller() {
    const RepellerReport r = repeller_analysis(fp_, budget_.depth, budget_.samples, rng_());
    {
      const bool ok = r.ell >= 1 && (!r.ell_formula || *r.ell_formula == r.ell);
      Evidence& e = add("the fixed points in S(0,1) give l disks D(w_i, 1/p)", Exactness::Exact, ok);
      e.data.emplace_back("ell", r.ell);
      if (r.ell_formula) e.data.emplace_back("gcd(p-1,q)", *r.ell_formula);
      std::vector<std::string> disks;
      for (const auto& d : r.disks) disks.push_back(d.to_string());
      e.data.emplace_back("disks", disks);
    }
    {
      Evidence& e = add("|f(x) - f(y)|_p = p^tau |x - y|_p on every disk", Exactness::Sampled,
                        r.expansion_exact && r.expansion_samples > 0);
      e.data.emplace_back("tau", r.tau);
      e.data.emplace_back("samples", r.expansion_samples);
    }
    {
      bool ones = true;
      std::vector<std::string> rows;
      for (const auto& row : r.incidence) {
        std::string s;
        for (int v : row) {
          ones = ones && v == 1;
          s += std::to_string(v);
        }
        rows.push_back(s);
      }
      Evidence& e = add("incidence matrix is all ones and irreducible", Exactness::Exact,
                        ones && r.irreducible);
      e.data.emplace_back("incidence", rows);
    }
    {
      Evidence& e = add("every word of length d is a nonempty cylinder", Exactness::DepthBounded,
                        r.cylinders_realized == r.cylinders_expected);
      e.depth = r.depth;
      e.data.emplace_back("expected", r.cylinders_expected);
      e.data.emplace_back("realized", r.cylinders_realized);
      e.data.emplace_back("coding_precision", static_cast<long>(r.coding_precision));
    }
    {
      Evidence& e = add("coding(f(x)) = shift(coding(x))", Exactness::Sampled,
                        r.shift_equivariant);
      e.depth = r.depth - 1;
      e.data.emplace_back("checked", r.shift_checked);
    }
    add(r.invariant_set_is_unit_orbit_set ? "|a|_p < |N|_p^2: K_f = A_f"
                                          : "|a|_p >= |N|_p^2: K_f = A_f not asserted",
        Exactness::Exact, true);
    std::vector<PadicNumber> off = draw(budget_.samples / 2, 1, 4);
    for (auto& x : draw(budget_.samples - budget_.samples / 2, -4, -1)) off.push_back(std::move(x));
    divergence("orbits off S(0,1) diverge", off);
  }

  void sy2() {
    mismatch(fp_.p >= 3 && fp_.v_a > 0, "p >= 3 and |a|_p < 1");
    regime_evidence();
    if (verdict_.regime == Regime::SY2i) {
      sy2_repeller();
      return;
    }
    std::vector<PadicNumber> pts = draw(budget_.samples / 2, 0, 0);
    for (auto& x : draw(budget_.samples - budget_.samples / 2, -4, 4)) pts.push_back(std::move(x));
    divergence("every finite orbit diverges", pts);
  }

  std::vector<PadicNumber> off_sphere(long count) {
    std::vector<PadicNumber> pts = draw(count / 2, 1, 4);
    for (auto& x : draw(count - count / 2, -4, -1)) pts.push_back(std::move(x));
    return pts;
  }

  void sy3() {
    mismatch(fp_.p == 2 && fp_.v_a > 0, "p = 2 and |a|_2 < 1");
    regime_evidence();
    const long k = fp_.v_a;
    switch (verdict_.regime) {
      case Regime::SY3i: {
        const auto fps = fixed_points();
        const mpz_class want = (mpz_class(1) << static_cast<unsigned long>(k)) - 1;
        const bool ok = fps.size() == 1 && fps.front().is_integral() &&
                        fps.front().residue(k + 1) == want;
        Evidence& e = add("exactly one finite fixed point x0, in D(2^k - 1, 2^(-k-1))",
                          Exactness::Exact, ok);
        e.data.emplace_back("fixed_points", static_cast<long>(fps.size()));
        if (!fps.empty()) e.data.emplace_back("x0", fps.front().to_string());
        std::vector<PadicNumber> pts = draw(budget_.samples / 2, 0, 0);
        for (auto& x : draw(budget_.samples - budget_.samples / 2, -3, 4)) pts.push_back(std::move(x));
        divergence("every other finite orbit diverges", pts);
        break;
      }
      case Regime::SY3ii: {
        std::vector<PadicNumber> pts = draw(budget_.samples / 2, 0, 0);
        for (auto& x : draw(budget_.samples - budget_.samples / 2, -3, 4)) pts.push_back(std::move(x));
        divergence("every finite orbit diverges", pts);
        break;
      }
      case Regime::SY3iii: {
        const auto fps = fixed_points();
        const long a8 = residue(fp_.a, 2, 3).get_si();
        const bool ok = fps.size() == 1 && fps.front().valuation() == 0 &&
                        fps.front().residue(2) == (a8 == 2 ? 1 : 3);
        Evidence& e = add("exactly one finite fixed point x0 in S(0,1), x0 = 1 mod 4 iff a = 2 mod 8",
                          Exactness::Exact, ok);
        e.data.emplace_back("a_mod_8", a8);
        if (!fps.empty()) e.data.emplace_back("x0", fps.front().to_string());
        if (fps.size() != 1) break;
        tally_evidence("orbits in S(0,1) converge to x0",
                       orbits(draw(budget_.samples, 0, 0), OrbitVerdict::ConvergesTo, &fps));
        divergence("orbits off S(0,1) diverge", off_sphere(budget_.samples));
        break;
      }
      case Regime::SY3iv: {
        divergence("orbits off S(0,1) diverge", off_sphere(budget_.samples));
        const PadicPolynomial h = build_hN(fp_);
        {
          Evidence& e = add("h_N has coefficients in Z_2", Exactness::Exact, true);
          e.data.emplace_back("h_N", h.to_string());
        }
        long agree = 0;
        long invariant = 0;
        const int w = work();
        const PadicNumber one = PadicNumber::from_integer(2, 1, w + 64);
        const PadicNumber two = PadicNumber::from_integer(2, 2, w + 64);
        for (long i = 0; i < budget_.samples; ++i) {
          const PadicNumber x = sample(0, 0);
          const PadicNumber fx = apply_fN(fp_, Extended(x), w).value();
          if (!fx.is_zero() && fx.valuation() == 0) ++invariant;
          if (agreement(h.evaluate((x - one) / two), (fx - one) / two) >= budget_.precision) ++agree;
        }
        Evidence& e = add("x -> (x-1)/2 conjugates f_N on S(0,1) to h_N on Z_2", Exactness::Sampled,
                          agree == budget_.samples && invariant == budget_.samples);
        e.data.emplace_back("samples", budget_.samples);
        e.data.emplace_back("conjugacy_holds", agree);
        e.data.emplace_back("sphere_invariant", invariant);
        const int depth = std::min(budget_.depth, 8);
        const DecompositionReport d = minimal_decomposition(h, ResidueSet::all(2), depth);
        Evidence& c = add("cycle lifts of h_N follow the lift table", Exactness::DepthBounded, true);
        c.depth = depth;
        c.data.emplace_back("lifts_checked", d.lifts_checked);
        c.data.emplace_back("periodic_components", static_cast<long>(d.periodic.size()));
        c.data.emplace_back("minimal_components", static_cast<long>(d.minimal.size()));
        break;
      }
      default: break;
    }
  }

  void sy4() {
    mismatch(fp_.v_a == 0, "|a|_p = 1");
    regime_evidence();
    divergence("orbits outside Z_p diverge", draw(budget_.samples, -4, -1));
    add("f_N maps Z_p into Z_p", Exactness::Exact,
        conjugate_to_polynomial(fp_.p, fp_.N, fp_.a).has_integral_coefficients());
  }

  int sphere_depth() const {
    int depth = 1;
    u64 states = static_cast<u64>(fp_.p - 1);
    while (depth < std::max(budget_.depth, 3) && states * static_cast<u64>(fp_.p) <= 1'000'000) {
      states *= static_cast<u64>(fp_.p);
      ++depth;
    }
    return depth;
  }

  void dsy1() {
    mismatch(fp_.v_a < 0 && (-fp_.v_a) % (fp_.N - 1) == 0, "|a|_p > 1 and (N-1) | v_p(a)");
    regime_evidence();
    const Dsy1Report r = dsy1_condition_check(fp_);
    const PadicPolynomial g = build_gN(fp_);
    const ResidueSet sphere = ResidueSet::sphere(fp_.p);
    const int depth = std::max(sphere_depth(), 2);
    const auto levels = minimality_check(g, sphere, depth);
    const bool observed = std::all_of(levels.begin(), levels.end(),
                                      [](const LevelMinimality& l) { return l.minimal; });
    std::vector<long> per_level;
    for (const auto& l : levels) per_level.push_back(l.minimal ? 1 : 0);
    if (fp_.p == 2) {
      Evidence& e = add("g_N on S(0,1) is never minimal", Exactness::DepthBounded, !observed);
      e.depth = depth;
      e.data.emplace_back("level_minimal", per_level);
      e.data.emplace_back("a1", *r.a1);
      const bool grows = r.level1->cls == CycleClass::Grows;
      Evidence& l = add("level 1 grows only for N odd and a1 = 1, and then beta_2 = 0",
                        Exactness::Exact, !grows || (r.level2 && r.level2->beta == 0));
      l.data.emplace_back("level1", std::string(to_string(r.level1->cls)));
      if (r.level2) l.data.emplace_back("beta_2", static_cast<long>(r.level2->beta));
      return;
    }
    {
      Evidence& e = add(fp_.p == 3 ? "level-1 condition: N odd and a0 = 2"
                                   : "level-1 condition: 1 returns after exactly p-1 steps",
                        Exactness::Exact, r.cond1 == r.cond1_orbit);
      e.data.emplace_back("cond1", r.cond1);
      if (r.return_time) e.data.emplace_back("return_time", *r.return_time);
      std::vector<std::string> gens;
      for (const auto& gc : r.generators) {
        gens.push_back("g=" + std::to_string(gc.generator) + " m=" + std::to_string(gc.m) +
                       " n=" + (gc.min_n ? std::to_string(*gc.min_n) : "none"));
      }
      if (!gens.empty()) e.data.emplace_back("generators", gens);
    }
    {
      Evidence& e = add(fp_.p == 3 ? "alpha = 1, beta != 0 and beta != gamma for g_N^2 at 1"
                                   : "alpha = 1 and beta != 0 for g_N^(p-1) at 1",
                        Exactness::Exact, true);
      e.data.emplace_back("cond2", r.cond2);
      e.data.emplace_back("alpha", r.alpha);
      e.data.emplace_back("beta", r.beta);
      if (fp_.p == 3) e.data.emplace_back("gamma", r.gamma);
    }
    Evidence& e = add(std::string("g_N on S(0,1) is ") + (r.minimal ? "minimal" : "not minimal"),
                      Exactness::DepthBounded, observed == r.minimal);
    e.depth = depth;
    e.data.emplace_back("predicted", r.minimal);
    e.data.emplace_back("level_minimal", per_level);
  }

  void basin_evidence(const std::string& claim, const PadicPolynomial& f, const CycleRecord& c) {
    const GrowsTailsBasin b = grows_tails_basin(f, c, budget_.precision, budget_.samples, rng_);
    Evidence& e = add(claim, Exactness::Sampled, b.converged == b.samples && b.monotone);
    e.data.emplace_back("samples", b.samples);
    e.data.emplace_back("converged", b.converged);
    e.data.emplace_back("max_periods", b.max_periods);
    std::vector<std::string> orbit;
    for (const auto& x : b.orbit) orbit.push_back(mpz_class(x % prime_power(fp_.p, 12)).get_str());
    e.data.emplace_back("orbit_mod_p^12", orbit);
  }

  void dsy2() {
    mismatch(fp_.p == 2 && fp_.v_a == 0, "p = 2 and |a|_2 = 1");
    regime_evidence();
    const PadicPolynomial f = conjugate_to_polynomial(2, fp_.N, fp_.a);
    const CycleRecord c = classify_cycle(f, {0, 1}, 1);
    Evidence& e = add("(0 1) is a grows-tails 2-cycle at level 1", Exactness::Exact,
                      c.cls == CycleClass::GrowsTails);
    e.data.emplace_back("alpha", static_cast<long>(c.alpha));
    if (c.cls == CycleClass::GrowsTails) {
      basin_evidence("an attracting 2-periodic orbit attracts Z_2", f, c);
    }
  }

  void dsy3() {
    mismatch(fp_.p == 3 && fp_.v_a == 0 && fp_.a0 == 1, "p = 3 and a = 1 mod 3");
    regime_evidence();
    const PadicPolynomial f = conjugate_to_polynomial(3, fp_.N, fp_.a);
    if (fp_.N % 2 == 1) {
      const CycleRecord c = classify_cycle(f, {0, 1, 2}, 1);
      Evidence& e = add("(0 1 2) is a grows-tails 3-cycle at level 1", Exactness::Exact,
                        c.cls == CycleClass::GrowsTails);
      e.data.emplace_back("alpha", static_cast<long>(c.alpha));
      if (c.cls == CycleClass::GrowsTails) {
        basin_evidence("an attracting 3-periodic orbit attracts Z_3", f, c);
      }
      return;
    }
    const LevelMap m1 = build_level_map(f, ResidueSet::all(3), 1);
    add("f(3Z_3) in 1+3Z_3, f(1+3Z_3) in 2+3Z_3, f(2+3Z_3) in 2+3Z_3", Exactness::Exact,
        m1(0) == 1 && m1(1) == 2 && m1(2) == 2);
    const Dsy3Prediction pred = dsy3_classify(fp_.a, fp_.N);
    {
      Evidence& e = add("case " + std::to_string(pred.item) + ": " + pred.description,
                        Exactness::Exact, true);
      e.data.emplace_back("a_mod_27", residue(fp_.a, 3, 3).get_si());
      e.data.emplace_back("N_mod_18", fp_.N % 18);
    }
    const int depth = std::max(budget_.depth, 5);
    std::vector<std::string> mismatched, minimal_sets;
    for (const auto& claim : dsy3_claims()) {
      bool all = true;
      for (const auto& s : claim.sets) {
        const bool minimal = minimal_to_depth(f, s, depth);
        if (minimal) minimal_sets.push_back(s.to_string());
        all = all && minimal;
      }
      if (all != (pred.item == claim.item)) mismatched.push_back("item " + std::to_string(claim.item));
    }
    {
      Evidence& e = add("items 2-6 hold exactly as classified", Exactness::DepthBounded,
                        mismatched.empty());
      e.depth = depth;
      e.data.emplace_back("minimal_sets", minimal_sets);
      e.data.emplace_back("mismatched", mismatched);
    }
    if (pred.attracting_fixed_point) {
      const CycleRecord c = classify_cycle(f, {2}, 1);
      Evidence& e = add("the fixed point in 2+3Z_3 grows tails", Exactness::Exact,
                        c.cls == CycleClass::GrowsTails);
      e.data.emplace_back("alpha", static_cast<long>(c.alpha));
      if (c.cls == CycleClass::GrowsTails) basin_evidence("2+3Z_3 is in its basin", f, c);
    }
  }
};

}  // namespace

VerificationReport verify_theorem(std::string_view tag, const FamilyParams& fp,
                                  const Budget& budget, std::uint64_t seed) {
  return Verifier(fp, budget, seed).run(tag);
}

}  // namespace padyn
