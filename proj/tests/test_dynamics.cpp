#include "doctest.h"
#include "oracles.hpp"
#include "padyn/dynamics.hpp"
#include "padyn/error.hpp"

using namespace padyn;

namespace {

using Coeffs = std::vector<mpq_class>;

std::vector<u64> all_residues(u64 m) {
  std::vector<u64> v(m);
  for (u64 i = 0; i < m; ++i) v[i] = i;
  return v;
}

CycleClass to_lib(oracle::Class c) {
  switch (c) {
    case oracle::Class::Grows: return CycleClass::Grows;
    case oracle::Class::Splits: return CycleClass::Splits;
    case oracle::Class::GrowsTails: return CycleClass::GrowsTails;
    case oracle::Class::PartiallySplits: return CycleClass::PartiallySplits;
  }
  return CycleClass::Grows;
}

}  // namespace

TEST_SUITE("cycle-dynamics") {

TEST_CASE("level maps") {
  const PadicPolynomial f(3, {mpq_class(1, 4), 0, mpq_class(1, 4)});
  const auto m = build_level_map(f, ResidueSet::residue_class(3, 2, 1), 2);
  CHECK(m.elements() == std::vector<u64>{2, 5, 8});
  CHECK(m(2) == 8);
  CHECK(m(8) == 5);
  CHECK(m(5) == 2);
  const auto lc = cycles_at_level(m);
  REQUIRE(lc.cycles.size() == 1);
  CHECK(lc.cycles[0].length() == 3);

  const PadicPolynomial g(2, {1, 0, 1});
  const auto m2 = build_level_map(g, ResidueSet::all(2), 1);
  CHECK(m2(0) == 1);
  CHECK(m2(1) == 0);
  const auto c2 = cycles_at_level(m2);
  REQUIRE(c2.cycles.size() == 1);
  CHECK(c2.cycles[0].alpha == 0);
  CHECK(c2.cycles[0].cls == CycleClass::GrowsTails);
}

TEST_CASE("non-invariant domains are rejected") {
  const PadicPolynomial f(3, {1, 0, 1});
  try {
    (void)build_level_map(f, ResidueSet::residue_class(3, 1, 1), 1);
    FAIL("expected DomainNotInvariant");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainNotInvariant);
  }
}

TEST_CASE("cycle classes") {
  const PadicPolynomial f(3, {mpq_class(1, 4), 0, mpq_class(1, 4)});
  const auto c = classify_cycle(f, {2}, 1);
  CHECK(c.alpha == 1);
  CHECK(c.beta == 2);
  CHECK(c.cls == CycleClass::Grows);

  for (long a : {1L, 4L, 7L, 10L}) {
    for (int N : {6, 12}) {
      Coeffs co(N + 1, 0);
      co[0] = co[N] = mpq_class(1, a);
      CHECK(classify_cycle(PadicPolynomial(3, co), {2}, 1).cls == CycleClass::GrowsTails);
    }
  }
  const PadicPolynomial h(3, {mpq_class(1, 7), 0, mpq_class(1, 7)});
  CHECK(classify_cycle(h, {2}, 1).cls == CycleClass::Splits);
  CHECK_THROWS_AS(classify_cycle(h, {1}, 1), Error);
}

TEST_CASE("lift examples") {
  const PadicPolynomial g(2, {1, 0, 1});
  const auto gt = lift_cycles(g, classify_cycle(g, {0, 1}, 1));
  REQUIRE(gt.lifts.size() == 1);
  CHECK(gt.lifts[0].cls == CycleClass::GrowsTails);

  const PadicPolynomial f(3, {mpq_class(1, 4), 0, mpq_class(1, 4)});
  const auto gr = lift_cycles(f, classify_cycle(f, {2}, 1));
  REQUIRE(gr.lifts.size() == 1);
  CHECK(gr.lifts[0].elements == std::vector<u64>{2, 8, 5});

  const PadicPolynomial neg(5, {0, -1});
  const auto ps = classify_cycle(neg, {0}, 1);
  CHECK(ps.cls == CycleClass::PartiallySplits);
  for (const auto& l : lift_cycles(neg, ps).lifts) CHECK((l.length() == 1 || l.length() == 2));
}

TEST_CASE("classification and lifts against brute force") {
  auto g = oracle::rng(31);
  long instances = 0, cycles_seen = 0;
  while (instances < 80) {
    const long p = std::vector<long>{2, 3, 5, 7}[instances % 4];
    const int n = 1 + static_cast<int>(g() % (p == 7 ? 2 : 3));
    std::uniform_int_distribution<long> coeff(-9, 9), deg(2, 4);
    Coeffs c(deg(g) + 1);
    for (auto& x : c) x = coeff(g);
    if (c.back() == 0) c.back() = 1;
    ++instances;
    const PadicPolynomial f(p, c);
    const u64 pn = oracle::power(p, n).get_ui();
    const auto lc = cycles_at_level(build_level_map(f, ResidueSet::all(p), n));
    const auto brute = oracle::cycles(oracle::table(c, pn), all_residues(pn));
    REQUIRE(lc.cycles.size() == brute.size());
    oracle::Dyn ref(c, p);
    for (const auto& cyc : lc.cycles) {
      ++cycles_seen;
      const auto e = ref.classify(n, cyc.elements);
      CHECK(cyc.alpha == e.alpha);
      CHECK(cyc.beta == e.beta);
      CHECK(cyc.cls == to_lib(e.cls));
      CHECK(classify_cycle(f, cyc.elements, n, 16).cls == cyc.cls);

      const auto lifts = lift_cycles(f, cyc);
      std::vector<std::vector<u64>> got, want;
      for (const auto& l : lifts.lifts) {
        auto sorted = l.elements;
        std::rotate(sorted.begin(), std::min_element(sorted.begin(), sorted.end()), sorted.end());
        got.push_back(sorted);
        CHECK(l.cls == to_lib(ref.classify(n + 1, l.elements).cls));
      }
      std::sort(got.begin(), got.end());
      want = ref.lifts(n, cyc.elements);
      CHECK(got == want);
      CHECK_MESSAGE(oracle::lift_violation(ref, n, cyc.elements).empty(), oracle::lift_violation(ref, n, cyc.elements));

      if (cyc.cls == CycleClass::Grows && (p >= 5 || (p == 3 && n >= 2))) CHECK(grows_forever(cyc, p));
      if (cyc.cls == CycleClass::Grows && p == 3 && n == 1) {
        CHECK((lifts.lifts[0].cls == CycleClass::Grows) == (cyc.beta != cyc.gamma));
      }
    }
  }
  CHECK(cycles_seen > 200);
}

TEST_CASE("minimality of the growing ball") {
  const PadicPolynomial f(3, {mpq_class(1, 4), 0, mpq_class(1, 4)});
  const auto levels = minimality_check(f, ResidueSet::residue_class(3, 2, 1), 5);
  REQUIRE(levels.size() == 5);
  u64 expected = 1;
  for (const auto& l : levels) {
    CHECK(l.minimal);
    CHECK(l.cycles == 1);
    CHECK(l.states == expected);
    expected *= 3;
  }
}

TEST_CASE("attracting basin of the 2-cycle of x^2 + 1 over Z_2") {
  const PadicPolynomial f(2, {1, 0, 1});
  auto g = oracle::rng(4);
  const auto c = classify_cycle(f, {0, 1}, 1);
  const auto b = grows_tails_basin(f, c, 40, 50, g);
  CHECK(b.converged == 50);
  CHECK(b.monotone);
  REQUIRE(b.orbit.size() == 2);
  const mpz_class m = oracle::power(2, 40);
  const auto t = [&](const mpz_class& x) { return mpz_class((x * x + 1) % m); };
  CHECK(t(t(b.orbit[0])) == b.orbit[0] % m);
  CHECK(t(b.orbit[0]) == b.orbit[1] % m);
}

TEST_CASE("minimal decompositions") {
  const PadicPolynomial f(3, {mpq_class(1, 4), 0, mpq_class(1, 4)});
  const auto d = minimal_decomposition(f, ResidueSet::all(3), 5);
  REQUIRE(d.minimal.size() == 1);
  CHECK(d.minimal[0].set == ResidueSet::residue_class(3, 2, 1));
  CHECK(d.minimal[0].certified());
  CHECK(d.periodic.empty());
  CHECK(d.undecided.empty());
  std::vector<u64> basin_residues;
  for (const auto& b : d.basins) {
    CHECK(b.cls.exponent == 1);
    basin_residues.push_back(b.cls.residue);
  }
  std::sort(basin_residues.begin(), basin_residues.end());
  CHECK(basin_residues == std::vector<u64>{0, 1});

  const PadicPolynomial g(2, {1, 0, 1});
  const auto e = minimal_decomposition(g, ResidueSet::all(2), 6);
  REQUIRE(e.periodic.size() == 1);
  CHECK(e.periodic[0].balls == ResidueSet::all(2));
  CHECK(e.minimal.empty());
  CHECK(e.undecided.empty());
}

TEST_CASE("default depths") {
  CHECK(default_depth(2) == 12);
  CHECK(default_depth(3) == 8);
  CHECK(default_depth(5) == 6);
  CHECK(default_depth(7) == 4);
}

}
