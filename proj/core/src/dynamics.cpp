#include "padyn/dynamics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "padyn/error.hpp"

namespace padyn {

std::string_view to_string(CycleClass c) noexcept {
  switch (c) {
    case CycleClass::Grows: return "grows";
    case CycleClass::Splits: return "splits";
    case CycleClass::GrowsTails: return "grows-tails";
    case CycleClass::PartiallySplits: return "partially-splits";
  }
  return "?";
}

std::string_view to_string(MinimalCertificate c) noexcept {
  switch (c) {
    case MinimalCertificate::GrowthRule: return "grows-forever";
    case MinimalCertificate::SplitThenGrow: return "split-then-grow";
    case MinimalCertificate::DepthOnly: return "depth-only";
  }
  return "?";
}

std::string CappedValuation::to_string() const {
  return (lower_bound ? ">=" : "") + std::to_string(value);
}

namespace {

mpz_class mod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

CappedValuation capped(const mpz_class& x, long p, long cap) {
  if (x == 0) return {cap, true};
  return {std::min(valuation(x, p), cap), false};
}

u64 mod_p(const mpz_class& x, long p) {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p));
}

// Cycles and tails of the functional graph i -> next[i].
struct Graph {
  std::vector<std::vector<size_t>> cycles;
  std::vector<size_t> cycle_of;
  std::vector<bool> on_cycle;
};

Graph functional_graph(const std::vector<size_t>& next) {
  const size_t n = next.size();
  Graph g{{}, std::vector<size_t>(n, 0), std::vector<bool>(n, false)};
  std::vector<char> state(n, 0);  // 0 new, 1 on current path, 2 done
  std::vector<size_t> path;
  for (size_t s = 0; s < n; ++s) {
    if (state[s]) continue;
    path.clear();
    size_t x = s;
    while (state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = next[x];
    }
    size_t target;
    if (state[x] == 1) {
      target = g.cycles.size();
      std::vector<size_t> cyc;
      size_t y = x;
      do {
        cyc.push_back(y);
        g.on_cycle[y] = true;
        y = next[y];
      } while (y != x);
      g.cycles.push_back(std::move(cyc));
    } else {
      target = g.cycle_of[x];
    }
    for (size_t y : path) {
      state[y] = 2;
      g.cycle_of[y] = target;
    }
  }
  return g;
}

std::vector<u64> canonical_rotation(std::vector<u64> c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return c;
}

ResidueSet balls_of(long p, const CycleRecord& c) {
  std::vector<ResidueClass> cls;
  for (u64 x : c.elements) cls.push_back({x, c.level});
  return ResidueSet::from_classes(p, std::move(cls));
}

}  // namespace

// ---------------------------------------------------------------- LevelMap

LevelMap::LevelMap(PadicPolynomial f, ResidueSet domain, int level, std::vector<u64> elements,
                   std::vector<u64> images)
    : f_(std::move(f)),
      domain_(std::move(domain)),
      level_(level),
      modulus_(prime_power_u64(f_.prime(), level)),
      dense_(elements.size() == modulus_),
      elements_(std::move(elements)),
      images_(std::move(images)) {}

size_t LevelMap::index_of(u64 x) const {
  if (dense_) {
    if (x >= modulus_) throw Error(ErrorCode::RangeError, "residue outside Z/p^n");
    return static_cast<size_t>(x);
  }
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) {
    throw Error(ErrorCode::RangeError, "residue " + std::to_string(x) + " not in the domain");
  }
  return static_cast<size_t>(it - elements_.begin());
}

LevelMap build_level_map(const PadicPolynomial& f, const ResidueSet& domain, int n) {
  if (n < 1) throw Error(ErrorCode::RangeError, "level must be >= 1");
  if (domain.prime() != f.prime()) throw Error(ErrorCode::PrimeMismatch, "domain prime");
  const u64 modulus = prime_power_u64(f.prime(), n);
  const u64 count = domain.count(n);
  if (count > kLevelMapLimit) {
    throw Error(ErrorCode::SizeGuard, "level " + std::to_string(n) + " table would hold " +
                                          std::to_string(count) + " residues (limit 10^7)");
  }
  const ModularPolynomial mf(f, n);
  std::vector<u64> elements = domain.elements(n);
  std::vector<u64> images;
  images.reserve(elements.size());
  for (u64 x : elements) {
    const u64 y = mf(x);
    if (!domain.contains(y, n)) {
      throw Error(ErrorCode::DomainNotInvariant,
                  "f(" + std::to_string(x) + ") = " + std::to_string(y) + " mod " +
                      std::to_string(modulus) + " leaves " + domain.to_string());
    }
    images.push_back(y);
  }
  return LevelMap(f, domain, n, std::move(elements), std::move(images));
}

// ---------------------------------------------------------------- classification

CycleRecord classify_cycle(const PadicPolynomial& f, const std::vector<u64>& cycle, int n,
                           int extra_digits) {
  if (cycle.empty()) throw Error(ErrorCode::NotACycle, "empty cycle");
  const long p = f.prime();
  const u64 m = prime_power_u64(p, n);
  CycleRecord r;
  r.level = n;
  r.elements = canonical_rotation(cycle);
  const size_t k = r.elements.size();

  const long K = n + extra_digits;
  const JetEvaluator J(f, K);
  const mpz_class pn = prime_power(p, n);
  for (size_t i = 0; i < k; ++i) {
    const u64 x = r.elements[i];
    const u64 y = r.elements[(i + 1) % k];
    if (x >= m || mod(J.value(mpz_class(static_cast<unsigned long>(x))), pn) !=
                      static_cast<unsigned long>(y)) {
      throw Error(ErrorCode::NotACycle, "f(" + std::to_string(x) + ") != " + std::to_string(y) +
                                            " mod p^" + std::to_string(n));
    }
  }
  {
    auto sorted = r.elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::NotACycle, "repeated residue");
    }
  }

  const mpz_class x1(static_cast<unsigned long>(r.elements.front()));
  const Jet jet = J.iterate(x1, static_cast<long>(k));
  const mpz_class& big = J.modulus();
  const mpz_class alpha = mod(jet.d1, big);
  const mpz_class diff = mod(jet.value - x1, big);
  mpz_class beta;
  mpz_divexact(beta.get_mpz_t(), diff.get_mpz_t(), pn.get_mpz_t());

  r.alpha = mod_p(alpha, p);
  r.beta = mod_p(beta, p);
  r.gamma = mod_p(jet.half_d2, p);
  r.A = capped(mod(alpha - 1, big), p, K);
  r.B = capped(beta, p, extra_digits);
  if (r.alpha == 0) {
    r.cls = CycleClass::GrowsTails;
  } else if (r.alpha == 1) {
    r.cls = r.beta == 0 ? CycleClass::Splits : CycleClass::Grows;
  } else {
    r.cls = CycleClass::PartiallySplits;
  }
  return r;
}

LevelCycles cycles_at_level(const LevelMap& m) {
  std::vector<size_t> next(m.size());
  for (size_t i = 0; i < m.size(); ++i) next[i] = m.index_of(m.images()[i]);
  const Graph g = functional_graph(next);

  std::vector<std::pair<u64, size_t>> order;  // (smallest residue, graph cycle index)
  for (size_t c = 0; c < g.cycles.size(); ++c) {
    u64 lo = m.elements()[g.cycles[c].front()];
    for (size_t i : g.cycles[c]) lo = std::min(lo, m.elements()[i]);
    order.emplace_back(lo, c);
  }
  std::sort(order.begin(), order.end());
  std::vector<size_t> rank(g.cycles.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i].second] = i;

  LevelCycles out;
  out.level = m.level();
  for (const auto& [lo, c] : order) {
    std::vector<u64> residues;
    for (size_t i : g.cycles[c]) residues.push_back(m.elements()[i]);
    out.cycles.push_back(classify_cycle(m.polynomial(), residues, m.level()));
  }
  for (size_t i = 0; i < m.size(); ++i) {
    if (!g.on_cycle[i]) out.tails.push_back({m.elements()[i], m.images()[i], rank[g.cycle_of[i]]});
  }
  return out;
}

// ---------------------------------------------------------------- lifting

bool grows_forever(const CycleRecord& c, long p) {
  if (c.cls != CycleClass::Grows) return false;
  if (p >= 5) return true;
  if (p == 3) return c.level >= 2 || c.beta != c.gamma;
  return false;
}

CycleLifts lift_cycles(const PadicPolynomial& f, const CycleRecord& c) {
  const long p = f.prime();
  const int n = c.level;
  const u64 m = prime_power_u64(p, n);
  const ModularPolynomial mf(f, n + 1);

  std::vector<u64> nodes;
  for (u64 x : c.elements) {
    for (long t = 0; t < p; ++t) nodes.push_back(x + static_cast<u64>(t) * m);
  }
  std::sort(nodes.begin(), nodes.end());
  std::vector<size_t> next(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    const u64 y = mf(nodes[i]);
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), y);
    if (it == nodes.end() || *it != y) {
      throw Error(ErrorCode::NotACycle, "preimage of the cycle is not invariant at level " +
                                            std::to_string(n + 1));
    }
    next[i] = static_cast<size_t>(it - nodes.begin());
  }
  const Graph g = functional_graph(next);

  CycleLifts out;
  for (const auto& cyc : g.cycles) {
    std::vector<u64> residues;
    for (size_t i : cyc) residues.push_back(nodes[i]);
    out.lifts.push_back(classify_cycle(f, residues, n + 1));
  }
  std::sort(out.lifts.begin(), out.lifts.end(),
            [](const CycleRecord& a, const CycleRecord& b) { return a.first() < b.first(); });

  const size_t k = c.length();
  const auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::InternalInconsistency,
                "lift table violated for the " + std::string(to_string(c.cls)) + " " +
                    std::to_string(k) + "-cycle at " + std::to_string(c.first()) + " mod " +
                    std::to_string(p) + "^" + std::to_string(n) + ": " + what);
  };
  const auto grows_or_splits = [](const CycleRecord& r) {
    return r.cls == CycleClass::Grows || r.cls == CycleClass::Splits;
  };

  switch (c.cls) {
    case CycleClass::Grows:
      if (out.lifts.size() != 1 || out.lifts[0].length() != k * static_cast<size_t>(p)) {
        fail("expected a single lift of length kp");
      }
      if (!grows_or_splits(out.lifts[0])) fail("lift neither grows nor splits");
      break;
    case CycleClass::Splits:
      if (out.lifts.size() != static_cast<size_t>(p)) fail("expected p lifts");
      for (const auto& l : out.lifts) {
        if (l.length() != k) fail("split lift of the wrong length");
        if (!grows_or_splits(l)) fail("lift neither grows nor splits");
      }
      break;
    case CycleClass::GrowsTails:
      if (out.lifts.size() != 1 || out.lifts[0].length() != k ||
          out.lifts[0].cls != CycleClass::GrowsTails) {
        fail("expected a single lift of length k that grows tails");
      }
      break;
    case CycleClass::PartiallySplits: {
      const size_t d = static_cast<size_t>(multiplicative_order(static_cast<long>(c.alpha), p));
      size_t same = 0;
      for (const auto& l : out.lifts) {
        if (l.length() == k) {
          ++same;
          if (l.cls != CycleClass::PartiallySplits) fail("same-length lift does not partially split");
        } else if (l.length() == k * d) {
          if (!grows_or_splits(l)) fail("length-kd lift neither grows nor splits");
        } else {
          fail("lift of length " + std::to_string(l.length()) + ", d = " + std::to_string(d));
        }
      }
      if (same != 1 || out.lifts.size() != 1 + static_cast<size_t>(p - 1) / d) {
        fail("wrong number of lifts");
      }
      break;
    }
  }

  if (c.cls == CycleClass::Grows && p >= 3) {
    out.growth_rule_applied = true;
    const bool expected = p >= 5 || n >= 2 || c.beta != c.gamma;
    if ((out.lifts[0].cls == CycleClass::Grows) != expected) {
      fail(expected ? "growing cycle has a non-growing lift"
                    : "lift grows although beta_1 = (g''/2)(x) mod 3");
    }
  }
  return out;
}

// ---------------------------------------------------------------- minimality

std::vector<LevelMinimality> minimality_check(const PadicPolynomial& f, const ResidueSet& domain,
                                              int n_max) {
  std::vector<LevelMinimality> out;
  for (int n = 1; n <= n_max; ++n) {
    const LevelMap m = build_level_map(f, domain, n);
    std::vector<size_t> next(m.size());
    for (size_t i = 0; i < m.size(); ++i) next[i] = m.index_of(m.images()[i]);
    const Graph g = functional_graph(next);
    const bool single = g.cycles.size() == 1 && g.cycles.front().size() == m.size();
    out.push_back({n, single, g.cycles.size(), m.size()});
  }
  return out;
}

bool minimal_to_depth(const PadicPolynomial& f, const ResidueSet& domain, int n_max) {
  try {
    const auto levels = minimality_check(f, domain, n_max);
    return std::all_of(levels.begin(), levels.end(), [](const LevelMinimality& l) { return l.minimal; });
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DomainNotInvariant) throw;
    return false;
  }
}

// ---------------------------------------------------------------- attracting cycles

GrowsTailsBasin grows_tails_basin(const PadicPolynomial& f, const CycleRecord& c, int precision,
                                  long samples, std::mt19937_64& rng) {
  if (c.cls != CycleClass::GrowsTails) {
    throw Error(ErrorCode::PreconditionViolated, "cycle does not grow tails");
  }
  const long p = f.prime();
  const int n = c.level;
  const long k = static_cast<long>(c.length());
  const long P = precision + 8;
  const JetEvaluator J(f, P);
  const mpz_class& big = J.modulus();

  // Newton on g(x) - x with g = f^k; g' - 1 is a unit since g' = 0 mod p.
  mpz_class x(static_cast<unsigned long>(c.first()));
  bool done = false;
  for (int it = 0; it < 64 && !done; ++it) {
    const Jet jet = J.iterate(x, k);
    const mpz_class G = mod(jet.value - x, big);
    if (G == 0) {
      done = true;
      break;
    }
    mpz_class inv;
    const mpz_class dG = mod(jet.d1 - 1, big);
    mpz_invert(inv.get_mpz_t(), dG.get_mpz_t(), big.get_mpz_t());
    x = mod(x - G * inv, big);
  }
  if (!done) throw Error(ErrorCode::NoConvergence, "periodic point iteration did not converge");

  GrowsTailsBasin out;
  out.cycle = c;
  out.precision = precision;
  std::vector<mpz_class> orbit{x};
  for (long i = 1; i < k; ++i) orbit.push_back(J.value(orbit.back()));
  const mpz_class& pn = prime_power(p, n);
  const mpz_class& pr = prime_power(p, precision);
  for (long i = 0; i < k; ++i) {
    if (mod(orbit[static_cast<size_t>(i)], pn) != static_cast<unsigned long>(c.elements[static_cast<size_t>(i)])) {
      throw Error(ErrorCode::InternalInconsistency, "periodic point left its residue class");
    }
    out.orbit.push_back(mod(orbit[static_cast<size_t>(i)], pr));
  }

  const auto dist = [&](const mpz_class& a, const mpz_class& b) {
    const mpz_class d = mod(a - b, big);
    return d == 0 ? P : valuation(d, p);
  };
  for (long s = 0; s < samples; ++s) {
    const size_t i = static_cast<size_t>(rng() % static_cast<u64>(k));
    mpz_class y = orbit[i] + pn * random_residue(p, P - n, rng);
    y = mod(y, big);
    long d = dist(y, orbit[i]);
    long periods = 0;
    while (d < precision) {
      for (long j = 0; j < k; ++j) y = J.value(y);
      const long d2 = dist(y, orbit[i]);
      if (d2 <= d) out.monotone = false;
      d = d2;
      if (++periods > precision + 16) {
        throw Error(ErrorCode::NoConvergence, "sample not attracted to the periodic orbit");
      }
    }
    ++out.samples;
    ++out.converged;
    out.max_periods = std::max(out.max_periods, periods);
  }
  return out;
}

// ---------------------------------------------------------------- decomposition

int default_depth(long p) {
  if (p == 2) return 12;
  if (p == 3) return 8;
  if (p == 5) return 6;
  return 4;
}

namespace {

constexpr size_t kMaxDecompositionItems = 1'000'000;

class Decomposer {
 public:
  Decomposer(const PadicPolynomial& f, int n_max, int precision, long samples, std::uint64_t seed,
             DecompositionReport& out)
      : f_(f), p_(f.prime()), n_max_(n_max), precision_(precision), samples_(samples),
        rng_(seed), out_(out) {}

  void process(const CycleRecord& c, bool predicted_growth) {
    guard();
    switch (c.cls) {
      case CycleClass::GrowsTails: {
        PeriodicComponent pc{grows_tails_basin(f_, c, precision_, samples_, rng_), balls_of(p_, c)};
        const std::string label = "P" + std::to_string(out_.periodic.size());
        for (u64 x : c.elements) out_.basins.push_back({{x, c.level}, label});
        out_.periodic.push_back(std::move(pc));
        return;
      }
      case CycleClass::Grows:
        grow(c, predicted_growth);
        return;
      case CycleClass::Splits:
      case CycleClass::PartiallySplits:
        if (c.level >= n_max_) {
          for (u64 x : c.elements) out_.undecided.push_back({x, c.level});
          return;
        }
        split(c, predicted_growth);
        return;
    }
  }

 private:
  void guard() const {
    if (out_.undecided.size() + out_.minimal.size() + out_.basins.size() > kMaxDecompositionItems) {
      throw Error(ErrorCode::SizeGuard, "decomposition exceeded 10^6 components");
    }
  }

  CycleLifts lift(const CycleRecord& c) {
    CycleLifts l = lift_cycles(f_, c);
    ++out_.lifts_checked;
    return l;
  }

  void grow(const CycleRecord& c, bool predicted_growth) {
    if (grows_forever(c, p_)) {
      out_.minimal.push_back({balls_of(p_, c), c.level, c.length(),
                              predicted_growth ? MinimalCertificate::SplitThenGrow
                                               : MinimalCertificate::GrowthRule,
                              c.level});
      return;
    }
    CycleRecord cur = c;
    while (cur.level < n_max_) {
      CycleLifts l = lift(cur);
      if (l.lifts[0].cls != CycleClass::Grows) {
        process(l.lifts[0], predicted_growth);
        return;
      }
      cur = l.lifts[0];
      if (grows_forever(cur, p_)) break;
    }
    const bool certified = grows_forever(cur, p_);
    out_.minimal.push_back({balls_of(p_, c), c.level, c.length(),
                            certified ? MinimalCertificate::GrowthRule
                                      : MinimalCertificate::DepthOnly,
                            cur.level});
  }

  void split(const CycleRecord& c, bool predicted_growth) {
    CycleLifts l = lift(c);
    if (c.cls == CycleClass::PartiallySplits && p_ >= 3) {
      const long d = multiplicative_order(static_cast<long>(c.alpha), p_);
      for (const auto& child : l.lifts) {
        if (child.length() == c.length()) continue;
        const CappedValuation& A = child.A;
        if (!A.lower_bound && A.value < c.level * d) {
          check_split_then_grow(child, A.value);
          process(child, true);
        } else {
          process(child, predicted_growth);
        }
      }
      for (const auto& child : l.lifts) {
        if (child.length() == c.length()) process(child, predicted_growth);
      }
      return;
    }
    for (const auto& child : l.lifts) process(child, predicted_growth);
  }

  // A length-kd lift at level n+1 with A_{n+1} < nd splits A_{n+1} - 1
  // times, after which every descendant grows. Checked while the tree stays
  // small and within the explored depth.
  void check_split_then_grow(const CycleRecord& lifted, long A) {
    const int grow_level = lifted.level - 1 + static_cast<int>(A);
    if (grow_level > n_max_ || A > 12) return;
    std::vector<CycleRecord> frontier{lifted};
    for (int level = lifted.level; level < grow_level; ++level) {
      std::vector<CycleRecord> next;
      for (const auto& r : frontier) {
        if (r.cls != CycleClass::Splits) {
          throw Error(ErrorCode::InternalInconsistency,
                      "lift at " + std::to_string(r.first()) + " mod p^" +
                          std::to_string(r.level) + " should split (A = " + std::to_string(A) +
                          ")");
        }
        for (auto& child : lift(r).lifts) next.push_back(std::move(child));
      }
      frontier = std::move(next);
      if (frontier.size() > 100000) return;
    }
    for (const auto& r : frontier) {
      if (r.cls != CycleClass::Grows) {
        throw Error(ErrorCode::InternalInconsistency,
                    "descendant at " + std::to_string(r.first()) + " mod p^" +
                        std::to_string(r.level) + " should grow (A = " + std::to_string(A) + ")");
      }
    }
    ++out_.split_then_grow_checked;
  }

  const PadicPolynomial& f_;
  long p_;
  int n_max_;
  int precision_;
  long samples_;
  std::mt19937_64 rng_;
  DecompositionReport& out_;
};

}  // namespace

DecompositionReport minimal_decomposition(const PadicPolynomial& f, const ResidueSet& domain,
                                          int n_max, int basin_precision, long basin_samples,
                                          std::uint64_t seed) {
  DecompositionReport out;
  out.prime = f.prime();
  out.domain = domain.to_string();
  out.start_level = std::max(1, domain.finest_exponent());
  out.n_max = std::max(n_max, out.start_level);

  const LevelMap m = build_level_map(f, domain, out.start_level);
  const LevelCycles lc = cycles_at_level(m);
  const std::string pow = std::to_string(out.prime) + "^" + std::to_string(out.start_level);
  for (const auto& t : lc.tails) {
    out.basins.push_back({{t.residue, out.start_level},
                          "cycle " + std::to_string(lc.cycles[t.cycle].first()) + " mod " + pow});
  }
  Decomposer d(f, out.n_max, basin_precision, basin_samples, seed, out);
  for (const auto& c : lc.cycles) d.process(c, false);

  const auto by_class = [](const ResidueClass& a, const ResidueClass& b) {
    return a.residue != b.residue ? a.residue < b.residue : a.exponent < b.exponent;
  };
  std::sort(out.undecided.begin(), out.undecided.end(), by_class);
  std::stable_sort(out.basins.begin(), out.basins.end(),
                   [&](const BasinAssignment& a, const BasinAssignment& b) {
                     return by_class(a.cls, b.cls);
                   });
  return out;
}

}  // namespace padyn
