#pragma once

// Dynamics of polynomials f in Z_p[x] through their reductions
// f_(n) : Z/p^n -> Z/p^n. Cycles of f_(n) are classified by
//   alpha_n = (f^k)'(x_1),  beta_n = (f^k(x_1) - x_1) / p^n
// into grows / splits / grows-tails / partially-splits, lifted level by
// level, and assembled into a depth-bounded periodic / minimal / basin
// decomposition of a domain.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "padyn/integer.hpp"
#include "padyn/polynomial.hpp"
#include "padyn/residue_set.hpp"

namespace padyn {

enum class CycleClass { Grows, Splits, GrowsTails, PartiallySplits };

std::string_view to_string(CycleClass c) noexcept;

/// A valuation computed from a value known mod p^cap; when the value
/// vanishes there, only the bound v >= cap is known.
struct CappedValuation {
  long value = 0;
  bool lower_bound = false;

  friend bool operator==(const CappedValuation&, const CappedValuation&) = default;
  std::string to_string() const;
};

class LevelMap {
 public:
  LevelMap(PadicPolynomial f, ResidueSet domain, int level, std::vector<u64> elements,
           std::vector<u64> images);

  long prime() const noexcept { return f_.prime(); }
  int level() const noexcept { return level_; }
  u64 modulus() const noexcept { return modulus_; }
  const PadicPolynomial& polynomial() const noexcept { return f_; }
  const ResidueSet& domain() const noexcept { return domain_; }
  /// Domain residues mod p^level, ascending.
  const std::vector<u64>& elements() const noexcept { return elements_; }
  const std::vector<u64>& images() const noexcept { return images_; }
  size_t size() const noexcept { return elements_.size(); }

  size_t index_of(u64 x) const;
  u64 operator()(u64 x) const { return images_[index_of(x)]; }

 private:
  PadicPolynomial f_;
  ResidueSet domain_;
  int level_;
  u64 modulus_;
  bool dense_;
  std::vector<u64> elements_;
  std::vector<u64> images_;
};

/// Largest table build_level_map will construct.
inline constexpr u64 kLevelMapLimit = 10'000'000;

/// Throws PreconditionViolated for f outside Z_p[x], DomainNotInvariant if
/// some image leaves the domain, SizeGuard above kLevelMapLimit residues.
LevelMap build_level_map(const PadicPolynomial& f, const ResidueSet& domain, int n);

struct CycleRecord {
  int level = 0;
  /// Orbit order, starting at the smallest residue.
  std::vector<u64> elements;
  /// alpha_n, beta_n and (f^k)''(x_1)/2, each mod p.
  u64 alpha = 0;
  u64 beta = 0;
  u64 gamma = 0;
  CappedValuation A;
  CappedValuation B;
  CycleClass cls = CycleClass::Grows;

  size_t length() const noexcept { return elements.size(); }
  u64 first() const noexcept { return elements.front(); }
};

/// Extra p-adic digits carried beyond the level when classifying.
inline constexpr int kClassifyExtraDigits = 8;

/// Throws NotACycle unless f maps x_i to x_{i+1} mod p^n cyclically.
CycleRecord classify_cycle(const PadicPolynomial& f, const std::vector<u64>& cycle, int n,
                           int extra_digits = kClassifyExtraDigits);

struct TailEdge {
  u64 residue;
  u64 image;
  /// Index into LevelCycles::cycles of the cycle this residue flows into.
  size_t cycle;
};

struct LevelCycles {
  int level = 0;
  std::vector<CycleRecord> cycles;
  std::vector<TailEdge> tails;
};

/// Every cycle of the functional graph, classified, plus the pre-periodic
/// residues. Cycles are sorted by smallest residue.
LevelCycles cycles_at_level(const LevelMap& m);

struct CycleLifts {
  std::vector<CycleRecord> lifts;
  /// Whether the grows-forever rule for growing cycles applied to this lift.
  bool growth_rule_applied = false;
};

/// Cycles of f_(n+1) on the preimage of c, checked against the lift table:
/// grows -> one lift of length kp; splits -> p lifts of length k (both
/// grow or split); grows tails -> one lift of length k that grows tails;
/// partially splits -> one partially splitting lift of length k and
/// (p-1)/d lifts of length kd that grow or split, d = ord(alpha_n).
/// A growing cycle with p >= 5, or p = 3 and n >= 2, must have a growing
/// lift; for p = 3, n = 1 the lift grows iff beta_1 != gamma mod 3.
/// Violations throw InternalInconsistency.
CycleLifts lift_cycles(const PadicPolynomial& f, const CycleRecord& c);

/// True when a growing cycle is known to grow at every higher level.
bool grows_forever(const CycleRecord& c, long p);

struct LevelMinimality {
  int level;
  bool minimal;
  size_t cycles;
  size_t states;
};

/// For n = 1..n_max: whether f_(n) is a single cycle on the domain.
std::vector<LevelMinimality> minimality_check(const PadicPolynomial& f, const ResidueSet& domain,
                                              int n_max);

/// Every level 1..n_max is a single cycle; false when the domain is not
/// invariant.
bool minimal_to_depth(const PadicPolynomial& f, const ResidueSet& domain, int n_max);

struct GrowsTailsBasin {
  CycleRecord cycle;
  /// The k-periodic orbit, aligned with cycle.elements, mod p^precision.
  std::vector<mpz_class> orbit;
  int precision = 0;
  long samples = 0;
  long converged = 0;
  /// Largest number of periods any sample needed.
  long max_periods = 0;
  /// Every sampled distance sequence increased strictly in valuation.
  bool monotone = true;
};

/// Requires c.cls == GrowsTails. Throws NoConvergence if a sample fails to
/// reach the orbit.
GrowsTailsBasin grows_tails_basin(const PadicPolynomial& f, const CycleRecord& c, int precision,
                                  long samples, std::mt19937_64& rng);

struct PeriodicComponent {
  GrowsTailsBasin basin;
  ResidueSet balls;
};

enum class MinimalCertificate { GrowthRule, SplitThenGrow, DepthOnly };

std::string_view to_string(MinimalCertificate c) noexcept;

struct MinimalComponent {
  ResidueSet set;
  int level;
  size_t cycle_length;
  MinimalCertificate certificate;
  /// Level up to which the single-cycle property was checked directly.
  int depth_checked;
  bool certified() const noexcept { return certificate != MinimalCertificate::DepthOnly; }
};

struct BasinAssignment {
  ResidueClass cls;
  /// "P<i>" for a periodic component, or "cycle <r> mod p^<n>" for the
  /// level cycle a tail class flows into.
  std::string target;
};

struct DecompositionReport {
  long prime = 0;
  std::string domain;
  int start_level = 1;
  int n_max = 0;
  std::vector<PeriodicComponent> periodic;
  std::vector<MinimalComponent> minimal;
  std::vector<BasinAssignment> basins;
  std::vector<ResidueClass> undecided;
  /// Number of lifts cross-checked against the lift table.
  long lifts_checked = 0;
  /// Predictions "splits A-1 times, then grows" that were confirmed.
  long split_then_grow_checked = 0;
};

/// Default depth per prime: 2 -> 12, 3 -> 8, 5 -> 6, otherwise 4.
int default_depth(long p);

DecompositionReport minimal_decomposition(const PadicPolynomial& f, const ResidueSet& domain,
                                          int n_max, int basin_precision = 24,
                                          long basin_samples = 20, std::uint64_t seed = 1);

}  // namespace padyn
