#pragma once

// Finite unions of residue classes c + p^t Z_p, the domains on which level
// maps are built.

#include <string>
#include <string_view>
#include <vector>

#include "padyn/integer.hpp"
#include "padyn/padic.hpp"

namespace padyn {

struct ResidueClass {
  u64 residue;
  int exponent;

  friend auto operator<=>(const ResidueClass&, const ResidueClass&) = default;
};

class ResidueSet {
 public:
  static ResidueSet all(long p);
  /// The unit sphere S(0,1): residues prime to p.
  static ResidueSet sphere(long p);
  static ResidueSet residue_class(long p, u64 residue, int exponent);
  static ResidueSet from_classes(long p, std::vector<ResidueClass> classes);

  /// "all" | "sphere:1" | "class:c mod p^t" (also "class:c mod m" with m a power of p).
  static ResidueSet parse(long p, std::string_view spec);

  long prime() const noexcept { return prime_; }
  const std::vector<ResidueClass>& classes() const noexcept { return classes_; }

  /// Whether x mod p^level lies in the set (classes finer than the level
  /// are compared modulo p^level).
  bool contains(u64 x, int level) const;
  /// All residues mod p^level in the set, ascending.
  std::vector<u64> elements(int level) const;
  /// Number of residues mod p^level in the set.
  u64 count(int level) const;
  /// Largest class exponent; below it the set is not a union of level classes.
  int finest_exponent() const;

  std::vector<Ball> balls() const;
  /// The CLI syntax for single-class sets, otherwise "c mod p^t | ...".
  std::string to_string() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  ResidueSet(long p, std::vector<ResidueClass> classes);

  long prime_;
  std::vector<ResidueClass> classes_;
};

}  // namespace padyn
