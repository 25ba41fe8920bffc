#pragma once

// Theorem-by-theorem verification of the family's dynamics: each check
// produces itemized evidence, marked exact, sampled or depth-bounded.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "padyn/beverton.hpp"

namespace padyn {

enum class Exactness { Exact, Sampled, DepthBounded };

std::string_view to_string(Exactness e) noexcept;

using Datum = std::variant<bool, long, std::string, std::vector<long>, std::vector<std::string>>;

struct Evidence {
  std::string claim;
  Exactness exactness = Exactness::Exact;
  std::optional<int> depth;
  bool holds = false;
  std::vector<std::pair<std::string, Datum>> data;
};

struct Budget {
  int depth = 6;
  int iterations = 60;
  long samples = 100;
  int precision = 40;
};

struct VerificationReport {
  std::string theorem;
  std::string regime;
  bool pass = false;
  std::vector<Evidence> evidence;
};

/// Theorem tags accepted by verify_theorem.
const std::vector<std::string>& theorem_tags();

/// Throws RegimeMismatch when fp lies outside the theorem's hypotheses and
/// PreconditionViolated for an unknown tag.
VerificationReport verify_theorem(std::string_view tag, const FamilyParams& fp,
                                  const Budget& budget, std::uint64_t seed = 1);

}  // namespace padyn
