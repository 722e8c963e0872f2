#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hcensus {

struct NamedCheck {
  std::string name;
  bool value = false;
};

/// Construction of a g^r_{g+r-4} as |K - n*g^1_k - D| on a general k-gonal
/// curve, D a divisor of extra_points general points.
struct GonalRecipe {
  std::int64_t g = 0;
  std::int64_t r = 0;
  std::int64_t e = 0;             // residual degree g - r + 2 = 3k + extra_points
  std::int64_t k = 0;
  std::int64_t n = 3;
  std::int64_t extra_points = 0;  // deg D, in {0,1,2}
  std::int64_t m = 0;             // 2 + extra_points
  std::vector<NamedCheck> conditions;
  // Open genericity conditions on D that no finite check can confirm.
  std::vector<std::string> assumptions;

  bool valid() const noexcept;
  std::int64_t series_degree() const noexcept { return g + r - 4; }
  std::int64_t series_dim() const noexcept { return r; }
};

/// dim|n g^1_k + D| = n for deg D = m when 2k - g - 2 < 0 and
/// g >= 2m + n(k-1). Requires k >= 2, m >= 0, n >= 0.
bool ckm_condition(std::int64_t g, std::int64_t k, std::int64_t m, std::int64_t n);

/// The recipe for (g, r) with every condition evaluated, valid or not.
/// Requires r >= 3 and g - r + 2 >= 0.
GonalRecipe recipe_candidate(std::int64_t g, std::int64_t r);

/// recipe_candidate when all of its conditions hold, else nullopt.
std::optional<GonalRecipe> existence_recipe(std::int64_t g, std::int64_t r);

/// Every (k, f) with k >= 2, f >= 3, k*f <= e: a compounded g^3_e factoring
/// through a degree-k cover onto a curve of degree f. Sorted by k ascending,
/// then f descending. Requires e >= 6.
std::vector<std::pair<std::int64_t, std::int64_t>> compounded_cases(std::int64_t e);

/// What the (k, f) case means for e in {10, 11}; empty otherwise.
std::string compounded_interpretation(std::int64_t k, std::int64_t f);

/// For e = g - r + 2 in {10, 11}: true iff g > pi(e, 3), where every g^3_e
/// is compounded and its residual cannot be very ample. Scope error for
/// other e, precondition error when e != g - r + 2.
bool compounded_excludes_very_ample(std::int64_t e, std::int64_t g, std::int64_t r);

}  // namespace hcensus
