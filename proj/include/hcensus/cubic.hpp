#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hcensus/surfaces.hpp"

namespace hcensus {

/// A smooth curve class a*l - sum b_i e_i on a smooth cubic surface S_6 with
/// degree 3a - sum b_i and genus from adjunction. b is sorted non-increasing;
/// orbit_size counts the distinct permutations of b.
struct CubicClassSolution {
  BlowupClass cls;
  std::int64_t d = 0;
  std::int64_t g = 0;
  std::optional<BlowupClass> line;  // cls - 3H when that is a (-1)-curve
  std::int64_t orbit_size = 1;
};

/// Range of a allowed by (sum b)^2 <= 6 sum b^2 with sum b = 3a - d and
/// sum b^2 = a^2 - (2g - 2 + d); nullopt when empty.
std::optional<std::pair<std::int64_t, std::int64_t>> schwartz_a_range(std::int64_t d, std::int64_t g);

/// Every class with b_i >= 0, b non-increasing, 3a - sum b = d and
/// a^2 - sum b^2 = 2g - 2 + d. Sorted by (a, b).
std::vector<CubicClassSolution> classify_cubic_classes(std::int64_t d, std::int64_t g);

/// The hyperplane class H = -K = (3;1^6) of the cubic.
BlowupClass cubic_hyperplane();

/// cls - 3H if it is one of the 27 lines, else nullopt.
std::optional<BlowupClass> line_decomposition(const BlowupClass& cls);

/// 2K + C, the class cutting K_C - H on the curve.
BlowupClass cubic_residual(const BlowupClass& cls);

enum class ConeGenus { ThroughVertex, OffVertex, Impossible };
const char* cone_genus_name(ConeGenus c) noexcept;

/// Genus test for a smooth curve on a normal cubic cone:
/// g = 1 + d(d-3)/6 - 2/3 through the vertex, g = 1 + d(d-3)/6 otherwise.
ConeGenus cone_genus_test(std::int64_t d, std::int64_t g);

/// Integer k in [1, floor((2d-2)/3)] with (2d - 3k - 2)(k - 1) = 2g, the
/// genus of a curve of class kh + (d-3k)f on the desingularised non-normal
/// cubic; nullopt when there is none.
std::optional<std::int64_t> ruled_cubic_genus_solvable(std::int64_t d, std::int64_t g);

/// dim X_{n,h}: curves of genus g that are n-fold covers of a genus-h curve.
std::int64_t covering_locus_dim(std::int64_t g, std::int64_t n, std::int64_t h);

struct TripleCoverBound {
  std::int64_t w_bound = 0;     // Mumford bound on dim W^3_10 for a non-special curve
  std::int64_t family_dim = 0;  // dim X_{3,1}
  std::int64_t total() const noexcept { return w_bound + family_dim; }
};

/// Bound for series g^3_10 on triple covers of elliptic curves of genus g.
TripleCoverBound triple_cover_dim_bound(std::int64_t g);

}  // namespace hcensus
