#include "hcensus/cubic.hpp"

#include <array>
#include <cmath>
#include <map>

#include "hcensus/checked.hpp"
#include "hcensus/errors.hpp"

namespace hcensus {

using namespace checked;

namespace {

constexpr std::size_t kCubicPoints = 6;

i64 isqrt(i64 v) {
  i64 s = static_cast<i64>(std::sqrt(static_cast<long double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

bool in_schwartz_range(i64 a, i64 d, i64 c) {
  // 3a^2 - 6da + d^2 + 6c <= 0
  return add(add(sub(mul(3, sq(a)), mul(mul(6, d), a)), sq(d)), mul(6, c)) <= 0;
}

// Non-increasing b[pos..5] with each entry <= cap, summing to sum with squares
// summing to sumsq.
void fill_tuples(std::array<i64, kCubicPoints>& b, std::size_t pos, i64 cap, i64 sum, i64 sumsq,
                 std::vector<std::array<i64, kCubicPoints>>& out) {
  const i64 slots = static_cast<i64>(kCubicPoints - pos);
  if (slots == 0) {
    if (sum == 0 && sumsq == 0) out.push_back(b);
    return;
  }
  if (sum < 0 || sumsq < 0) return;
  // Cauchy-Schwarz on the remaining slots and the cap bound.
  if (sum * sum > slots * sumsq || sum > slots * cap || sumsq > cap * sum) return;
  for (i64 v = std::min(cap, sum); v >= 0; --v) {
    if (v * v > sumsq) continue;
    b[pos] = v;
    fill_tuples(b, pos + 1, v, sum - v, sumsq - v * v, out);
  }
}

i64 orbit_size(const std::array<i64, kCubicPoints>& b) {
  std::map<i64, i64> mult;
  for (auto v : b) ++mult[v];
  i64 size = 720;
  for (auto [v, k] : mult)
    for (i64 i = 2; i <= k; ++i) size /= i;
  return size;
}

}  // namespace

std::optional<std::pair<std::int64_t, std::int64_t>> schwartz_a_range(std::int64_t d, std::int64_t g) {
  const i64 c = add(sub(mul(2, g), 2), d);
  const i64 disc = sub(mul(24, sq(d)), mul(72, c));
  if (disc < 0) return std::nullopt;
  const i64 s = isqrt(disc);
  i64 lo = floor_div(sub(mul(6, d), s), 6) - 1;
  i64 hi = floor_div(add(mul(6, d), s), 6) + 2;
  while (lo <= hi && !in_schwartz_range(lo, d, c)) ++lo;
  while (hi >= lo && !in_schwartz_range(hi, d, c)) --hi;
  if (lo > hi) return std::nullopt;
  return std::pair{lo, hi};
}

std::vector<CubicClassSolution> classify_cubic_classes(std::int64_t d, std::int64_t g) {
  require(d >= 1 && g >= 0, "classify_cubic_classes needs d >= 1 and g >= 0");
  std::vector<CubicClassSolution> out;
  const auto range = schwartz_a_range(d, g);
  if (!range) return out;
  const i64 c = add(sub(mul(2, g), 2), d);
  for (i64 a = range->first; a <= range->second; ++a) {
    const i64 sum = sub(mul(3, a), d);
    const i64 sumsq = sub(sq(a), c);
    if (sum < 0 || sumsq < 0) continue;
    std::array<i64, kCubicPoints> b{};
    std::vector<std::array<i64, kCubicPoints>> tuples;
    fill_tuples(b, 0, sum, sum, sumsq, tuples);
    // fill_tuples emits descending lexicographic order; report ascending.
    for (auto it = tuples.rbegin(); it != tuples.rend(); ++it) {
      BlowupClass cls(a, std::vector<i64>(it->begin(), it->end()));
      out.push_back({cls, d, g, line_decomposition(cls), orbit_size(*it)});
    }
  }
  return out;
}

BlowupClass cubic_hyperplane() { return BlowupClass::canonical(kCubicPoints) * -1; }

std::optional<BlowupClass> line_decomposition(const BlowupClass& cls) {
  require(cls.n() == kCubicPoints, "line_decomposition needs a class on S_6");
  const auto rest = cls - cubic_hyperplane() * 3;
  for (const auto& e : neg_curves(kCubicPoints))
    if (e == rest) return rest;
  return std::nullopt;
}

BlowupClass cubic_residual(const BlowupClass& cls) { return BlowupClass::canonical(cls.n()) * 2 + cls; }

const char* cone_genus_name(ConeGenus c) noexcept {
  switch (c) {
    case ConeGenus::ThroughVertex: return "through-vertex";
    case ConeGenus::OffVertex: return "off-vertex";
    case ConeGenus::Impossible: return "impossible";
  }
  return "impossible";
}

ConeGenus cone_genus_test(std::int64_t d, std::int64_t g) {
  require(d >= 3, "cone_genus_test needs d >= 3");
  // Both formulas scaled by 6 so they compare exactly in integers:
  // 6g = 6 + d(d-3) - 4 through the vertex, 6g = 6 + d(d-3) otherwise.
  const i64 six_g = mul(6, g);
  const i64 off = add(6, mul(d, d - 3));
  if (six_g == off - 4) return ConeGenus::ThroughVertex;
  if (six_g == off) return ConeGenus::OffVertex;
  return ConeGenus::Impossible;
}

std::optional<std::int64_t> ruled_cubic_genus_solvable(std::int64_t d, std::int64_t g) {
  require(d >= 3, "ruled_cubic_genus_solvable needs d >= 3");
  const i64 two_g = mul(2, g);
  for (i64 k = 1; k <= (2 * d - 2) / 3; ++k)
    if (mul(sub(sub(mul(2, d), mul(3, k)), 2), k - 1) == two_g) return k;
  return std::nullopt;
}

std::int64_t covering_locus_dim(std::int64_t g, std::int64_t n, std::int64_t h) {
  require(n >= 2 && h >= 0, "covering_locus_dim needs n >= 2 and h >= 0");
  return sub(add(mul(2, g), mul(sub(mul(2, n), 3), sub(1, h))), 2);
}

TripleCoverBound triple_cover_dim_bound(std::int64_t g) {
  require(g >= 3, "triple_cover_dim_bound needs g >= 3");
  // Mumford: dim W^r_d(C) <= d - 2r - 2 for C not hyperelliptic, trigonal,
  // bielliptic or a smooth plane quintic; here r = 3, d = 10.
  return {10 - 2 * 3 - 2, covering_locus_dim(g, 3, 1)};
}

}  // namespace hcensus
