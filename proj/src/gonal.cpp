#include "hcensus/gonal.hpp"

#include <algorithm>

#include "hcensus/checked.hpp"
#include "hcensus/errors.hpp"
#include "hcensus/invariants.hpp"

namespace hcensus {

using namespace checked;

bool GonalRecipe::valid() const noexcept {
  return std::all_of(conditions.begin(), conditions.end(), [](const NamedCheck& c) { return c.value; });
}

bool ckm_condition(std::int64_t g, std::int64_t k, std::int64_t m, std::int64_t n) {
  require(k >= 2 && m >= 0 && n >= 0, "ckm_condition needs k >= 2, m >= 0, n >= 0");
  return sub(sub(mul(2, k), g), 2) < 0 && g >= add(mul(2, m), mul(n, k - 1));
}

GonalRecipe recipe_candidate(std::int64_t g, std::int64_t r) {
  require(r >= 3, "existence_recipe needs r >= 3");
  GonalRecipe out;
  out.g = g;
  out.r = r;
  out.e = add(sub(g, r), 2);
  require(out.e >= 0, "existence_recipe needs g - r + 2 >= 0");
  out.k = out.e / 3;
  out.extra_points = out.e % 3;
  out.m = 2 + out.extra_points;
  out.n = 3;

  const bool k_ok = out.k >= 4;
  out.conditions.push_back({"k>=4", k_ok});
  out.conditions.push_back({"2k-g-2<0", sub(sub(mul(2, out.k), g), 2) < 0});
  out.conditions.push_back({"g>=2m+n(k-1)", g >= add(mul(2, out.m), mul(out.n, out.k - 1))});

  if (out.extra_points == 1) out.assumptions.push_back("q is not contained in a divisor of the g^1_k");
  if (out.extra_points == 2) out.assumptions.push_back("q and q' lie in different fibres of the g^1_k");
  return out;
}

std::optional<GonalRecipe> existence_recipe(std::int64_t g, std::int64_t r) {
  auto c = recipe_candidate(g, r);
  if (!c.valid()) return std::nullopt;
  return c;
}

std::vector<std::pair<std::int64_t, std::int64_t>> compounded_cases(std::int64_t e) {
  require(e >= 6, "compounded_cases needs e >= 6");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t k = 2; k * 3 <= e; ++k)
    for (std::int64_t f = e / k; f >= 3; --f) out.emplace_back(k, f);
  return out;
}

std::string compounded_interpretation(std::int64_t k, std::int64_t f) {
  if (k == 2 && f == 5) return "double cover of a genus-2 curve";
  if (k == 2 && f == 4) return "bielliptic";
  if (k == 2 && f == 3) return "hyperelliptic";
  if (k == 3 && f == 3) return "trigonal, series with base locus";
  return {};
}

bool compounded_excludes_very_ample(std::int64_t e, std::int64_t g, std::int64_t r) {
  if (e != 10 && e != 11) fail(ErrorKind::Scope, "compounded_excludes_very_ample covers only e = 10, 11");
  require(e == g - r + 2, "compounded_excludes_very_ample needs e = g - r + 2");
  return g > castelnuovo_pi(e, 3);
}

}  // namespace hcensus
