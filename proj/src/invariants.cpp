#include "hcensus/invariants.hpp"

#include <string>

#include "hcensus/checked.hpp"
#include "hcensus/errors.hpp"

namespace hcensus {

using namespace checked;

Triple::Triple(std::int64_t d, std::int64_t g, std::int64_t r) : d_(d), g_(g), r_(r) {
  require(d >= 1, "triple degree must be >= 1 (got " + std::to_string(d) + ")");
  require(g >= 0, "triple genus must be >= 0 (got " + std::to_string(g) + ")");
  require(r >= 1, "triple ambient dimension must be >= 1 (got " + std::to_string(r) + ")");
}

std::int64_t Triple::alpha() const { return add(sub(g_, d_), r_); }

std::int64_t rho(const Triple& t) { return sub(t.g(), mul(add(t.r(), 1), t.alpha())); }

std::int64_t lambda(const Triple& t) { return add(sub(mul(3, t.g()), 3), rho(t)); }

std::int64_t chi_min(const Triple& t) { return add(lambda(t), sub(sq(add(t.r(), 1)), 1)); }

std::int64_t castelnuovo_pi(std::int64_t d, std::int64_t r) {
  require(r >= 3, "castelnuovo_pi needs r >= 3");
  require(d >= r, "castelnuovo_pi needs d >= r (no non-degenerate curve of degree " +
                      std::to_string(d) + " in P^" + std::to_string(r) + ")");
  const i64 m = (d - 1) / (r - 1);
  const i64 eps = sub(sub(d, 1), mul(m, r - 1));
  // m(m-1)/2 is integral; multiply afterwards to stay exact.
  return add(mul(mul(m, m - 1) / 2, r - 1), mul(m, eps));
}

std::optional<std::int64_t> try_castelnuovo_pi(std::int64_t d, std::int64_t r) {
  if (r < 3 || d < r) return std::nullopt;
  return castelnuovo_pi(d, r);
}

std::int64_t castelnuovo_pi1_r3(std::int64_t d) {
  require(d >= 7, "castelnuovo_pi1_r3 needs d >= 7");
  return add(mul(d, d - 3) / 6, 1);
}

}  // namespace hcensus
