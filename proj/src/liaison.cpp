#include "hcensus/liaison.hpp"

#include "hcensus/checked.hpp"
#include "hcensus/errors.hpp"

namespace hcensus {

using namespace checked;

LiaisonStep linked_genus(std::int64_t d, std::int64_t g, std::int64_t s, std::int64_t t) {
  require(s >= 2 && t >= 2, "linked_genus needs s, t >= 2");
  require(d >= 1, "linked_genus needs d >= 1");
  const i64 st = mul(s, t);
  require(st > d, "linked_genus needs s*t > d");
  LiaisonStep out{d, g, s, t, sub(st, d), 0};
  const i64 twice = mul(add(s, t) - 4, sub(d, out.e));
  if (twice % 2 != 0) fail(ErrorKind::NoIntegralLinkage, "no integral linkage: (s+t-4)(d-e) is odd");
  out.h = sub(g, twice / 2);
  if (mul(2, sub(out.g, out.h)) != twice) fail(ErrorKind::Precondition, "linkage genus identity failed");
  return out;
}

std::int64_t surfaces_through(std::int64_t d, std::int64_t g, std::int64_t m) {
  require(m >= 1 && d >= 1, "surfaces_through needs m, d >= 1");
  require(mul(m, d) > sub(mul(2, g), 2), "surfaces_through needs m*d > 2g-2 (O_C(m) nonspecial)");
  const i64 forms = (m + 3) * (m + 2) * (m + 1) / 6;
  return sub(forms, add(sub(mul(m, d), g), 1));
}

std::int64_t grassmann_dim(std::int64_t k, std::int64_t n) {
  require(k >= 0 && k <= n, "grassmann_dim needs 0 <= k <= n");
  return mul(k + 1, n - k);
}

LinkageAccount linkage_dimension_account(std::int64_t d, std::int64_t g, std::int64_t s, std::int64_t t,
                                         std::int64_t dim_residual_hilbert) {
  require(s == t, "linkage_dimension_account needs s == t");
  require(dim_residual_hilbert >= 0, "dim_residual_hilbert must be >= 0");
  LinkageAccount out;
  out.step = linked_genus(d, g, s, t);
  out.surfaces_through_residual = surfaces_through(out.step.e, out.step.h, s);
  out.surfaces_through_source = surfaces_through(d, g, s);
  require(out.surfaces_through_residual >= 2 && out.surfaces_through_source >= 2,
          "linkage_dimension_account needs a pencil of surfaces through both curves");
  out.fiber_down = grassmann_dim(1, out.surfaces_through_residual - 1);
  out.sigma_dim = add(out.fiber_down, dim_residual_hilbert);
  out.fiber_up = grassmann_dim(1, out.surfaces_through_source - 1);
  out.component_dim = sub(out.sigma_dim, out.fiber_up);
  out.citations = {"h1(I_C(" + std::to_string(s) + ")) = 0 for the general curve (quoted)",
                   "dim of the residual Hilbert scheme (quoted)"};
  return out;
}

}  // namespace hcensus
