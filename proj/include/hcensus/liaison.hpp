#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hcensus {

/// A curve (d, g) and its residual (e, h) in a complete intersection of
/// surfaces of degrees s and t.
struct LiaisonStep {
  std::int64_t d = 0;
  std::int64_t g = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::int64_t e = 0;
  std::int64_t h = 0;
};

/// e = st - d and h = g - (s+t-4)(d-e)/2. Requires s, t >= 2, d >= 1,
/// st > d; NoIntegralLinkage when (s+t-4)(d-e) is odd.
LiaisonStep linked_genus(std::int64_t d, std::int64_t g, std::int64_t s, std::int64_t t);

/// Independent surfaces of degree m through a curve of degree d and genus g,
/// binom(m+3, 3) - (md - g + 1). Requires md > 2g - 2 so that O_C(m) is
/// nonspecial.
std::int64_t surfaces_through(std::int64_t d, std::int64_t g, std::int64_t m);

/// dim G(k, n) = (k+1)(n-k) for 0 <= k <= n.
std::int64_t grassmann_dim(std::int64_t k, std::int64_t n);

/// Dimension count for the family of curves linked to a family of residuals:
/// pairs (residual, pencil of degree-s surfaces through it) map onto the
/// linked curves with fibres the pencils through the linked curve.
struct LinkageAccount {
  LiaisonStep step;
  std::int64_t surfaces_through_source = 0;
  std::int64_t surfaces_through_residual = 0;
  std::int64_t fiber_down = 0;  // dim G(1, N_residual - 1)
  std::int64_t sigma_dim = 0;   // fiber_down + dim of the residual family
  std::int64_t fiber_up = 0;    // dim G(1, N_source - 1)
  std::int64_t component_dim = 0;
  std::vector<std::string> citations;
};

/// Requires s == t; dim_residual_hilbert is the (quoted) dimension of the
/// Hilbert scheme of the residual curves.
LinkageAccount linkage_dimension_account(std::int64_t d, std::int64_t g, std::int64_t s, std::int64_t t,
                                         std::int64_t dim_residual_hilbert);

}  // namespace hcensus
