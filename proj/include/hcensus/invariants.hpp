#pragma once

#include <cstdint>
#include <optional>

namespace hcensus {

/// A (degree, genus, ambient dimension) triple naming a Hilbert scheme of
/// curves of degree d and genus g in P^r. Construction validates d, r >= 1
/// and g >= 0.
class Triple {
 public:
  Triple(std::int64_t d, std::int64_t g, std::int64_t r);

  std::int64_t d() const noexcept { return d_; }
  std::int64_t g() const noexcept { return g_; }
  std::int64_t r() const noexcept { return r_; }

  /// Index of speciality g - d + r of a linearly normal curve.
  std::int64_t alpha() const;

  friend bool operator==(const Triple&, const Triple&) = default;

 private:
  std::int64_t d_;
  std::int64_t g_;
  std::int64_t r_;
};

// Brill-Noether number g - (r+1)(g-d+r). Defined for every triple, including
// those outside the Brill-Noether range.
std::int64_t rho(const Triple& t);

// Lower bound 3g - 3 + rho for the dimension of any component of G^r_d.
std::int64_t lambda(const Triple& t);

// Minimal possible dimension of a component of H_{d,g,r}: lambda + dim PGL(r+1).
std::int64_t chi_min(const Triple& t);

/// Castelnuovo bound: maximal arithmetic genus of an irreducible,
/// non-degenerate degree-d curve in P^r. Requires r >= 3 and d >= r.
std::int64_t castelnuovo_pi(std::int64_t d, std::int64_t r);

/// Second Castelnuovo bound in P^3 (curves not on a quadric),
/// floor(d(d-3)/6) + 1. Requires d >= 7.
std::int64_t castelnuovo_pi1_r3(std::int64_t d);

/// castelnuovo_pi when its preconditions hold, otherwise nullopt.
std::optional<std::int64_t> try_castelnuovo_pi(std::int64_t d, std::int64_t r);

}  // namespace hcensus
