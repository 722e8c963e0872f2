#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hcensus {

/// Divisor class (a,b) on the smooth quadric P^1 x P^1.
struct QuadricClass {
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool effective() const noexcept { return a >= 0 && b >= 0; }
  friend bool operator==(const QuadricClass&, const QuadricClass&) = default;
};

/// Divisor class a*l - sum b_i*e_i on the blow-up S_n of P^2 at n <= 8
/// general points, written (a; b_1,...,b_n). The b_i are the subtracted
/// multiplicities, so the canonical class is (-3; -1,...,-1).
class BlowupClass {
 public:
  static constexpr std::size_t kMaxPoints = 8;

  BlowupClass(std::int64_t a, std::vector<std::int64_t> b);

  static BlowupClass canonical(std::size_t n);
  static BlowupClass line(std::size_t n);                         // l
  static BlowupClass exceptional(std::size_t i, std::size_t n);   // e_i, 1-based

  std::int64_t a() const noexcept { return a_; }
  const std::vector<std::int64_t>& b() const noexcept { return b_; }
  std::size_t n() const noexcept { return b_.size(); }

  /// Same class viewed on S_m (m >= n) with trailing zero multiplicities.
  BlowupClass padded(std::size_t m) const;

  BlowupClass operator+(const BlowupClass& o) const;
  BlowupClass operator-(const BlowupClass& o) const;
  BlowupClass operator*(std::int64_t k) const;

  friend bool operator==(const BlowupClass&, const BlowupClass&) = default;
  friend auto operator<=>(const BlowupClass& x, const BlowupClass& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
  }

 private:
  std::int64_t a_;
  std::vector<std::int64_t> b_;
};

// ---- quadric lattice -------------------------------------------------------

std::int64_t intersect(const QuadricClass& x, const QuadricClass& y);

/// Arithmetic genus (a-1)(b-1); rejects classes with a <= 0 or b <= 0.
std::int64_t pa(const QuadricClass& x);

/// dim |O(a,b)| = (a+1)(b+1) - 1; rejects negative entries.
std::int64_t dim_linear_system(const QuadricClass& x);

// ---- blow-up lattice -------------------------------------------------------

/// l^2 = 1, e_i^2 = -1, l.e_i = 0. Both classes must live on the same S_n.
std::int64_t intersect(const BlowupClass& x, const BlowupClass& y);

/// Arithmetic genus by adjunction, 1 + (x^2 + x.K)/2.
std::int64_t pa(const BlowupClass& x);

/// All (-1)-curves on S_n (E^2 = E.K = -1), sorted ascending, computed once
/// per n and shared thereafter.
const std::vector<BlowupClass>& neg_curves(std::size_t n);

/// (-1)-curve criterion: x.E >= 1 for every (-1)-curve E. For n in {7, 8}
/// this is only a necessary condition; see criterion_only().
bool is_very_ample(const BlowupClass& x);
inline bool criterion_only(std::size_t n) noexcept { return n >= 7; }

/// First (-1)-curve E with residual.E == 0 and curve.E >= 2: the residual
/// morphism contracts E, which meets the curve at least twice, so the series
/// the residual cuts on the curve is not very ample.
std::optional<BlowupClass> contracted_multisecant(const BlowupClass& residual,
                                                  const BlowupClass& curve);

/// h^0(S_n, x) = 1 + (x^2 - x.K)/2 when x - K meets l and every (-1)-curve
/// positively (so h^1 = h^2 = 0); otherwise throws VanishingNotJustified.
std::int64_t expected_h0(const BlowupClass& x);

// ---- text grammar ----------------------------------------------------------
//
//   quadric:  "(a,b)"              optional whitespace anywhere
//   blow-up:  "(a;b1,b2,...,bn)"   entries may use "v^k" for k copies of v
//
// Output always uses the expanded form without spaces.

QuadricClass parse_quadric(std::string_view text);
BlowupClass parse_blowup(std::string_view text);
std::string to_string(const QuadricClass& x);
std::string to_string(const BlowupClass& x);

/// Human name for a (-1)-curve or other small class, e.g. "e2", "l-e1-e2",
/// "2l-e1-e2-e3-e4-e5". Falls back to to_string for other classes.
std::string describe(const BlowupClass& x);

}  // namespace hcensus
