#include "hcensus/surfaces.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <string>

#include "hcensus/checked.hpp"
#include "hcensus/errors.hpp"

namespace hcensus {

using namespace checked;

namespace {

void require_same_surface(const BlowupClass& x, const BlowupClass& y) {
  require(x.n() == y.n(), "classes live on different surfaces (S_" + std::to_string(x.n()) +
                              " vs S_" + std::to_string(y.n()) + ")");
}

}  // namespace

BlowupClass::BlowupClass(std::int64_t a, std::vector<std::int64_t> b) : a_(a), b_(std::move(b)) {
  require(!b_.empty() && b_.size() <= kMaxPoints,
          "blow-up class needs 1..8 exceptional coefficients (got " + std::to_string(b_.size()) + ")");
}

BlowupClass BlowupClass::canonical(std::size_t n) { return BlowupClass(-3, std::vector<std::int64_t>(n, -1)); }

BlowupClass BlowupClass::line(std::size_t n) { return BlowupClass(1, std::vector<std::int64_t>(n, 0)); }

BlowupClass BlowupClass::exceptional(std::size_t i, std::size_t n) {
  require(i >= 1 && i <= n, "exceptional index out of range");
  std::vector<std::int64_t> b(n, 0);
  b[i - 1] = -1;
  return BlowupClass(0, std::move(b));
}

BlowupClass BlowupClass::padded(std::size_t m) const {
  require(m >= n(), "cannot pad a class to fewer points");
  auto b = b_;
  b.resize(m, 0);
  return BlowupClass(a_, std::move(b));
}

BlowupClass BlowupClass::operator+(const BlowupClass& o) const {
  require_same_surface(*this, o);
  std::vector<std::int64_t> b(n());
  for (std::size_t i = 0; i < n(); ++i) b[i] = add(b_[i], o.b_[i]);
  return BlowupClass(add(a_, o.a_), std::move(b));
}

BlowupClass BlowupClass::operator-(const BlowupClass& o) const {
  require_same_surface(*this, o);
  std::vector<std::int64_t> b(n());
  for (std::size_t i = 0; i < n(); ++i) b[i] = sub(b_[i], o.b_[i]);
  return BlowupClass(sub(a_, o.a_), std::move(b));
}

BlowupClass BlowupClass::operator*(std::int64_t k) const {
  std::vector<std::int64_t> b(n());
  for (std::size_t i = 0; i < n(); ++i) b[i] = mul(b_[i], k);
  return BlowupClass(mul(a_, k), std::move(b));
}

std::int64_t intersect(const QuadricClass& x, const QuadricClass& y) {
  return add(mul(x.a, y.b), mul(x.b, y.a));
}

std::int64_t pa(const QuadricClass& x) {
  require(x.a >= 1 && x.b >= 1, "pa needs a curve class with a, b >= 1 (got " + to_string(x) + ")");
  return mul(x.a - 1, x.b - 1);
}

std::int64_t dim_linear_system(const QuadricClass& x) {
  require(x.effective(), "linear system of a non-effective class " + to_string(x));
  return sub(mul(add(x.a, 1), add(x.b, 1)), 1);
}

std::int64_t intersect(const BlowupClass& x, const BlowupClass& y) {
  require_same_surface(x, y);
  i64 acc = mul(x.a(), y.a());
  for (std::size_t i = 0; i < x.n(); ++i) acc = sub(acc, mul(x.b()[i], y.b()[i]));
  return acc;
}

std::int64_t pa(const BlowupClass& x) {
  const auto k = BlowupClass::canonical(x.n());
  const i64 twice = add(intersect(x, x), intersect(x, k));
  require(twice >= -2, "class " + to_string(x) + " is not a curve class (x^2 + x.K < -2)");
  // x^2 + x.K = sum b_i(b_i - 1) - a(a - 3) mod 2 is always even.
  if (twice % 2 != 0) fail(ErrorKind::Precondition, "odd x^2 + x.K for " + to_string(x) + ": lattice corruption");
  return 1 + twice / 2;
}

namespace {

// Box a in [0,6], b_i in [-1,3]: 3a = 1 + sum b_i <= 25 and a^2 = sum b_i^2 - 1
// keep every (-1)-curve on S_8 inside it.
std::vector<BlowupClass> enumerate_neg_curves(std::size_t n) {
  std::vector<BlowupClass> out;
  std::vector<std::int64_t> b(n, -1);
  for (std::int64_t a = 0; a <= 6; ++a) {
    std::fill(b.begin(), b.end(), -1);
    while (true) {
      std::int64_t s = 0;
      std::int64_t q = 0;
      for (auto v : b) {
        s += v;
        q += v * v;
      }
      if (3 * a - s == 1 && a * a - q == -1) out.emplace_back(a, b);
      std::size_t i = 0;
      while (i < n && b[i] == 3) b[i++] = -1;
      if (i == n) break;
      ++b[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<BlowupClass>& neg_curves(std::size_t n) {
  require(n >= 1 && n <= BlowupClass::kMaxPoints, "neg_curves needs 1 <= n <= 8");
  static std::array<std::once_flag, BlowupClass::kMaxPoints + 1> flags;
  static std::array<std::vector<BlowupClass>, BlowupClass::kMaxPoints + 1> cache;
  std::call_once(flags[n], [n] { cache[n] = enumerate_neg_curves(n); });
  return cache[n];
}

bool is_very_ample(const BlowupClass& x) {
  for (const auto& e : neg_curves(x.n()))
    if (intersect(x, e) < 1) return false;
  return true;
}

std::optional<BlowupClass> contracted_multisecant(const BlowupClass& residual, const BlowupClass& curve) {
  require_same_surface(residual, curve);
  for (const auto& e : neg_curves(residual.n()))
    if (intersect(residual, e) == 0 && intersect(curve, e) >= 2) return e;
  return std::nullopt;
}

std::int64_t expected_h0(const BlowupClass& x) {
  const auto k = BlowupClass::canonical(x.n());
  const auto ample = x - k;
  bool positive = ample.a() > 0;
  for (const auto& e : neg_curves(x.n())) positive = positive && intersect(ample, e) > 0;
  if (!positive)
    fail(ErrorKind::VanishingNotJustified,
         "vanishing-not-justified: " + to_string(ample) + " is not positive on l and every (-1)-curve");
  const i64 twice = sub(intersect(x, x), intersect(x, k));
  if (twice % 2 != 0) fail(ErrorKind::Precondition, "odd x^2 - x.K for " + to_string(x));
  return 1 + twice / 2;
}

std::string to_string(const QuadricClass& x) {
  return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
}

std::string to_string(const BlowupClass& x) {
  std::string s = "(" + std::to_string(x.a()) + ";";
  for (std::size_t i = 0; i < x.n(); ++i) {
    if (i) s += ",";
    s += std::to_string(x.b()[i]);
  }
  return s + ")";
}

std::string describe(const BlowupClass& x) {
  const auto& b = x.b();
  if (x.a() == 0) {
    if (std::count(b.begin(), b.end(), -1) == 1 && std::count(b.begin(), b.end(), 0) + 1 == std::ssize(b))
      return "e" + std::to_string(std::find(b.begin(), b.end(), -1) - b.begin() + 1);
  }
  if (x.a() >= 1 && std::all_of(b.begin(), b.end(), [](auto v) { return v == 0 || v == 1; })) {
    std::string s = x.a() == 1 ? "l" : std::to_string(x.a()) + "l";
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] == 1) s += "-e" + std::to_string(i + 1);
    return s;
  }
  return to_string(x);
}

}  // namespace hcensus
