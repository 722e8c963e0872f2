#include "hcensus/models.hpp"

#include <algorithm>
#include <string>

#include "hcensus/checked.hpp"
#include "hcensus/errors.hpp"

namespace hcensus {

using namespace checked;

const char* model_surface_name(ModelSurface s) noexcept {
  return s == ModelSurface::Quadric ? "quadric" : "blowup-of-quadric";
}

std::vector<ModelRecord> enumerate_quadric_models(std::int64_t e, std::int64_t g, std::int64_t base_point_cap) {
  require(e >= 4, "enumerate_quadric_models needs e >= 4");
  require(g >= 0, "enumerate_quadric_models needs g >= 0");
  require(base_point_cap >= 0, "base point cap must be >= 0");
  std::vector<ModelRecord> out;
  for (std::int64_t bp = 0; bp <= base_point_cap; ++bp) {
    const i64 deg = e - bp;
    for (i64 c = 1; 2 * c <= deg; ++c) {
      const QuadricClass cls{c, deg - c};
      const i64 delta = pa(cls) - g;
      if (delta < 0) continue;
      ModelRecord m;
      m.surface = delta == 0 ? ModelSurface::Quadric : ModelSurface::BlowupOfQuadric;
      m.cls = cls;
      m.delta = delta;
      m.base_points = bp;
      m.e = e;
      m.g = g;
      out.push_back(m);
    }
  }
  return out;
}

BlowupClass proper_transform(const ModelRecord& m) {
  require(m.delta >= 1, "proper_transform needs a nodal model (delta >= 1)");
  require(m.delta + 1 <= static_cast<i64>(BlowupClass::kMaxPoints),
          "proper_transform supports at most 7 nodes (S_8)");
  const auto [c, d] = m.cls;
  std::vector<i64> b{d - 2, c - 2};
  b.resize(static_cast<std::size_t>(m.delta + 1), 2);
  return BlowupClass(c + d - 2, std::move(b));
}

BlowupClass residual_class_blowup(const BlowupClass& curve) {
  require(curve.n() >= 2, "residual_class_blowup needs n >= 2");
  std::vector<i64> h(curve.n(), 0);
  h[0] = h[1] = 1;
  return BlowupClass::canonical(curve.n()) + curve - BlowupClass(2, std::move(h));
}

QuadricClass residual_class_quadric(const QuadricClass& cls) { return {sub(cls.a, 3), sub(cls.b, 3)}; }

bool quadric_residual_very_ample(const QuadricClass& x) { return x.a >= 1 && x.b >= 1; }

std::int64_t severi_dim(const QuadricClass& cls, std::int64_t delta) {
  require(delta >= 0 && delta <= pa(cls), "severi_dim needs 0 <= delta <= pa(" + to_string(cls) + ")");
  return dim_linear_system(cls) - delta;
}

std::int64_t glevel_dim(const QuadricClass& cls, std::int64_t delta) {
  return severi_dim(cls, delta) - kDimAutQuadric;
}

std::optional<std::int64_t> secant_obstruction_base_point(const QuadricClass& cls) {
  const auto order = std::min(cls.a, cls.b);
  if (order < 1) return std::nullopt;
  return order;
}

std::optional<ResidualAnalysis> analyse_residual(const ModelRecord& m) {
  ResidualAnalysis out;
  const auto [c, d] = m.cls;
  if (m.delta == 0 && m.base_points == 0) {
    const auto res = residual_class_quadric(m.cls);
    out.quadric_residual = res;
    out.residual_degree = intersect(res, m.cls);
    out.very_ample = quadric_residual_very_ample(res);
    return out;
  }

  const i64 n = m.delta + m.base_points + 1;
  if (n > static_cast<i64>(BlowupClass::kMaxPoints)) return std::nullopt;
  const auto size = static_cast<std::size_t>(n);

  std::vector<i64> b;
  i64 a = 0;
  if (m.delta >= 1) {
    a = c + d - 2;
    b = {d - 2, c - 2};
    b.insert(b.end(), static_cast<std::size_t>(m.delta - 1), 2);
    b.insert(b.end(), static_cast<std::size_t>(m.base_points), 1);
  } else {
    a = c + d - 1;
    b = {d - 1, c - 1};
    b.insert(b.end(), static_cast<std::size_t>(m.base_points - 1), 1);
  }
  const BlowupClass curve(a, std::move(b));

  std::vector<i64> h(size, 0);
  h[0] = h[1] = 1;
  auto residual = BlowupClass::canonical(size) + curve - BlowupClass(2, std::move(h));
  if (m.delta == 0) {
    std::vector<i64> first(size, 0);
    first[0] = first[1] = 1;
    residual = residual - BlowupClass(1, std::move(first));
  }
  const std::size_t later_base_points = static_cast<std::size_t>(m.delta == 0 ? m.base_points - 1 : m.base_points);
  for (std::size_t i = size - later_base_points; i < size; ++i)
    residual = residual - BlowupClass::exceptional(i + 1, size);

  out.on_blowup = true;
  out.curve = curve;
  out.residual = residual;
  out.residual_degree = intersect(residual, curve);
  out.very_ample = is_very_ample(residual);
  out.criterion_only = criterion_only(size);
  out.witness = contracted_multisecant(residual, curve);
  return out;
}

}  // namespace hcensus
