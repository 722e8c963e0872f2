#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hcensus/surfaces.hpp"

namespace hcensus {

enum class ModelSurface { Quadric, BlowupOfQuadric };

const char* model_surface_name(ModelSurface s) noexcept;

/// A candidate image C_E in P^3 of a residual series g^3_e of genus g: a
/// curve of bidegree cls with delta nodes on a smooth quadric, plus
/// base_points base points of the series.
struct ModelRecord {
  ModelSurface surface = ModelSurface::Quadric;
  QuadricClass cls;
  std::int64_t delta = 0;
  std::int64_t base_points = 0;
  std::int64_t e = 0;
  std::int64_t g = 0;

  /// min(c,d) <= 2: the series maps onto a rational ruling 2:1 or the
  /// image is degenerate.
  bool compounded_or_degenerate() const noexcept { return cls.a <= 2; }
};

inline constexpr std::int64_t kDefaultBasePointCap = 2;

/// Every bidegree (c,d), c <= d, with c + d + base_points = e,
/// 0 <= base_points <= cap and 0 <= delta = (c-1)(d-1) - g. Sorted by
/// (base_points, c).
std::vector<ModelRecord> enumerate_quadric_models(std::int64_t e, std::int64_t g,
                                                  std::int64_t base_point_cap = kDefaultBasePointCap);

/// Proper transform on S_{delta+1} after blowing up one node (whose exceptional
/// curve is l-e1-e2) and then the remaining delta-1 nodes:
/// (c+d-2; d-2, c-2, 2^{delta-1}). Requires 1 <= delta <= 7.
BlowupClass proper_transform(const ModelRecord& m);

/// K + C - (2;1,1,0,...): the class cutting the residual series on the curve.
BlowupClass residual_class_blowup(const BlowupClass& curve);

/// K + C - (1,1) = (c-3, d-3) for a smooth model.
QuadricClass residual_class_quadric(const QuadricClass& cls);

/// (a,b) is very ample on the quadric iff a, b >= 1.
bool quadric_residual_very_ample(const QuadricClass& x);

/// dim Sigma_{cls,delta} = dim|cls| - delta.
std::int64_t severi_dim(const QuadricClass& cls, std::int64_t delta);

/// Dimension of the locus of series sitting over Sigma_{cls,delta}:
/// severi_dim - dim Aut(P^1 x P^1).
std::int64_t glevel_dim(const QuadricClass& cls, std::int64_t delta);
inline constexpr std::int64_t kDimAutQuadric = 6;

/// Secancy min(c,d) of the ruling through a base point. At 3 or more the
/// projection from that point is singular.
std::optional<std::int64_t> secant_obstruction_base_point(const QuadricClass& cls);

/// Full residual analysis of a model, base points included.
///
/// A nodal model is resolved on S_n, n = delta + base_points + 1: the first
/// blown-up point is a node (multiplicity 2) when delta >= 1 and otherwise a
/// base point (multiplicity 1); its exceptional curve is l-e1-e2. Later points
/// are the remaining nodes then the remaining base points. The residual class
/// is K + C - H - sum(exceptional curves over base points) with H = (2;1,1,0..).
struct ResidualAnalysis {
  bool on_blowup = false;
  std::optional<QuadricClass> quadric_residual;  // smooth, base-point-free models
  std::optional<BlowupClass> curve;
  std::optional<BlowupClass> residual;
  std::int64_t residual_degree = 0;  // always 2g - 2 - e
  bool very_ample = false;
  bool criterion_only = false;       // verdict rests on the n >= 7 criterion
  std::optional<BlowupClass> witness;

  /// Very ample and not resting on the n >= 7 criterion.
  bool certified() const noexcept { return very_ample && !criterion_only; }
};

/// nullopt when the resolution would need more than 8 blown-up points.
std::optional<ResidualAnalysis> analyse_residual(const ModelRecord& m);

}  // namespace hcensus
