#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hcensus/cubic.hpp"
#include "hcensus/gonal.hpp"
#include "hcensus/invariants.hpp"
#include "hcensus/liaison.hpp"
#include "hcensus/models.hpp"

namespace hcensus {

// Never collapse Unknown into Yes or No.
enum class Tri { Yes, No, Unknown };
const char* tri_name(Tri t) noexcept;

using ComponentModel = std::variant<std::monostate, ModelRecord, CubicClassSolution, GonalRecipe, LinkageAccount>;

/// A family of curves in H^L_{d,g,r}, usually a component.
struct ComponentRecord {
  std::string description;
  ComponentModel model;
  std::optional<std::int64_t> dim;         // dimension in the Hilbert scheme
  std::optional<std::int64_t> glevel_dim;  // dimension of the family of series, when known
  std::int64_t dim_expected = 0;           // chi_min
};

struct Verdict {
  Triple triple;
  std::int64_t alpha = 0;
  Tri exists = Tri::Unknown;
  Tri irreducible = Tri::Unknown;
  std::vector<ComponentRecord> components;
  std::vector<std::string> citations;
  std::vector<std::string> notes;
};

/// Existence and irreducibility of the Hilbert scheme of smooth linearly
/// normal curves for a triple with r >= 3.
Verdict verdict(const Triple& t);

/// (description, dim) for each component; dim falls back to chi_min.
std::vector<std::pair<std::string, std::int64_t>> component_dims(const Triple& t);

/// Existence for alpha = 4 read off the classification statements.
Tri alpha4_exists_table(const Triple& t);

/// Existence for alpha = 4, r >= 5, recomputed from Castelnuovo bounds,
/// gonal recipes, the compounded-series threshold and quadric models.
Tri alpha4_exists_pipeline(const Triple& t);

// ---- tables ----------------------------------------------------------------

enum class TableFamily { RPlus8, RPlus9, GG4 };
const char* table_family_name(TableFamily f) noexcept;
std::optional<TableFamily> parse_table_family(std::string_view s);

/// One described family in a table row. Classes and residuals are
/// recomputed from the model, not copied.
struct TableEntry {
  std::string description;
  std::string stratum;  // e.g. "Sigma_{|(5,5)|,4}"; empty when not a quadric model
  ComponentModel model;
  std::optional<BlowupClass> curve;
  std::optional<BlowupClass> residual;
  std::optional<QuadricClass> quadric_residual;
  std::optional<bool> residual_very_ample;
  bool criterion_only = false;  // very-ampleness read off the n >= 7 criterion
  std::optional<bool> base_locus;
  Tri forms_component = Tri::Yes;
  std::optional<std::int64_t> dim;
  std::optional<std::int64_t> glevel_dim;
  std::int64_t dim_expected = 0;
  std::string remark;
};

struct TableRow {
  std::string label;
  std::optional<Triple> triple;
  Tri exists = Tri::Unknown;
  Tri irreducible = Tri::Unknown;
  std::vector<TableEntry> entries;
  std::vector<std::string> citations;
};

struct Table {
  TableFamily family;
  std::string title;
  std::vector<TableRow> rows;
};

Table table(TableFamily family);

// ---- renderers (byte-deterministic) ----------------------------------------

inline constexpr const char* kSchema = "census/1";

std::string verdict_json(const Verdict& v);
std::string verdict_text(const Verdict& v);
std::string table_json(const Table& t);
std::string table_markdown(const Table& t);
std::string table_text(const Table& t);

}  // namespace hcensus
