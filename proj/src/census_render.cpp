#include <sstream>

#include <json.hpp>

#include "hcensus/census.hpp"

namespace hcensus {

using json = nlohmann::ordered_json;

namespace {

json opt(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }
json opt(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }
json opt(const std::optional<BlowupClass>& v) { return v ? json(to_string(*v)) : json(nullptr); }
json opt(const std::optional<QuadricClass>& v) { return v ? json(to_string(*v)) : json(nullptr); }

json triple_json(const Triple& t) { return {{"d", t.d()}, {"g", t.g()}, {"r", t.r()}}; }

struct ModelJson {
  json operator()(std::monostate) const { return nullptr; }
  json operator()(const ModelRecord& m) const {
    return {{"kind", "quadric-model"},
            {"surface", model_surface_name(m.surface)},
            {"class", to_string(m.cls)},
            {"delta", m.delta},
            {"base_points", m.base_points},
            {"e", m.e},
            {"g", m.g},
            {"compounded_or_degenerate", m.compounded_or_degenerate()}};
  }
  json operator()(const CubicClassSolution& s) const {
    return {{"kind", "cubic-class"}, {"class", to_string(s.cls)}, {"d", s.d},
            {"g", s.g},              {"line", opt(s.line)},         {"orbit_size", s.orbit_size}};
  }
  json operator()(const GonalRecipe& r) const {
    json conds = json::array();
    for (const auto& c : r.conditions) conds.push_back({{"name", c.name}, {"value", c.value}});
    return {{"kind", "gonal-recipe"},
            {"g", r.g},
            {"r", r.r},
            {"e", r.e},
            {"k", r.k},
            {"n", r.n},
            {"m", r.m},
            {"extra_points", r.extra_points},
            {"series_degree", r.series_degree()},
            {"series_dim", r.series_dim()},
            {"valid", r.valid()},
            {"conditions", conds},
            {"assumptions", r.assumptions}};
  }
  json operator()(const LinkageAccount& a) const {
    return {{"kind", "linkage"},
            {"d", a.step.d},
            {"g", a.step.g},
            {"s", a.step.s},
            {"t", a.step.t},
            {"e", a.step.e},
            {"h", a.step.h},
            {"surfaces_through_source", a.surfaces_through_source},
            {"surfaces_through_residual", a.surfaces_through_residual},
            {"fiber_down", a.fiber_down},
            {"sigma_dim", a.sigma_dim},
            {"fiber_up", a.fiber_up},
            {"component_dim", a.component_dim},
            {"citations", a.citations}};
  }
};

json entry_json(const TableEntry& e) {
  return {{"description", e.description},
          {"stratum", e.stratum.empty() ? json(nullptr) : json(e.stratum)},
          {"model", std::visit(ModelJson{}, e.model)},
          {"curve", opt(e.curve)},
          {"residual", e.residual ? json(to_string(*e.residual)) : opt(e.quadric_residual)},
          {"residual_very_ample", opt(e.residual_very_ample)},
          {"criterion_only", e.criterion_only},
          {"base_locus", opt(e.base_locus)},
          {"forms_component", tri_name(e.forms_component)},
          {"dim", opt(e.dim)},
          {"glevel_dim", opt(e.glevel_dim)},
          {"dim_expected", e.dim_expected},
          {"remark", e.remark}};
}

json verdict_to_json(const Verdict& v) {
  json comps = json::array();
  for (const auto& c : v.components)
    comps.push_back({{"description", c.description},
                     {"model", std::visit(ModelJson{}, c.model)},
                     {"dim", opt(c.dim)},
                     {"glevel_dim", opt(c.glevel_dim)},
                     {"dim_expected", c.dim_expected}});
  return {{"schema", kSchema},
          {"triple", triple_json(v.triple)},
          {"alpha", v.alpha},
          {"exists", tri_name(v.exists)},
          {"irreducible", tri_name(v.irreducible)},
          {"components", comps},
          {"notes", v.notes},
          {"citations", v.citations}};
}

std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

std::string yes_no(const std::optional<bool>& b) {
  if (!b) return "";
  return *b ? "yes" : "no";
}

std::string residual_text(const TableEntry& e) {
  if (e.residual) return to_string(*e.residual);
  if (e.quadric_residual) return to_string(*e.quadric_residual);
  return "";
}

}  // namespace

std::string verdict_json(const Verdict& v) { return verdict_to_json(v).dump(2) + "\n"; }

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  const auto& t = v.triple;
  os << "(d,g,r) = (" << t.d() << "," << t.g() << "," << t.r() << ")  alpha = " << v.alpha << "\n";
  os << "exists: " << tri_name(v.exists) << "\n";
  os << "irreducible: " << tri_name(v.irreducible) << "\n";
  for (const auto& c : v.components) {
    os << "component: " << c.description;
    if (c.dim) os << "; dim " << *c.dim;
    if (c.glevel_dim) os << " (series family " << *c.glevel_dim << ")";
    os << "; expected >= " << c.dim_expected << "\n";
  }
  for (const auto& n : v.notes) os << "note: " << n << "\n";
  for (const auto& c : v.citations) os << "cite: " << c << "\n";
  return os.str();
}

std::string table_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json entries = json::array();
    for (const auto& e : row.entries) entries.push_back(entry_json(e));
    rows.push_back({{"label", row.label},
                    {"triple", row.triple ? triple_json(*row.triple) : json(nullptr)},
                    {"exists", tri_name(row.exists)},
                    {"irreducible", tri_name(row.irreducible)},
                    {"entries", entries},
                    {"citations", row.citations}});
  }
  json doc = {{"schema", kSchema}, {"family", table_family_name(t.family)}, {"title", t.title}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

std::string table_markdown(const Table& t) {
  std::ostringstream os;
  os << "## " << t.title << "\n\n";
  os << "| (d,g,r) | Description | C_E | Curve class | Residual | Very ample | Base locus | Component | dim | "
        "Irreducible |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& row : t.rows) {
    if (row.entries.empty()) {
      os << "| " << row.label << " | empty |  |  |  |  |  |  |  | " << tri_name(row.irreducible) << " |\n";
      continue;
    }
    bool first = true;
    for (const auto& e : row.entries) {
      std::string va = yes_no(e.residual_very_ample);
      if (e.criterion_only && !va.empty()) va += " (criterion)";
      std::string desc = e.description;
      if (!e.remark.empty()) desc += "; " + e.remark;
      os << "| " << (first ? row.label : "") << " | " << md_cell(desc) << " | " << md_cell(e.stratum) << " | "
         << (e.curve ? to_string(*e.curve) : "") << " | " << residual_text(e) << " | " << va << " | "
         << yes_no(e.base_locus) << " | " << tri_name(e.forms_component) << " | "
         << (e.dim ? std::to_string(*e.dim) : "") << " | " << (first ? tri_name(row.irreducible) : "") << " |\n";
      first = false;
    }
  }
  return os.str();
}

std::string table_text(const Table& t) {
  std::ostringstream os;
  os << t.title << "\n";
  for (const auto& row : t.rows) {
    os << row.label << "  exists=" << tri_name(row.exists) << "  irreducible=" << tri_name(row.irreducible) << "\n";
    for (const auto& e : row.entries) {
      os << "  - " << e.description;
      if (!e.stratum.empty()) os << "  [" << e.stratum << "]";
      if (e.dim) os << "  dim " << *e.dim;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace hcensus
