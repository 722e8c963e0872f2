#include "hcensus/census.hpp"

#include <algorithm>
#include <stdexcept>

#include "hcensus/checked.hpp"
#include "hcensus/errors.hpp"

namespace hcensus {

using namespace checked;

const char* tri_name(Tri t) noexcept {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Citation anchors.
constexpr const char* kCastelnuovo = "castelnuovo-bound";
constexpr const char* kAlpha0 = "alpha0:nonspecial-irreducible";
constexpr const char* kAlpha1 = "alpha1:existence-threshold";
constexpr const char* kAlpha2 = "alpha2:existence-threshold";
constexpr const char* kAlpha3 = "alpha3:existence-and-irreducibility";
constexpr const char* kAlpha4 = "alpha4:existence";
constexpr const char* kAlpha4Low = "alpha4:r3-r4-existence";
constexpr const char* kAlpha4R8 = "alpha4:g=r+8-table";
constexpr const char* kAlpha4R9 = "alpha4:g=r+9-table";
constexpr const char* kAlpha5 = "alpha5:existence";
constexpr const char* kExtremal = "extremal-curves-irreducible (Harris)";
constexpr const char* kCompounded = "compounded-g3e-not-very-ample";
constexpr const char* kRecipe = "gonal-recipe (Coppens-Keem-Martens dimension lemma)";
constexpr const char* kLinkage = "liaison:quartic-linkage-account";
constexpr const char* kCubics = "curves-on-cubic-surfaces";
constexpr const char* kH1033 = "h-10-12-3:two-components";
constexpr const char* kGrusonPeskine = "space-curve-existence (Gruson-Peskine)";
constexpr const char* kBordiga = "bordiga-surface-curves (Rathmann)";
constexpr const char* kScroll = "nearly-extremal-curves-on-scrolls (Harris)";
constexpr const char* kBrillNoether = "principal-component (Brill-Noether range)";

constexpr i64 kDimCubics = 19;    // dim |O_P3(3)|
constexpr i64 kDimQuadrics = 9;   // dim |O_P3(2)|
constexpr i64 kDimPgl4 = 15;

i64 dim_pgl(i64 r) { return sub(sq(r + 1), 1); }

std::string stratum_name(const QuadricClass& cls, i64 delta) {
  return "Sigma_{|" + to_string(cls) + "|," + std::to_string(delta) + "}";
}

ModelRecord find_model(i64 e, i64 g, i64 c, i64 d, i64 bp) {
  for (const auto& m : enumerate_quadric_models(e, g, std::max<i64>(bp, kDefaultBasePointCap)))
    if (m.cls == QuadricClass{c, d} && m.base_points == bp) return m;
  throw std::logic_error("quadric model not found for e=" + std::to_string(e) + " g=" + std::to_string(g));
}

// Entries whose dimension drops below chi_min cannot be components.
void settle_component(TableEntry& entry) {
  if (entry.dim && *entry.dim < entry.dim_expected) entry.forms_component = Tri::No;
}

// C_E of the residual series of t on a smooth quadric, with delta nodes and
// bp base points.
TableEntry quadric_residual_entry(const Triple& t, i64 c, i64 d, i64 bp, Tri component) {
  const i64 e = t.g() - t.r() + 2;
  const auto m = find_model(e, t.g(), c, d, bp);
  TableEntry out;
  out.model = m;
  out.stratum = stratum_name(m.cls, m.delta);
  out.base_locus = bp > 0;
  const auto a = analyse_residual(m);
  if (!a) throw std::logic_error("model needs more than 8 blown-up points");
  out.curve = a->curve;
  out.residual = a->residual;
  out.quadric_residual = a->quadric_residual;
  out.residual_very_ample = a->very_ample;
  out.criterion_only = a->criterion_only;
  if (a->on_blowup) {
    out.description = "C in " + to_string(*a->curve) + " on S_" + std::to_string(a->curve->n()) +
                      ", embedded by " + to_string(*a->residual);
  } else {
    out.description = "C isomorphic to C_E in |" + to_string(m.cls) + "| on a smooth quadric, embedded by |" +
                      to_string(*a->quadric_residual) + "|";
  }
  out.glevel_dim = add(glevel_dim(m.cls, m.delta), bp);
  out.dim = add(*out.glevel_dim, dim_pgl(t.r()));
  out.dim_expected = chi_min(t);
  out.forms_component = component;
  settle_component(out);
  return out;
}

// A smooth curve of the given bidegree on a quadric in P^3 (r = 3 only).
TableEntry quadric_curve_entry(const Triple& t, i64 c, i64 d) {
  ModelRecord m;
  m.cls = {c, d};
  m.e = t.d();
  m.g = t.g();
  require(pa(m.cls) == t.g() && c + d == t.d(), "bidegree does not match the triple");
  TableEntry out;
  out.description = "smooth curves of type " + to_string(m.cls) + " on smooth quadrics";
  out.model = m;
  out.dim = add(severi_dim(m.cls, 0), kDimQuadrics);
  out.glevel_dim = sub(*out.dim, kDimPgl4);
  out.dim_expected = chi_min(t);
  return out;
}

TableEntry complete_intersection_cubics_entry(const Triple& t) {
  TableEntry out;
  out.description = "complete intersections of two cubics";
  out.dim = grassmann_dim(1, kDimCubics);
  out.glevel_dim = sub(*out.dim, kDimPgl4);
  out.dim_expected = chi_min(t);
  return out;
}

TableEntry linkage_entry(const Triple& t, i64 dim_residual, const std::string& residual_name) {
  const auto account = linkage_dimension_account(t.d(), t.g(), 4, 4, dim_residual);
  TableEntry out;
  out.description = "general element directly linked to a curve in " + residual_name +
                    " in a complete intersection of two quartics";
  out.model = account;
  out.dim = account.component_dim;
  out.glevel_dim = sub(account.component_dim, kDimPgl4);
  out.dim_expected = chi_min(t);
  return out;
}

// Curves on a smooth cubic surface with C_E of class cls (degree e).
TableEntry cubic_entry(const Triple& t, const BlowupClass& cls) {
  const i64 e = t.r() == 3 ? t.d() : t.g() - t.r() + 2;
  const auto sols = classify_cubic_classes(e, t.g());
  auto it = std::find_if(sols.begin(), sols.end(), [&](const CubicClassSolution& s) { return s.cls == cls; });
  if (it == sols.end()) throw std::logic_error("cubic class " + to_string(cls) + " not found");
  TableEntry out;
  out.model = *it;
  out.curve = cls;
  const i64 family = add(kDimCubics, expected_h0(cls) - 1);
  out.dim_expected = chi_min(t);
  if (t.r() == 3) {
    out.description = "curves in " + to_string(cls) + " on smooth cubic surfaces";
    out.dim = family;
    out.glevel_dim = sub(family, kDimPgl4);
  } else {
    const auto res = cubic_residual(cls);
    out.residual = res;
    out.residual_very_ample = is_very_ample(res);
    out.base_locus = false;
    out.description = "C isomorphic to C_E in " + to_string(cls) + " on a smooth cubic, embedded by " + to_string(res);
    out.glevel_dim = sub(family, kDimPgl4);
    out.dim = add(*out.glevel_dim, dim_pgl(t.r()));
  }
  return out;
}

TableEntry recipe_entry(const Triple& t, const GonalRecipe& rec) {
  TableEntry out;
  std::string series = "|K - 3g^1_" + std::to_string(rec.k);
  if (rec.extra_points == 1) series += " - q";
  if (rec.extra_points == 2) series += " - q - q'";
  series += "|";
  out.description = "general " + std::to_string(rec.k) + "-gonal curve embedded by the very ample " + series;
  out.model = rec;
  out.dim_expected = chi_min(t);
  out.forms_component = Tri::Unknown;
  out.remark = rec.k == 4 ? "tetragonal" : rec.k == 5 ? "pentagonal" : std::to_string(rec.k) + "-gonal";
  return out;
}

TableEntry plain_entry(const Triple& t, std::string description, Tri component) {
  TableEntry out;
  out.description = std::move(description);
  out.dim_expected = chi_min(t);
  out.forms_component = component;
  return out;
}

struct Alpha4Case {
  std::vector<TableEntry> entries;
  std::vector<std::string> citations;
};

// Described families for an alpha = 4 triple known to be non-empty.
Alpha4Case alpha4_families(const Triple& t) {
  const i64 r = t.r();
  const i64 g = t.g();
  Alpha4Case out;
  if (r == 3 && g == 9) {
    out.entries.push_back(quadric_curve_entry(t, 4, 4));
    out.citations.push_back(kAlpha4Low);
    return out;
  }
  if (r == 3 && g == 10) {
    out.entries.push_back(quadric_curve_entry(t, 3, 6));
    out.entries.push_back(complete_intersection_cubics_entry(t));
    out.citations.push_back(kAlpha4Low);
    return out;
  }
  if (g == r + 8 && r <= 8) {
    out.citations.push_back(kAlpha4R8);
    if (r == 3) {
      out.entries.push_back(linkage_entry(t, 24, "H_{6,3,3}"));
      out.entries.push_back(quadric_residual_entry(t, 5, 5, 0, Tri::No));
      out.citations.push_back(kLinkage);
      return out;
    }
    out.entries.push_back(quadric_residual_entry(t, 5, 5, 0, Tri::Yes));
    if (r == 7) out.entries.push_back(quadric_residual_entry(t, 4, 6, 0, Tri::Yes));
    return out;
  }
  if (g == r + 9 && r <= 11) {
    out.citations.push_back(kAlpha4R9);
    switch (r) {
      case 3:
        out.entries.push_back(quadric_residual_entry(t, 5, 5, 1, Tri::No));
        out.entries.push_back(linkage_entry(t, 20, "H_{5,0,3}"));
        out.citations.push_back(kLinkage);
        break;
      case 4:
      case 5:
        out.entries.push_back(quadric_residual_entry(t, 5, 5, 1, Tri::Unknown));
        out.entries.push_back(quadric_residual_entry(t, 5, 6, 0, Tri::Unknown));
        break;
      case 6:
        out.entries.push_back(cubic_entry(t, parse_blowup("(10;4,3^5)")));
        out.entries.push_back(quadric_residual_entry(t, 5, 6, 0, Tri::Yes));
        out.citations.push_back(kCubics);
        break;
      case 7:
        out.entries.push_back(quadric_residual_entry(t, 5, 5, 1, Tri::Unknown));
        out.entries.push_back(quadric_residual_entry(t, 5, 6, 0, Tri::Yes));
        break;
      case 9:
        out.entries.push_back(quadric_residual_entry(t, 4, 7, 0, Tri::Yes));
        out.entries.push_back(quadric_residual_entry(t, 5, 6, 0, Tri::Yes));
        break;
      default:
        out.entries.push_back(quadric_residual_entry(t, 5, 6, 0, Tri::Yes));
        break;
    }
    return out;
  }
  if (r >= 5 && g == r + 7) {
    out.entries.push_back(plain_entry(t, "extremal curves", r == 5 ? Tri::Unknown : Tri::Yes));
    out.citations.push_back(kExtremal);
    return out;
  }
  if (r == 4 && g == 11) {
    auto e = plain_entry(t, "curves in |3H+2L| on a rational normal scroll, with very ample |K - 3g^1_3|", Tri::Unknown);
    e.remark = "trigonal";
    out.entries.push_back(std::move(e));
    out.citations.push_back(kScroll);
    return out;
  }
  if (auto rec = existence_recipe(g, r)) {
    out.entries.push_back(recipe_entry(t, *rec));
    out.citations.push_back(kRecipe);
    return out;
  }
  if (r == 4 && (g == 16 || g == 19)) {
    out.entries.push_back(plain_entry(t, "curves on a Bordiga surface", Tri::Unknown));
    out.citations.push_back(kBordiga);
    return out;
  }
  if (r == 4 && rho(t) >= 0) {
    out.entries.push_back(plain_entry(t, "principal component", Tri::Unknown));
    out.citations.push_back(kBrillNoether);
    return out;
  }
  if (r == 3) {
    out.entries.push_back(plain_entry(t, "smooth curves of degree g-1 (g <= pi_1(d,3))", Tri::Unknown));
    out.citations.push_back(kGrusonPeskine);
    return out;
  }
  throw std::logic_error("no alpha=4 family for a non-empty triple");
}

Tri alpha4_irreducible(const Triple& t) {
  const i64 r = t.r();
  const i64 g = t.g();
  if (r == 3) {
    if (g == 9 || g == 11 || g == 12) return Tri::Yes;
    if (g == 10) return Tri::No;
    return Tri::Unknown;
  }
  if (r == 4) return g == 12 ? Tri::Yes : Tri::Unknown;
  if (g == r + 7) return r == 5 ? Tri::Unknown : Tri::Yes;
  if (g == r + 8) return r == 7 ? Tri::No : Tri::Yes;
  if (g == r + 9) {
    if (r == 8 || r == 10 || r == 11) return Tri::Yes;
    if (r == 6 || r == 9) return Tri::No;
    return Tri::Unknown;
  }
  return Tri::Unknown;
}

ComponentRecord to_component(const TableEntry& e) {
  ComponentRecord c;
  c.description = e.description;
  if (e.forms_component == Tri::Unknown) c.description += " (component status open)";
  c.model = e.model;
  c.dim = e.dim;
  c.glevel_dim = e.glevel_dim;
  c.dim_expected = e.dim_expected;
  return c;
}

ComponentRecord generic_component(const Triple& t, std::string description) {
  ComponentRecord c;
  c.description = std::move(description);
  c.dim_expected = chi_min(t);
  return c;
}

void rule_alpha4(Verdict& v) {
  const auto& t = v.triple;
  v.exists = alpha4_exists_table(t);
  v.citations.push_back(t.r() <= 4 ? kAlpha4Low : kAlpha4);
  if (v.exists != Tri::Yes) {
    if (t.r() >= 5 && (t.g() == t.r() + 8 || t.g() == t.r() + 9)) {
      v.citations.push_back(kCompounded);
      v.notes.push_back("every g^3_e is compounded, so its residual is not very ample");
    }
    return;
  }
  v.irreducible = alpha4_irreducible(t);
  auto fam = alpha4_families(t);
  for (auto& c : fam.citations)
    if (std::find(v.citations.begin(), v.citations.end(), c) == v.citations.end()) v.citations.push_back(c);
  for (const auto& e : fam.entries) {
    if (e.forms_component == Tri::No) {
      v.notes.push_back(e.description + " does not form a component" +
                        (e.dim ? " (dim " + std::to_string(*e.dim) + ")" : std::string()));
      continue;
    }
    v.components.push_back(to_component(e));
  }
  if (t.r() == 3 && t.g() == 9) v.notes.push_back("extremal curves on quadrics form the only component");
}

void rule_alpha5(Verdict& v) {
  const auto& t = v.triple;
  const i64 r = t.r();
  const i64 g = t.g();
  v.citations.push_back(kAlpha5);
  if (t == Triple(10, 12, 3)) {
    v.exists = Tri::Yes;
    v.irreducible = Tri::No;
    v.citations.push_back(kH1033);
    v.citations.push_back(kCubics);
    v.components.push_back(to_component(quadric_curve_entry(t, 3, 7)));
    v.components.push_back(to_component(cubic_entry(t, parse_blowup("(9;3^5,2)"))));
    v.notes.push_back("both components have the minimal dimension");
    return;
  }
  if (r < 6) {
    v.notes.push_back("alpha = 5 with r <= 5 is not classified");
    return;
  }
  if (g <= r + 8) v.exists = Tri::No;
  else if (g == r + 9 || g >= r + 13) v.exists = Tri::Yes;
  else if (g == r + 10) v.exists = r >= 9 ? Tri::No : Tri::Unknown;
  else if (g == r + 11) v.exists = r >= 12 ? Tri::No : Tri::Unknown;
  else if (g == r + 12) v.exists = r >= 13 ? Tri::Yes : Tri::Unknown;
  if (g == r + 12 && r >= 13)
    v.notes.push_back("relies on very ampleness of the residual of a triple cover of an elliptic curve (assumed)");
  if (v.exists == Tri::Unknown) v.notes.push_back("existence open; C_E expected on a rational normal scroll in P^4");
  if (v.exists == Tri::Yes) v.components.push_back(generic_component(t, "curves with residual g^4_{g-r+3}"));
}

void rule_verdict(Verdict& v) {
  const auto& t = v.triple;
  const i64 r = t.r();
  const i64 g = t.g();
  switch (v.alpha) {
    case 0:
      v.exists = Tri::Yes;
      v.irreducible = Tri::Yes;
      v.citations.push_back(kAlpha0);
      v.notes.push_back("no lower bound on g is imposed (assumed for every g >= 0)");
      v.components.push_back(generic_component(t, "nonspecial curves"));
      return;
    case 1:
      v.citations.push_back(kAlpha1);
      v.exists = g >= r + 1 ? Tri::Yes : Tri::No;
      break;
    case 2:
      v.citations.push_back(kAlpha2);
      v.exists = g >= r + 3 ? Tri::Yes : Tri::No;
      break;
    case 3:
      v.citations.push_back(kAlpha3);
      if (g <= r + 4) {
        v.exists = Tri::No;
      } else if (r <= 4) {
        v.notes.push_back("alpha = 3 with r <= 4 is not classified");
        return;
      } else if (g == r + 6 && r >= 10) {
        v.exists = Tri::No;
      } else {
        v.exists = Tri::Yes;
        if (g >= 2 * r + 3) {
          v.irreducible = Tri::Yes;
        } else {
          v.notes.push_back("reducible for almost all g in [r+5, 2r+2]; the exceptions are not listed");
        }
        v.components.push_back(generic_component(t, "curves with residual g^2_{g-r+1}"));
      }
      return;
    case 4:
      rule_alpha4(v);
      return;
    case 5:
      rule_alpha5(v);
      return;
    default:
      v.notes.push_back("index of speciality outside the classified range 0..5");
      return;
  }
  // alpha 1, 2
  if (v.exists == Tri::Yes) {
    v.irreducible = Tri::Yes;
    v.components.push_back(generic_component(t, v.alpha == 1 ? "curves with residual g^0_{g-r}"
                                                              : "curves with residual g^1_{g-r+1}"));
  }
}

}  // namespace

Tri alpha4_exists_table(const Triple& t) {
  require(t.alpha() == 4, "alpha4_exists_table needs alpha = 4");
  const i64 r = t.r();
  const i64 g = t.g();
  if (r == 3) return g >= 9 ? Tri::Yes : Tri::No;
  if (r == 4) return g >= 11 ? Tri::Yes : Tri::No;
  if (r < 3) return Tri::Unknown;
  if (g <= r + 6) return Tri::No;
  if (g == r + 7 || g >= r + 10) return Tri::Yes;
  if (g == r + 8) return r <= 8 ? Tri::Yes : Tri::No;
  return r <= 11 ? Tri::Yes : Tri::No;  // g == r + 9
}

Tri alpha4_exists_pipeline(const Triple& t) {
  require(t.alpha() == 4, "alpha4_exists_pipeline needs alpha = 4");
  require(t.r() >= 5, "alpha4_exists_pipeline needs r >= 5");
  const i64 d = t.d();
  const i64 g = t.g();
  const i64 r = t.r();
  if (d < r || g > castelnuovo_pi(d, r)) return Tri::No;
  if (g == castelnuovo_pi(d, r)) return Tri::Yes;
  if (existence_recipe(g, r)) return Tri::Yes;
  const i64 e = g - r + 2;
  if (e == 10 || e == 11) {
    if (compounded_excludes_very_ample(e, g, r)) return Tri::No;
    for (const auto& m : enumerate_quadric_models(e, g)) {
      if (m.compounded_or_degenerate()) continue;
      const auto a = analyse_residual(m);
      if (a && a->certified()) return Tri::Yes;
    }
  }
  return Tri::Unknown;
}

Verdict verdict(const Triple& t) {
  require(t.r() >= 3, "verdict needs r >= 3");
  Verdict v{t, t.alpha(), Tri::Unknown, Tri::Unknown, {}, {}, {}};
  rule_verdict(v);

  const bool bound_excludes = t.d() < t.r() || t.g() > castelnuovo_pi(t.d(), t.r());
  if (bound_excludes) {
    if (v.exists == Tri::Yes) throw std::logic_error("verdict contradicts the Castelnuovo bound");
    if (v.exists == Tri::Unknown) v.notes.push_back("ruled out by the Castelnuovo bound");
    v.exists = Tri::No;
    v.citations.push_back(kCastelnuovo);
  }
  if (v.exists == Tri::No) {
    v.irreducible = Tri::No;
    v.components.clear();
  }
  for (auto& c : v.components) c.dim_expected = chi_min(t);
  return v;
}

std::vector<std::pair<std::string, std::int64_t>> component_dims(const Triple& t) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  for (const auto& c : verdict(t).components) out.emplace_back(c.description, c.dim.value_or(c.dim_expected));
  return out;
}

// ---- tables ----------------------------------------------------------------

const char* table_family_name(TableFamily f) noexcept {
  switch (f) {
    case TableFamily::RPlus8: return "r+8";
    case TableFamily::RPlus9: return "r+9";
    case TableFamily::GG4: return "gg4";
  }
  return "r+8";
}

std::optional<TableFamily> parse_table_family(std::string_view s) {
  if (s == "r+8") return TableFamily::RPlus8;
  if (s == "r+9") return TableFamily::RPlus9;
  if (s == "gg4") return TableFamily::GG4;
  return std::nullopt;
}

namespace {

TableRow row_for(const Triple& t, std::vector<TableEntry> entries, std::vector<std::string> citations) {
  const auto v = verdict(t);
  TableRow row;
  row.label = "(" + std::to_string(t.d()) + "," + std::to_string(t.g()) + "," + std::to_string(t.r()) + ")";
  row.triple = t;
  row.exists = v.exists;
  row.irreducible = v.irreducible;
  row.entries = std::move(entries);
  row.citations = v.citations;
  for (auto& c : citations)
    if (std::find(row.citations.begin(), row.citations.end(), c) == row.citations.end()) row.citations.push_back(c);
  return row;
}

TableRow family_row(const Triple& t) {
  auto fam = alpha4_families(t);
  return row_for(t, std::move(fam.entries), std::move(fam.citations));
}

TableRow empty_row(std::string label, std::vector<std::string> citations) {
  TableRow row;
  row.label = std::move(label);
  row.exists = Tri::No;
  row.irreducible = Tri::No;
  row.citations = std::move(citations);
  return row;
}

}  // namespace

Table table(TableFamily family) {
  Table out{family, {}, {}};
  switch (family) {
    case TableFamily::RPlus8:
      out.title = "H^L_{2r+4,r+8,r}";
      for (i64 r = 3; r <= 8; ++r) out.rows.push_back(family_row(Triple(2 * r + 4, r + 8, r)));
      out.rows.push_back(empty_row("(2r+4,r+8,r), r>=9", {kAlpha4, kCompounded}));
      break;
    case TableFamily::RPlus9:
      out.title = "H^L_{2r+5,r+9,r}";
      for (i64 r = 3; r <= 11; ++r) out.rows.push_back(family_row(Triple(2 * r + 5, r + 9, r)));
      out.rows.push_back(empty_row("(2r+5,r+9,r), r>=12", {kAlpha4, kCompounded}));
      break;
    case TableFamily::GG4:
      out.title = "smooth curves in H^L_{g,g,4}, 11 <= g <= 19";
      for (i64 g = 11; g <= 19; ++g) {
        const Triple t(g, g, 4);
        auto fam = alpha4_families(t);
        if (g == 13) {
          // Only the base-point model is listed here.
          fam.entries.erase(fam.entries.begin() + 1, fam.entries.end());
        }
        if (g == 12 || g == 13)
          for (auto& e : fam.entries) e.remark = "pentagonal";
        out.rows.push_back(row_for(t, std::move(fam.entries), std::move(fam.citations)));
      }
      break;
  }
  return out;
}

}  // namespace hcensus
