#include "hcensus/hcensus.h"

#include <functional>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hcensus/census.hpp"
#include "hcensus/errors.hpp"

using json = nlohmann::ordered_json;

struct hc_result {
  hc_status status = HC_OK;
  std::string text;
  std::string json_doc;
  std::string markdown;  // empty: fall back to text
  std::string error;
};

namespace {

using namespace hcensus;

struct Output {
  std::string text;
  std::string json_doc;
  std::string markdown;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string error_doc(const char* kind, const std::string& message) {
  return dump(json{{"error", {{"kind", kind}, {"message", message}}}});
}

hc_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return HC_ERR_PARSE;
    case ErrorKind::Overflow: return HC_ERR_ARGUMENT;
    default: return HC_ERR_PRECONDITION;
  }
}

hc_status run(hc_result** out, const std::function<Output()>& body) {
  if (out == nullptr) return HC_ERR_ARGUMENT;
  *out = nullptr;
  auto* res = new (std::nothrow) hc_result;
  if (res == nullptr) return HC_ERR_INTERNAL;
  try {
    auto o = body();
    res->text = std::move(o.text);
    res->json_doc = std::move(o.json_doc);
    res->markdown = std::move(o.markdown);
  } catch (const Error& e) {
    res->status = status_of(e.kind());
    res->error = error_doc(error_kind_name(e.kind()), e.what());
  } catch (const std::invalid_argument& e) {
    res->status = HC_ERR_ARGUMENT;
    res->error = error_doc("argument", e.what());
  } catch (const std::exception& e) {
    res->status = HC_ERR_INTERNAL;
    res->error = error_doc("internal", e.what());
  }
  *out = res;
  return res->status;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

json quadric_model_json(const ModelRecord& m) {
  json j = {{"class", to_string(m.cls)},
            {"surface", model_surface_name(m.surface)},
            {"delta", m.delta},
            {"base_points", m.base_points},
            {"compounded_or_degenerate", m.compounded_or_degenerate()}};
  const auto a = analyse_residual(m);
  if (!a) {
    j["residual"] = nullptr;
    return j;
  }
  if (a->on_blowup) {
    j["curve"] = to_string(*a->curve);
    j["residual"] = to_string(*a->residual);
    j["criterion_only"] = a->criterion_only;
    j["witness"] = a->witness ? json(describe(*a->witness)) : json(nullptr);
  } else {
    j["residual"] = to_string(*a->quadric_residual);
  }
  j["residual_degree"] = a->residual_degree;
  j["residual_very_ample"] = a->very_ample;
  if (m.delta >= 0 && m.cls.a >= 1) {
    j["severi_dim"] = severi_dim(m.cls, m.delta);
    j["glevel_dim"] = glevel_dim(m.cls, m.delta);
  }
  return j;
}

json recipe_json(const GonalRecipe& r) {
  json conds = json::array();
  for (const auto& c : r.conditions) conds.push_back({{"name", c.name}, {"value", c.value}});
  return {{"g", r.g},
          {"r", r.r},
          {"e", r.e},
          {"k", r.k},
          {"n", r.n},
          {"m", r.m},
          {"extra_points", r.extra_points},
          {"valid", r.valid()},
          {"series_degree", r.series_degree()},
          {"series_dim", r.series_dim()},
          {"conditions", conds},
          {"assumptions", r.assumptions}};
}

}  // namespace

extern "C" {

hc_status hc_invariants(int64_t d, int64_t g, int64_t r, hc_result** out) {
  return run(out, [=] {
    const Triple t(d, g, r);
    json j = {{"d", d}, {"g", g}, {"r", r}, {"alpha", t.alpha()}, {"rho", rho(t)}, {"lambda", lambda(t)},
              {"chi_min", chi_min(t)}};
    const auto pi = try_castelnuovo_pi(d, r);
    j["pi"] = pi ? json(*pi) : json(nullptr);
    if (r == 3 && d >= 7) j["pi1_r3"] = castelnuovo_pi1_r3(d);
    std::ostringstream os;
    for (const auto& [k, v] : j.items()) os << k << " = " << v.dump() << "\n";
    return Output{os.str(), dump(j), {}};
  });
}

hc_status hc_verdict(int64_t d, int64_t g, int64_t r, hc_result** out) {
  return run(out, [=] {
    const auto v = verdict(Triple(d, g, r));
    return Output{verdict_text(v), verdict_json(v), {}};
  });
}

hc_status hc_table(const char* family, hc_result** out) {
  return run(out, [=] {
    const auto f = parse_table_family(family ? family : "");
    if (!f) throw std::invalid_argument(std::string("unknown table family '") + (family ? family : "") + "'");
    const auto t = table(*f);
    return Output{table_text(t), table_json(t), table_markdown(t)};
  });
}

hc_status hc_quadric_models(int64_t e, int64_t g, int64_t max_base_points, hc_result** out) {
  return run(out, [=] {
    json models = json::array();
    std::ostringstream os;
    for (const auto& m : enumerate_quadric_models(e, g, max_base_points)) {
      auto j = quadric_model_json(m);
      os << to_string(m.cls) << "  delta=" << m.delta << "  base_points=" << m.base_points;
      if (m.compounded_or_degenerate()) os << "  compounded-or-degenerate";
      if (j.contains("curve")) os << "  curve=" << j["curve"].get<std::string>();
      if (!j["residual"].is_null()) os << "  residual=" << j["residual"].get<std::string>();
      if (j.contains("residual_very_ample")) os << "  very_ample=" << bool_text(j["residual_very_ample"].get<bool>());
      if (j.contains("witness") && !j["witness"].is_null()) os << "  witness=" << j["witness"].get<std::string>();
      os << "\n";
      models.push_back(std::move(j));
    }
    return Output{os.str(), dump(json{{"e", e}, {"g", g}, {"max_base_points", max_base_points}, {"models", models}}),
                  {}};
  });
}

hc_status hc_cubic_classify(int64_t d, int64_t g, hc_result** out) {
  return run(out, [=] {
    const auto range = schwartz_a_range(d, g);
    const auto sols = classify_cubic_classes(d, g);
    json arr = json::array();
    std::ostringstream os;
    if (range)
      os << "a in [" << range->first << "," << range->second << "]\n";
    else
      os << "a-range empty\n";
    for (const auto& s : sols) {
      json j = {{"class", to_string(s.cls)},
                {"orbit_size", s.orbit_size},
                {"line", s.line ? json(describe(*s.line)) : json(nullptr)}};
      try {
        j["h0"] = expected_h0(s.cls);
      } catch (const Error&) {
        j["h0"] = nullptr;
      }
      os << to_string(s.cls) << "  orbit=" << s.orbit_size;
      if (s.line) os << "  = 3H + " << describe(*s.line);
      os << "\n";
      arr.push_back(std::move(j));
    }
    json doc = {{"d", d}, {"g", g}};
    doc["a_range"] = range ? json::array({range->first, range->second}) : json(nullptr);
    doc["classes"] = arr;
    return Output{os.str(), dump(doc), {}};
  });
}

hc_status hc_neg_curves(int64_t n, hc_result** out) {
  return run(out, [=] {
    require(n >= 1 && n <= 8, "neg_curves needs 1 <= n <= 8");
    const auto& curves = neg_curves(static_cast<std::size_t>(n));
    json arr = json::array();
    std::ostringstream os;
    os << curves.size() << " (-1)-curves on S_" << n << "\n";
    for (const auto& e : curves) {
      arr.push_back(to_string(e));
      os << to_string(e) << "  " << describe(e) << "\n";
    }
    return Output{os.str(), dump(json{{"n", n}, {"count", curves.size()}, {"curves", arr}}), {}};
  });
}

hc_status hc_very_ample(const char* cls, hc_result** out) {
  return run(out, [=] {
    if (cls == nullptr) throw std::invalid_argument("class text is null");
    const auto x = parse_blowup(cls);
    const bool va = is_very_ample(x);
    std::optional<BlowupClass> low;
    for (const auto& e : neg_curves(x.n()))
      if (intersect(x, e) < 1) {
        low = e;
        break;
      }
    json j = {{"class", to_string(x)},
              {"very_ample", va},
              {"criterion_only", criterion_only(x.n())},
              {"witness", low ? json(describe(*low)) : json(nullptr)}};
    std::string text = to_string(x) + " very_ample=" + bool_text(va);
    if (criterion_only(x.n())) text += " (criterion only)";
    if (low) text += " witness=" + describe(*low);
    return Output{text + "\n", dump(j), {}};
  });
}

hc_status hc_genus(const char* cls, hc_result** out) {
  return run(out, [=] {
    if (cls == nullptr) throw std::invalid_argument("class text is null");
    const auto x = parse_blowup(cls);
    const auto k = BlowupClass::canonical(x.n());
    json j = {{"class", to_string(x)},
              {"self_intersection", intersect(x, x)},
              {"degree_against_minus_k", -intersect(x, k)},
              {"genus", pa(x)}};
    std::ostringstream os;
    os << to_string(x) << "  x^2=" << intersect(x, x) << "  -K.x=" << -intersect(x, k) << "  pa=" << pa(x) << "\n";
    return Output{os.str(), dump(j), {}};
  });
}

hc_status hc_intersect(const char* a, const char* b, hc_result** out) {
  return run(out, [=] {
    if (a == nullptr || b == nullptr) throw std::invalid_argument("class text is null");
    const auto x = parse_blowup(a);
    const auto y = parse_blowup(b);
    const auto v = intersect(x, y);
    return Output{std::to_string(v) + "\n", dump(json{{"x", to_string(x)}, {"y", to_string(y)}, {"value", v}}), {}};
  });
}

hc_status hc_recipe(int64_t g, int64_t r, hc_result** out) {
  return run(out, [=] {
    const auto rec = recipe_candidate(g, r);
    std::ostringstream os;
    os << "e=" << rec.e << " k=" << rec.k << " extra_points=" << rec.extra_points << " m=" << rec.m
       << " n=" << rec.n << "\n";
    for (const auto& c : rec.conditions) os << "  " << c.name << ": " << bool_text(c.value) << "\n";
    for (const auto& a : rec.assumptions) os << "  assume: " << a << "\n";
    os << (rec.valid() ? "valid: g^" + std::to_string(rec.series_dim()) + "_" + std::to_string(rec.series_degree())
                       : std::string("no recipe"))
       << "\n";
    return Output{os.str(), dump(recipe_json(rec)), {}};
  });
}

hc_status hc_compounded(int64_t e, hc_result** out) {
  return run(out, [=] {
    json arr = json::array();
    std::ostringstream os;
    for (const auto& [k, f] : compounded_cases(e)) {
      const auto meaning = (e == 10 || e == 11) ? compounded_interpretation(k, f) : std::string();
      arr.push_back({{"k", k}, {"f", f}, {"interpretation", meaning.empty() ? json(nullptr) : json(meaning)}});
      os << "(" << k << "," << f << ")";
      if (!meaning.empty()) os << "  " << meaning;
      os << "\n";
    }
    json doc = {{"e", e}, {"cases", arr}};
    if (e == 10 || e == 11) {
      doc["pi_e_3"] = castelnuovo_pi(e, 3);
      os << "every g^3_" << e << " is compounded when g > " << castelnuovo_pi(e, 3) << "\n";
    }
    return Output{os.str(), dump(doc), {}};
  });
}

hc_status hc_liaison(int64_t d, int64_t g, int64_t s, int64_t t, int has_dim_residual, int64_t dim_residual,
                     hc_result** out) {
  return run(out, [=] {
    const auto step = linked_genus(d, g, s, t);
    json j = {{"d", d}, {"g", g}, {"s", s}, {"t", t}, {"e", step.e}, {"h", step.h}};
    std::ostringstream os;
    os << "(" << d << "," << g << ") linked by (" << s << "," << t << ") to (" << step.e << "," << step.h << ")\n";
    if (has_dim_residual) {
      const auto a = linkage_dimension_account(d, g, s, t, dim_residual);
      j["surfaces_through_source"] = a.surfaces_through_source;
      j["surfaces_through_residual"] = a.surfaces_through_residual;
      j["fiber_down"] = a.fiber_down;
      j["sigma_dim"] = a.sigma_dim;
      j["fiber_up"] = a.fiber_up;
      j["component_dim"] = a.component_dim;
      j["citations"] = a.citations;
      os << "surfaces of degree " << s << " through source: " << a.surfaces_through_source
         << ", through residual: " << a.surfaces_through_residual << "\n";
      os << "sigma " << a.sigma_dim << " = " << a.fiber_down << " + " << dim_residual << "; component "
         << a.component_dim << " = " << a.sigma_dim << " - " << a.fiber_up << "\n";
    }
    return Output{os.str(), dump(j), {}};
  });
}

hc_status hc_result_status(const hc_result* res) { return res ? res->status : HC_ERR_ARGUMENT; }

const char* hc_result_render(hc_result* res, hc_format format) {
  if (res == nullptr || res->status != HC_OK) return nullptr;
  switch (format) {
    case HC_FORMAT_TEXT: return res->text.c_str();
    case HC_FORMAT_JSON: return res->json_doc.c_str();
    case HC_FORMAT_MARKDOWN: return res->markdown.empty() ? res->text.c_str() : res->markdown.c_str();
  }
  return nullptr;
}

const char* hc_result_error(const hc_result* res) {
  if (res == nullptr || res->status == HC_OK) return nullptr;
  return res->error.c_str();
}

void hc_result_free(hc_result* res) { delete res; }

const char* hc_version(void) { return "0.1.0"; }

}  // extern "C"
