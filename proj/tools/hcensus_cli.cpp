// Command-line front end; talks to the library only through the C API.
#include <cstdio>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "hcensus/hcensus.h"

namespace {

constexpr int kExitPrecondition = 2;

int emit(const std::function<hc_status(hc_result**)>& op, hc_format format, bool json_errors) {
  hc_result* res = nullptr;
  const hc_status st = op(&res);
  int code = 0;
  if (st == HC_OK) {
    std::fputs(hc_result_render(res, format), stdout);
  } else {
    const char* err = hc_result_error(res);
    if (json_errors && err) {
      std::fputs(err, stderr);
    } else if (err) {
      std::fprintf(stderr, "error: %s", err);
    } else {
      std::fputs("error: invalid arguments\n", stderr);
    }
    code = st == HC_ERR_INTERNAL ? 1 : kExitPrecondition;
  }
  hc_result_free(res);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert scheme census for linearly normal space curves"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hc_version()));

  std::int64_t d = 0, g = 0, r = 0, e = 0, n = 0, s = 0, t = 0, max_bp = 2, dim_residual = 0;
  std::string cls, other, family;
  bool as_json = false, as_md = false;

  std::function<int()> action;
  auto text_or_json = [&] { return as_json ? HC_FORMAT_JSON : HC_FORMAT_TEXT; };
  auto bind = [&](CLI::App* sub, std::function<hc_status(hc_result**)> op) {
    sub->callback([&, op] { action = [&, op] { return emit(op, text_or_json(), as_json); }; });
  };

  auto* verdict = app.add_subcommand("verdict", "existence and irreducibility of H^L_{d,g,r}");
  verdict->add_option("d", d)->required();
  verdict->add_option("g", g)->required();
  verdict->add_option("r", r)->required();
  verdict->add_flag("--json", as_json);
  bind(verdict, [&](hc_result** out) { return hc_verdict(d, g, r, out); });

  auto* tbl = app.add_subcommand("table", "emit a census table");
  tbl->add_option("--family", family)->required()->check(CLI::IsMember({"r+8", "r+9", "gg4"}));
  auto* md_flag = tbl->add_flag("--md", as_md);
  tbl->add_flag("--json", as_json)->excludes(md_flag);
  tbl->callback([&] {
    action = [&] {
      const auto fmt = as_json ? HC_FORMAT_JSON : as_md ? HC_FORMAT_MARKDOWN : HC_FORMAT_TEXT;
      return emit([&](hc_result** out) { return hc_table(family.c_str(), out); }, fmt, as_json);
    };
  });

  auto* inv = app.add_subcommand("invariants", "rho, lambda, chi_min, alpha and Castelnuovo bounds");
  inv->add_option("d", d)->required();
  inv->add_option("g", g)->required();
  inv->add_option("r", r)->required();
  inv->add_flag("--json", as_json);
  bind(inv, [&](hc_result** out) { return hc_invariants(d, g, r, out); });

  auto* qm = app.add_subcommand("quadric-models", "models of a g^3_e on a smooth quadric");
  qm->add_option("--e", e)->required();
  qm->add_option("--g", g)->required();
  qm->add_option("--max-base-points", max_bp, "base point cap")->capture_default_str();
  qm->add_flag("--json", as_json);
  bind(qm, [&](hc_result** out) { return hc_quadric_models(e, g, max_bp, out); });

  auto* cub = app.add_subcommand("cubic-classify", "curve classes of degree d and genus g on a smooth cubic");
  cub->add_option("--d", d)->required();
  cub->add_option("--g", g)->required();
  cub->add_flag("--json", as_json);
  bind(cub, [&](hc_result** out) { return hc_cubic_classify(d, g, out); });

  auto* neg = app.add_subcommand("neg-curves", "(-1)-curves on S_n");
  neg->add_option("--n", n)->required();
  neg->add_flag("--json", as_json);
  bind(neg, [&](hc_result** out) { return hc_neg_curves(n, out); });

  auto* va = app.add_subcommand("very-ample", "(-1)-curve very-ampleness test");
  va->add_option("--class", cls)->required();
  va->add_flag("--json", as_json);
  bind(va, [&](hc_result** out) { return hc_very_ample(cls.c_str(), out); });

  auto* gen = app.add_subcommand("genus", "arithmetic genus of a class on S_n");
  gen->add_option("--class", cls)->required();
  gen->add_flag("--json", as_json);
  bind(gen, [&](hc_result** out) { return hc_genus(cls.c_str(), out); });

  auto* isect = app.add_subcommand("intersect", "intersection number of two classes on S_n");
  isect->add_option("--x", cls)->required();
  isect->add_option("--y", other)->required();
  isect->add_flag("--json", as_json);
  bind(isect, [&](hc_result** out) { return hc_intersect(cls.c_str(), other.c_str(), out); });

  auto* rec = app.add_subcommand("recipe", "k-gonal construction of a g^r_{g+r-4}");
  rec->add_option("--g", g)->required();
  rec->add_option("--r", r)->required();
  rec->add_flag("--json", as_json);
  bind(rec, [&](hc_result** out) { return hc_recipe(g, r, out); });

  auto* comp = app.add_subcommand("compounded", "compounded g^3_e cases");
  comp->add_option("--e", e)->required();
  comp->add_flag("--json", as_json);
  bind(comp, [&](hc_result** out) { return hc_compounded(e, out); });

  auto* lia = app.add_subcommand("liaison", "linkage by complete intersections");
  lia->add_option("--d", d)->required();
  lia->add_option("--g", g)->required();
  lia->add_option("--s", s)->required();
  lia->add_option("--t", t)->required();
  auto* dim_opt = lia->add_option("--dim-residual", dim_residual, "dimension of the residual Hilbert scheme");
  lia->add_flag("--json", as_json);
  bind(lia, [&](hc_result** out) {
    return hc_liaison(d, g, s, t, dim_opt->count() > 0 ? 1 : 0, dim_residual, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitPrecondition;
  }
  return action ? action() : kExitPrecondition;
}
