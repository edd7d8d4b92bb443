// aswt: L-functions of Artin-Schreier-Witt towers, their q-adic Newton
// polygons, and the slope-stability verdict, from a JSON tower config.
//
// Exit status: 0 when every requested check passes, 1 on a check failure
// (structured error JSON on stdout), 2 on usage/config errors.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aswt/expsums.hpp"
#include "aswt/report.hpp"
#include "aswt/witt.hpp"

namespace {

using aswt::Json;

struct CommonOpts {
  std::string tower_path;
  std::string out_dir;
  std::string format = "json";
  std::string route = "galois";
  unsigned m = 1;
  unsigned m_max = 0;
  unsigned ns = 0, nt = 0, np = 0, B = 0;
};

aswt::SumRoute parse_route(const std::string& r) {
  if (r == "witt") return aswt::SumRoute::witt;
  return aswt::SumRoute::galois;
}

void emit(const CommonOpts& opt, const std::string& name, const Json& j,
          const std::string& csv = "") {
  std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!opt.out_dir.empty()) {
    std::filesystem::create_directories(opt.out_dir);
    aswt::write_text_file(opt.out_dir + "/" + name + ".json", text);
    if (opt.format == "csv" && !csv.empty())
      aswt::write_text_file(opt.out_dir + "/" + name + ".csv", csv);
  }
}

// L at level m, with the route-equivalence check when asked for both routes
aswt::LPolynomial compute_l(const aswt::TowerSpec& spec, unsigned m,
                            const std::string& route, aswt::LPolynomial* lstar_out) {
  long d = aswt::degree_d(spec, m);
  bool nd = aswt::nondegenerate(spec, m);
  aswt::ExpSumTable sums =
      aswt::exp_sum_table(spec, m, static_cast<unsigned>(d) + 2, parse_route(route));
  if (route == "both") {
    aswt::ExpSumTable sums_w =
        aswt::exp_sum_table(spec, m, static_cast<unsigned>(d) + 2, aswt::SumRoute::witt);
    for (std::size_t k = 0; k < sums.sums.size(); ++k)
      ASWT_REQUIRE(aswt::cyc_equal(sums.sums[k], sums_w.sums[k]),
                   "route mismatch at k = " + std::to_string(k + 1));
  }
  aswt::LPolynomial lstar = aswt::lstar_from_sums(sums, spec.p, d, nd);
  if (lstar_out) *lstar_out = lstar;
  return aswt::l_from_lstar(lstar, aswt::psi_frob0(spec, m));
}

int run_constants(const aswt::TowerSpec& spec, const CommonOpts& opt) {
  unsigned m_max = opt.m_max ? opt.m_max : std::max(opt.m, 3u);
  emit(opt, "constants", aswt::constants_json(spec, m_max));
  return 0;
}

int run_lfunction(const aswt::TowerSpec& spec, const CommonOpts& opt) {
  aswt::LPolynomial lstar;
  aswt::LPolynomial L = compute_l(spec, opt.m, opt.route, &lstar);
  Json j;
  j["command"] = "lfunction";
  j["m"] = opt.m;
  j["lstar"] = aswt::lpolynomial_json(lstar, spec.a);
  j["l"] = aswt::lpolynomial_json(L, spec.a);
  emit(opt, "lfunction", j, aswt::slopes_csv(aswt::polygon_of(L, spec.a).slopes));
  return 0;
}

int run_polygon(const aswt::TowerSpec& spec, const CommonOpts& opt) {
  unsigned lo = opt.m, hi = opt.m_max ? opt.m_max : opt.m;
  Json j;
  j["command"] = "polygon";
  Json levels = Json::array();
  std::string csv;
  for (unsigned m = lo; m <= hi; ++m) {
    aswt::LPolynomial L = compute_l(spec, m, opt.route, nullptr);
    aswt::NewtonPolygon np = aswt::polygon_of(L, spec.a);
    Json lvl;
    lvl["m"] = m;
    lvl["polygon"] = aswt::polygon_json(np);
    levels.push_back(std::move(lvl));
    csv += aswt::polygon_csv(np);
  }
  j["levels"] = std::move(levels);
  emit(opt, "polygon", j, csv);
  return 0;
}

int run_cstar(const aswt::TowerSpec& spec, const CommonOpts& opt) {
  long d = aswt::degree_d(spec, opt.m);
  aswt::LPolynomial lstar;
  compute_l(spec, opt.m, opt.route, &lstar);
  unsigned Ns = opt.ns ? opt.ns : static_cast<unsigned>(2 * spec.consts.delta1 + 2);
  unsigned Np = opt.np ? opt.np : aswt::default_cstar_Np(d);
  aswt::CStarTruncation cs = aswt::cstar_truncated(lstar, spec.a, Ns, Np);
  aswt::BoundCheck bc = aswt::check_bounds(cs, spec);
  Json j;
  j["command"] = "cstar";
  j["m"] = opt.m;
  j["cstar"] = aswt::cstar_json(cs, bc);
  emit(opt, "cstar", j);
  return bc.pass ? 0 : 1;
}

int run_dwork(const aswt::TowerSpec& spec, const CommonOpts& opt) {
  unsigned Ns = opt.ns ? opt.ns : static_cast<unsigned>(2 * spec.consts.delta1 + 1);
  aswt::DworkParams params = aswt::default_dwork_params(spec, Ns);
  if (opt.nt) {
    ASWT_REQUIRE(opt.nt >= params.NT, "--nt below the module minimum");
    params.NT = opt.nt;
  }
  if (opt.np) {
    ASWT_REQUIRE(opt.np >= params.Np, "--np below the module minimum");
    unsigned pad = params.Np_internal - params.Np;
    params.Np = opt.np;
    params.Np_internal = opt.np + pad;
  }
  if (opt.B) {
    ASWT_REQUIRE(opt.B >= params.B, "--B below the module minimum");
    params.B = opt.B;
    params.Umax = spec.p * static_cast<long>(opt.B);
  }
  aswt::DworkRun run = aswt::run_dwork(spec, params);

  // specialization consistency against the exponential-sum side at level m
  unsigned m = opt.m;
  const aswt::Int q = aswt::pow_int(spec.p, spec.a);
  bool trace_ok = true;
  for (unsigned k = 1; k <= std::min(2u, params.Ns); ++k) {
    aswt::CycInt lhs = aswt::specialize_T(
        aswt::ts_scale(run.fred.traces[k - 1], aswt::pow_int(q, k) - 1), m);
    aswt::CycInt rhs = aswt::exp_sum(spec, m, k, parse_route(opt.route));
    if (!aswt::congruent_to_cap(lhs, rhs, params.NT, run.fred.traces[k - 1].Np))
      trace_ok = false;
  }
  bool lf_ok = aswt::lf_quotient_identity(run.fred, spec.p, spec.a);

  Json j;
  j["command"] = "dwork";
  j["m"] = m;
  j["order_report"] = aswt::order_report_json(run.report, params);
  j["trace_formula_check"] = trace_ok;
  j["lf_quotient_identity"] = lf_ok;
  emit(opt, "dwork", j);
  bool pass = run.report.hodge_all_pass && !run.report.hodge_any_shortfall &&
              run.report.t6_all_pass && trace_ok && lf_ok;
  return pass ? 0 : 1;
}

int run_stability(const aswt::TowerSpec& spec, const CommonOpts& opt) {
  unsigned m_max = opt.m_max ? opt.m_max : static_cast<unsigned>(spec.consts.m0) + 1;
  aswt::StabilityReport rep = aswt::verify_stability(spec, m_max, parse_route(opt.route));
  Json j;
  j["command"] = "verify-stability";
  j["report"] = aswt::stability_json(rep);
  emit(opt, "verify-stability", j);
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artin-Schreier-Witt tower L-functions and Newton polygons"};
  app.require_subcommand(1);

  CommonOpts opt;
  app.add_option("--tower", opt.tower_path, "tower config file (JSON)")->required();
  app.add_option("--m", opt.m, "character level (conductor exponent)");
  app.add_option("--m-max", opt.m_max, "largest level for ranged commands");
  app.add_option("--ns", opt.ns, "s-degree override");
  app.add_option("--nt", opt.nt, "T-truncation override");
  app.add_option("--np", opt.np, "p-precision override");
  app.add_option("--B", opt.B, "matrix truncation override");
  app.add_option("--route", opt.route, "witt | galois | both")
      ->check(CLI::IsMember({"witt", "galois", "both"}));
  app.add_option("--out", opt.out_dir, "output directory for report files");
  app.add_option("--format", opt.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* c_const = app.add_subcommand("constants", "tower constants and non-degeneracy");
  auto* c_lfun = app.add_subcommand("lfunction", "sums -> L* -> L with oracles");
  auto* c_poly = app.add_subcommand("polygon", "q-adic Newton slopes per level");
  auto* c_cstar = app.add_subcommand("cstar", "truncated C* polygon and bound checks");
  auto* c_dwork = app.add_subcommand("dwork", "Fredholm coefficients and order theorems");
  auto* c_stab = app.add_subcommand("verify-stability", "slope stability verdict");

  CLI11_PARSE(app, argc, argv);

  try {
    aswt::TowerSpec spec = aswt::tower_from_file(opt.tower_path);
    if (c_const->parsed()) return run_constants(spec, opt);
    if (c_lfun->parsed()) return run_lfunction(spec, opt);
    if (c_poly->parsed()) return run_polygon(spec, opt);
    if (c_cstar->parsed()) return run_cstar(spec, opt);
    if (c_dwork->parsed()) return run_dwork(spec, opt);
    if (c_stab->parsed()) return run_stability(spec, opt);
  } catch (const aswt::error& e) {
    Json err;
    err["error"] = e.what();
    std::cout << err.dump(2) << std::endl;
    return 1;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = e.what();
    std::cout << err.dump(2) << std::endl;
    return 2;
  }
  return 2;
}
