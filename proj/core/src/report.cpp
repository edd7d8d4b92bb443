#include "aswt/report.hpp"

#include <fstream>

namespace aswt {

Json rat_json(const Rat& r) { return rat_str(r); }

Json cyc_json(const CycInt& a) {
  Json j;
  j["p"] = a.p;
  j["m"] = a.m;
  Json coeffs = Json::array();
  for (const Int& x : a.c) coeffs.push_back(x.get_str());
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json constants_json(const TowerSpec& spec, unsigned m_max) {
  const TowerConstants& K = spec.consts;
  Json j;
  j["p"] = spec.p;
  j["a"] = spec.a;
  j["D"] = K.D;
  j["delta"] = rat_json(K.delta);
  j["m_tilde"] = K.m_tilde;
  j["delta_1"] = K.delta1;
  j["m_0"] = K.m0;
  j["m_0_clamped"] = K.m0_clamped;
  Json degrees = Json::object();
  Json nondeg = Json::object();
  for (unsigned m = 1; m <= m_max; ++m) {
    degrees[std::to_string(m)] = degree_d(spec, m);
    nondeg[std::to_string(m)] = nondegenerate(spec, m);
  }
  j["d"] = std::move(degrees);
  j["nondegenerate"] = std::move(nondeg);
  return j;
}

Json lpolynomial_json(const LPolynomial& L, unsigned a_ext) {
  Json j;
  j["p"] = L.p;
  j["m"] = L.m;
  j["degree"] = L.actual_degree();
  j["expected_degree"] = L.expected_degree;
  j["nondegenerate"] = L.nondegen;
  j["degree_confirmed"] = L.degree_confirmed;
  Json coeffs = Json::array();
  for (const CycInt& c : L.coeffs) coeffs.push_back(cyc_json(c));
  j["coeffs"] = std::move(coeffs);
  NewtonPolygon np = polygon_of(L, a_ext);
  Json slopes = Json::array();
  for (const Rat& s : np.slopes) slopes.push_back(rat_json(s));
  j["slopes"] = std::move(slopes);
  return j;
}

Json polygon_json(const NewtonPolygon& np) {
  Json j;
  Json pts = Json::array();
  for (const auto& [n, v] : np.points) {
    Json pt;
    pt["n"] = n;
    pt["v"] = rat_json(v);
    pts.push_back(std::move(pt));
  }
  j["points"] = std::move(pts);
  Json hull = Json::array();
  for (const auto& [n, v] : np.hull) {
    Json pt;
    pt["n"] = n;
    pt["v"] = rat_json(v);
    hull.push_back(std::move(pt));
  }
  j["hull"] = std::move(hull);
  Json slopes = Json::array();
  for (const Rat& s : np.slopes) slopes.push_back(rat_json(s));
  j["slopes"] = std::move(slopes);
  return j;
}

Json cstar_json(const CStarTruncation& cs, const BoundCheck& bc) {
  Json j;
  j["p"] = cs.p;
  j["a"] = cs.a;
  j["m"] = cs.m;
  j["Ns"] = cs.Ns;
  j["Np"] = cs.Np;
  Json coeffs = Json::array();
  for (unsigned n = 0; n <= cs.Ns; ++n) {
    Json c;
    c["n"] = n;
    c["trusted"] = static_cast<bool>(cs.trusted[n]);
    if (cs.ord_pi[n]) c["ord_pi"] = cs.ord_pi[n]->get_str();
    coeffs.push_back(std::move(c));
  }
  j["coefficients"] = std::move(coeffs);
  j["bounds"] = Json::object();
  j["bounds"]["pass"] = bc.pass;
  j["bounds"]["verified_window"] = bc.verified_window;
  j["bounds"]["vertex_hits"] = bc.vertex_hits;
  j["bounds"]["violations"] = bc.violations;
  j["bounds"]["untrusted"] = bc.untrusted;
  return j;
}

Json order_report_json(const OrderReport& rep, const DworkParams& params) {
  Json j;
  j["Ns"] = params.Ns;
  j["NT"] = params.NT;
  j["Np"] = params.Np;
  j["B"] = params.B;
  j["hodge_all_pass"] = rep.hodge_all_pass;
  j["hodge_any_shortfall"] = rep.hodge_any_shortfall;
  j["theorem6_all_pass"] = rep.t6_all_pass;
  Json records = Json::array();
  for (const OrderRecord& r : rep.records) {
    Json rec;
    rec["n"] = r.n;
    rec["lambda"] = r.lambda;
    if (r.lambda_prime >= 0)
      rec["lambda_prime"] = r.lambda_prime;
    else
      rec["lambda_prime"] = "not visible at precision NT";
    if (r.ord.has_value)
      rec["ord_R"] = rat_json(r.ord.value);
    else
      rec["ord_R_floor"] = rat_json(r.ord.floor);
    rec["hodge_bound"] = rat_json(r.hodge_bound);
    rec["hodge_pass"] = r.hodge_pass;
    rec["hodge_shortfall"] = r.hodge_shortfall;
    if (r.t6_applies) {
      rec["Lambda"] = rat_json(r.Lambda);
      rec["theorem6_pass"] = r.t6_pass;
    }
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  return j;
}

Json stability_json(const StabilityReport& rep) {
  Json j;
  j["pass"] = rep.pass;
  j["m_0"] = rep.m0;
  j["m_0_clamped"] = rep.m0_clamped;
  Json gamma = Json::array();
  for (const Rat& g : rep.gamma) gamma.push_back(rat_json(g));
  j["gamma"] = std::move(gamma);
  Json levels = Json::array();
  for (const StabilityLevel& lvl : rep.levels) {
    Json l;
    l["m"] = lvl.m;
    l["match"] = lvl.match;
    Json exp = Json::array(), act = Json::array();
    for (const Rat& s : lvl.expected) exp.push_back(rat_json(s));
    for (const Rat& s : lvl.actual) act.push_back(rat_json(s));
    l["expected"] = std::move(exp);
    l["actual"] = std::move(act);
    if (!lvl.match) {
      Json mis = Json::array(), ext = Json::array();
      for (const Rat& s : lvl.missing) mis.push_back(rat_json(s));
      for (const Rat& s : lvl.extra) ext.push_back(rat_json(s));
      l["missing"] = std::move(mis);
      l["extra"] = std::move(ext);
    }
    if (lvl.extra_zero_flags > 0) l["extra_zero_slopes"] = lvl.extra_zero_flags;
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);
  return j;
}

std::string slopes_csv(const std::vector<Rat>& slopes) {
  std::string out = "num,den\n";
  for (const Rat& s : slopes)
    out += s.get_num().get_str() + "," + s.get_den().get_str() + "\n";
  return out;
}

std::string polygon_csv(const NewtonPolygon& np) {
  std::string out = "n,num,den\n";
  for (const auto& [n, v] : np.points)
    out += std::to_string(n) + "," + v.get_num().get_str() + "," + v.get_den().get_str() + "\n";
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  ASWT_REQUIRE(out.good(), "cannot write file: " + path);
  out << text;
  ASWT_REQUIRE(out.good(), "write failed: " + path);
}

}  // namespace aswt
