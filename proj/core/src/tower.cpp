#include "aswt/tower.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace aswt {

namespace {

TowerConstants derive_constants(long p, unsigned a, const std::vector<TowerRow>& rows) {
  TowerConstants k;
  for (const TowerRow& r : rows) k.D = std::max(k.D, r.degree());
  for (const TowerRow& r : rows) {
    if (r.degree() == k.D) {
      k.m_tilde = r.index + 1;
      break;
    }
  }
  k.delta = Rat(0);
  for (const TowerRow& r : rows)
    k.delta = std::max(k.delta, make_rat(Int(r.degree()), pow_int(p, r.index)));

  // delta_1 two ways; the theorem says they agree, keep the check live
  Rat d1_scaled = k.delta * Rat(pow_int(p, k.m_tilde - 1));
  ASWT_REQUIRE(d1_scaled.get_den() == 1, "delta_1 = p^{m~-1} delta is not integral");
  Int d1_max = 0;
  for (const TowerRow& r : rows) {
    if (r.index + 1 > k.m_tilde) continue;
    d1_max = std::max(d1_max, Int(Int(r.degree()) * pow_int(p, k.m_tilde - 1 - r.index)));
  }
  ASWT_REQUIRE(d1_scaled.get_num() == d1_max,
               "delta_1 mismatch between p^{m~-1} delta and max form");
  k.delta1 = to_long(d1_max);

  // m0 = m~ + ceil(log_p(1/p + a(delta1-1)^2/(8 delta1))), clamped to >= m~
  Rat arg = make_rat(Int(1), Int(p)) +
            make_rat(Int(a) * Int(k.delta1 - 1) * Int(k.delta1 - 1), Int(8) * Int(k.delta1));
  long e = ceil_log(p, arg);
  long m0 = static_cast<long>(k.m_tilde) + e;
  if (m0 < static_cast<long>(k.m_tilde)) {
    k.m0_clamped = true;
    m0 = k.m_tilde;
  }
  k.m0 = m0;
  return k;
}

}  // namespace

TowerSpec make_tower(long p, unsigned a,
                     const std::vector<std::pair<unsigned, std::vector<std::vector<long>>>>& rows) {
  ASWT_REQUIRE(p >= 2, "make_tower: p must be a prime >= 2");
  for (long d = 2; d * d <= p; ++d) ASWT_REQUIRE(p % d != 0, "make_tower: p is not prime");
  ASWT_REQUIRE(a >= 1, "make_tower: a >= 1 required");

  TowerSpec spec;
  spec.p = p;
  spec.a = a;
  spec.fq = &gr_context(p, 1, a);

  for (const auto& [i, cs] : rows) {
    TowerRow row;
    row.index = i;
    for (const std::vector<long>& tuple : cs) {
      std::vector<Int> coords(a, 0);
      ASWT_REQUIRE(tuple.size() <= a, "make_tower: coefficient tuple longer than a");
      for (std::size_t j = 0; j < tuple.size(); ++j)
        coords[j] = mod_positive(Int(tuple[j]), Int(p));
      row.coeffs.push_back(gr_from_coords(*spec.fq, std::move(coords)));
    }
    while (!row.coeffs.empty() && row.coeffs.back().is_zero()) row.coeffs.pop_back();
    if (row.coeffs.empty()) continue;  // zero row
    spec.rows.push_back(std::move(row));
  }
  std::sort(spec.rows.begin(), spec.rows.end(),
            [](const TowerRow& x, const TowerRow& y) { return x.index < y.index; });
  for (std::size_t j = 0; j + 1 < spec.rows.size(); ++j)
    ASWT_REQUIRE(spec.rows[j].index != spec.rows[j + 1].index, "make_tower: duplicate row index");

  const TowerRow* r0 = spec.row(0);
  ASWT_REQUIRE(r0 != nullptr && r0->degree() > 0, "make_tower: d_0 > 0 required");
  spec.consts = derive_constants(p, a, spec.rows);
  return spec;
}

TowerSpec make_tower_fp(long p, const std::vector<std::pair<unsigned, std::vector<long>>>& rows) {
  std::vector<std::pair<unsigned, std::vector<std::vector<long>>>> rs;
  for (const auto& [i, cs] : rows) {
    std::vector<std::vector<long>> tuples;
    for (long c : cs) tuples.push_back({c});
    rs.emplace_back(i, std::move(tuples));
  }
  return make_tower(p, 1, rs);
}

TowerSpec tower_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ASWT_REQUIRE(j.contains("p") && j.contains("rows"), "tower config: p and rows required");
  long p = j.at("p").get<long>();
  unsigned a = j.value("a", 1u);
  std::vector<std::pair<unsigned, std::vector<std::vector<long>>>> rows;
  for (const auto& row : j.at("rows")) {
    unsigned i = row.at("i").get<unsigned>();
    std::vector<std::vector<long>> coeffs;
    for (const auto& entry : row.at("coeffs")) {
      if (entry.is_number_integer())
        coeffs.push_back({entry.get<long>()});
      else
        coeffs.push_back(entry.get<std::vector<long>>());
    }
    rows.emplace_back(i, std::move(coeffs));
  }
  return make_tower(p, a, rows);
}

TowerSpec tower_from_file(const std::string& path) {
  std::ifstream in(path);
  ASWT_REQUIRE(in.good(), "cannot open tower config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return tower_from_json_text(ss.str());
}

std::string tower_to_json_text(const TowerSpec& spec) {
  nlohmann::ordered_json j;
  j["p"] = spec.p;
  j["a"] = spec.a;
  j["rows"] = nlohmann::ordered_json::array();
  for (const TowerRow& r : spec.rows) {
    nlohmann::ordered_json row;
    row["i"] = r.index;
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const GRElem& c : r.coeffs) {
      if (spec.a == 1) {
        coeffs.push_back(to_long(c.c[0]));
      } else {
        std::vector<long> tuple;
        for (const Int& x : c.c) tuple.push_back(to_long(x));
        coeffs.push_back(tuple);
      }
    }
    row["coeffs"] = std::move(coeffs);
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2);
}

TowerConstants tower_constants(const TowerSpec& spec) { return spec.consts; }

long degree_d(const TowerSpec& spec, unsigned m) {
  Int best = 0;
  for (const TowerRow& r : spec.rows) {
    if (r.index >= m) continue;
    best = std::max(best, Int(Int(r.degree()) * pow_int(spec.p, m - 1 - r.index)));
  }
  ASWT_REQUIRE(best > 0, "degree_d: degenerate tower with no rows below level m");
  return to_long(best);
}

bool nondegenerate(const TowerSpec& spec, unsigned m) {
  ASWT_REQUIRE(m >= 1, "nondegenerate: m >= 1 required");
  Int dm = degree_d(spec, m);
  GRElem sum = gr_zero(*spec.fq);
  for (const TowerRow& r : spec.rows) {
    if (r.index >= m) continue;
    Int e = pow_int(spec.p, m - 1 - r.index);
    if (Int(r.degree()) * e != dm) continue;
    GRElem lead_pow = gr_pow(r.coeffs.back(), e);
    sum = gr_add(sum, gr_scale(lead_pow, Int(r.degree())));
  }
  return !sum.is_zero();
}

}  // namespace aswt
