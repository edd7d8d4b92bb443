#pragma once

// Deterministic machine-readable reports: stable key order, exact rationals
// as "num/den" strings, no floating point.  Identical inputs must serialize
// byte-identically.

#include <string>
#include <vector>

#include <json.hpp>

#include "aswt/dwork.hpp"
#include "aswt/lseries.hpp"
#include "aswt/polygon.hpp"
#include "aswt/tower.hpp"

namespace aswt {

using Json = nlohmann::ordered_json;

Json cyc_json(const CycInt& a);
Json rat_json(const Rat& r);  // "num/den" string

Json constants_json(const TowerSpec& spec, unsigned m_max);
Json lpolynomial_json(const LPolynomial& L, unsigned a_ext);
Json polygon_json(const NewtonPolygon& np);
Json cstar_json(const CStarTruncation& cs, const BoundCheck& bc);
Json order_report_json(const OrderReport& rep, const DworkParams& params);
Json stability_json(const StabilityReport& rep);

std::string slopes_csv(const std::vector<Rat>& slopes);
std::string polygon_csv(const NewtonPolygon& np);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace aswt
