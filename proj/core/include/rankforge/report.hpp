#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "rankforge/family.hpp"
#include "rankforge/heights.hpp"
#include "rankforge/quartic.hpp"
#include "rankforge/torsion.hpp"

namespace rankforge {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// CLI result envelope. Big integers are decimal strings, rationals are
/// "numerator/denominator" in lowest terms, so any consumer can parse the
/// payload without number-size limits.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::vector<std::pair<std::string, std::int64_t>> timings;
  std::string version = kVersion;

  Json to_json() const;
  static Report from_json(const Json& j);

  friend bool operator==(const Report&, const Report&) = default;
};

std::string json_int(const Int& z);
std::string json_rat(const Rat& q);
Int parse_int(const std::string& s);

Json solution_json(const QuarticSolution& s);
Json point_json(const CurvePoint& p);
Json instance_json(const FamilyInstance& inst);
Json height_json(const HeightValue& h);
Json certificate_json(const RankCertificate& cert);

QuarticSolution parse_solution_csv(const std::string& csv);

}  // namespace rankforge
