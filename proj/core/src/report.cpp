#include "rankforge/report.hpp"

#include <sstream>

namespace rankforge {

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  Json t = Json::object();
  for (const auto& [stage, ms] : timings) t[stage] = ms;
  j["timings"] = t;
  j["version"] = version;
  return j;
}

Report Report::from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.outputs = j.at("outputs");
  for (const auto& [stage, ms] : j.at("timings").items())
    r.timings.emplace_back(stage, ms.get<std::int64_t>());
  r.version = j.at("version").get<std::string>();
  return r;
}

std::string json_int(const Int& z) { return z.get_str(); }

std::string json_rat(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    fail(Errc::usage, "not a decimal integer: '" + s + "'");
  }
}

Json solution_json(const QuarticSolution& s) {
  Json j;
  j["a"] = json_int(s.a);
  j["b"] = json_int(s.b);
  j["c"] = json_int(s.c);
  j["d"] = json_int(s.d);
  j["verified"] = s.verified();
  j["degenerate"] = s.degenerate();
  return j;
}

Json point_json(const CurvePoint& p) {
  Json j;
  if (p.is_infinity()) {
    j["infinity"] = true;
  } else {
    j["x"] = json_rat(p.x());
    j["y"] = json_rat(p.y());
  }
  return j;
}

Json instance_json(const FamilyInstance& inst) {
  Json j;
  j["solution"] = solution_json(inst.solution);
  j["sixteen_s2"] = json_int(inst.sixteen_s2);
  j["k"] = json_int(inst.k);
  Json curve;
  curve["a"] = json_int(inst.curve.a);
  curve["b"] = json_int(inst.curve.b);
  j["curve"] = curve;
  Json pts = Json::array();
  for (const CurvePoint& p : inst.points) pts.push_back(point_json(p));
  j["points"] = pts;
  return j;
}

Json height_json(const HeightValue& h) {
  Json j;
  j["value"] = h.value.str(36);
  std::ostringstream err;
  err.precision(6);
  err << std::scientific << h.err;
  j["err"] = err.str();
  return j;
}

Json certificate_json(const RankCertificate& cert) {
  Json j;
  Json gram = Json::array();
  for (const auto& row : cert.gram) {
    Json r = Json::array();
    for (const HeightValue& h : row) r.push_back(height_json(h));
    gram.push_back(r);
  }
  j["gram"] = gram;
  j["determinant"] = height_json(cert.determinant);
  j["normalization"] = to_string(cert.normalization);
  j["rank_lower_bound"] = cert.rank_lower_bound;
  j["torsion"] = to_string(cert.torsion);
  return j;
}

QuarticSolution parse_solution_csv(const std::string& csv) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) fail(Errc::usage, "expected A,B,C,D; got '" + csv + "'");
  return QuarticSolution{parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]),
                         parse_int(parts[3])};
}

}  // namespace rankforge
