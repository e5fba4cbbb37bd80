#include "cuspidal/json_io.hpp"

#include <stdexcept>

#include "cuspidal/multseq.hpp"

namespace cuspidal {

namespace {

Rational rat_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a string");
  return rat_parse(j.get<std::string>());
}

const Json& need(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(std::string("missing key: ") + key);
  return *it;
}

}  // namespace

Json to_json(const P1Point& p) { return Json::array({rat_str(p.a), rat_str(p.b)}); }

P1Point p1_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("parameter point must be a pair");
  return P1Point(rat_from_json(j[0]), rat_from_json(j[1]));
}

Json to_json(const Line& l) {
  return Json::array({rat_str(l.a), rat_str(l.b), rat_str(l.c)});
}

Line line_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("line must be a triple");
  return Line(rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2]));
}

Json to_json(const BinaryForm& f) {
  Json coeffs = Json::array();
  for (const Rational& c : f.coeffs()) coeffs.push_back(rat_str(c));
  return Json{{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

BinaryForm binform_from_json(const Json& j) {
  int degree = need(j, "degree").get<int>();
  const Json& cj = need(j, "coeffs");
  if (!cj.is_array() || static_cast<int>(cj.size()) != degree + 1)
    throw std::invalid_argument("coefficient list does not match degree");
  std::vector<Rational> coeffs;
  coeffs.reserve(cj.size());
  for (const Json& c : cj) coeffs.push_back(rat_from_json(c));
  return BinaryForm(degree, std::move(coeffs));
}

Json to_json(const CurveParameterization& c) {
  return Json{{"degree", c.degree},
              {"x", to_json(c.x)},
              {"y", to_json(c.y)},
              {"z", to_json(c.z)}};
}

Json to_json(const MarkedCurve& mc) {
  return Json{{"degree", mc.curve.degree},
              {"k", mc.k},
              {"x", to_json(mc.curve.x)},
              {"y", to_json(mc.curve.y)},
              {"z", to_json(mc.curve.z)},
              {"marks",
               Json{{"q", to_json(mc.q_param)},
                    {"p", to_json(mc.p_param)},
                    {"r", to_json(mc.r_param)},
                    {"s", to_json(mc.s_param)}}},
              {"ell", to_json(mc.ell)},
              {"tangent", to_json(mc.tangent)}};
}

MarkedCurve marked_from_json(const Json& j) {
  CurveParameterization curve(binform_from_json(need(j, "x")),
                              binform_from_json(need(j, "y")),
                              binform_from_json(need(j, "z")));
  const Json& marks = need(j, "marks");
  MarkedCurve mc{need(j, "k").get<int>(),
                 std::move(curve),
                 p1_from_json(need(marks, "q")),
                 p1_from_json(need(marks, "p")),
                 p1_from_json(need(marks, "r")),
                 p1_from_json(need(marks, "s")),
                 line_from_json(need(j, "ell")),
                 line_from_json(need(j, "tangent"))};
  if (need(j, "degree").get<int>() != mc.curve.degree)
    throw std::invalid_argument("degree does not match components");
  return mc;
}

CurveParameterization curve_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("curve must be an object");
  if (j.contains("curve")) return curve_from_json(j["curve"]);
  CurveParameterization c(binform_from_json(need(j, "x")),
                          binform_from_json(need(j, "y")),
                          binform_from_json(need(j, "z")));
  if (j.contains("degree") && j["degree"].get<int>() != c.degree)
    throw std::invalid_argument("degree does not match components");
  return c;
}

Json to_json(const TheoremCurve& tc) {
  Json curve = to_json(tc.parameterization);
  curve["k"] = tc.k;
  return Json{{"k", tc.k}, {"q", to_json(tc.q)}, {"curve", std::move(curve)}};
}

Json to_json(const CurveReport& r) {
  Json cusps = Json::array();
  for (const auto& [param, seq] : r.cusp_data) {
    Json sj = Json::array();
    for (int m : seq) sj.push_back(m);
    cusps.push_back(Json{{"param", to_json(param)},
                         {"sequence", std::move(sj)},
                         {"delta", static_cast<long>(delta_of(seq))}});
  }
  Json support = Json::array();
  for (const BinaryForm& f : r.singular_support) support.push_back(f.str());
  return Json{{"degree", r.degree},
              {"cusps", std::move(cusps)},
              {"genus_saturated", r.genus_saturated},
              {"injective", r.injective},
              {"singular_support", std::move(support)},
              {"passes", r.passes}};
}

Json to_json(const CandidateData& c, const ScreenReport& r) {
  Json cusps = Json::array();
  for (const MultiplicitySequence& seq : c.cusps) {
    Json sj = Json::array();
    for (int m : seq) sj.push_back(m);
    cusps.push_back(std::move(sj));
  }
  Json reasons = Json::array();
  for (const std::string& s : r.reasons) reasons.push_back(s);
  return Json{{"degree", c.degree},
              {"cusps", std::move(cusps)},
              {"chi", std::to_string(r.chi)},
              {"verdict", r.verdict == Verdict::Survivor ? "survivor" : "eliminated"},
              {"reasons", std::move(reasons)}};
}

Json to_json(const QuadraticMap& m) {
  Json conics = Json::array();
  for (const auto& conic : m.conics) {
    Json row = Json::array();
    for (const Rational& c : conic) row.push_back(rat_str(c));
    conics.push_back(std::move(row));
  }
  return conics;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cuspidal
