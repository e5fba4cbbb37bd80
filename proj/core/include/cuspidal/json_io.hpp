#pragma once

#include <json.hpp>

#include "cuspidal/classifier.hpp"
#include "cuspidal/constructor.hpp"
#include "cuspidal/cremona.hpp"
#include "cuspidal/curve.hpp"

namespace cuspidal {

/// All JSON emitted by the library uses insertion-ordered keys and encodes
/// every number as an exact rational string "p" or "p/q"; integers that are
/// structural (degrees, levels, multiplicities) stay JSON integers.
using Json = nlohmann::ordered_json;

Json to_json(const P1Point& p);
P1Point p1_from_json(const Json& j);

Json to_json(const Line& l);
Line line_from_json(const Json& j);

Json to_json(const BinaryForm& f);
BinaryForm binform_from_json(const Json& j);

/// {"degree", "x", "y", "z"}; marked curves add "k", "marks", "ell",
/// "tangent".
Json to_json(const CurveParameterization& c);
Json to_json(const MarkedCurve& mc);
MarkedCurve marked_from_json(const Json& j);

/// Accepts a bare curve object, a marked curve, or a wrapper holding one
/// under a "curve" key.
CurveParameterization curve_from_json(const Json& j);

Json to_json(const TheoremCurve& tc);

Json to_json(const CurveReport& r);

Json to_json(const CandidateData& c, const ScreenReport& r);

Json to_json(const QuadraticMap& m);

/// Deterministic serialization: two-space indent, trailing newline.
std::string dump_json(const Json& j);

}  // namespace cuspidal
