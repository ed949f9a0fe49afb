#pragma once

#include <nlohmann/json.hpp>

#include "skein/curves.hpp"
#include "skein/freealg.hpp"
#include "skein/pts.hpp"
#include "skein/reps.hpp"
#include "skein/torus.hpp"

namespace skein::io {

using nlohmann::json;

// CoeffElem: [{"exp": [a2, v1, v2, d0, d1], "c": "decimal"}, ...]
json to_json(const CoeffElem& c);
CoeffElem coeff_from_json(const json& j);
json to_json(const HalfLaurent& h);

// SkeinElem: {"presentation": name, "terms": [{"word": [names...], "coeff": CoeffElem}]}
json to_json(const SkeinElem& x, const RewriteSystem& sys);
SkeinElem skein_from_json(const json& j, const RewriteSystem& sys);

// {"terms": [{"curve": [p, q], "coeff": CoeffElem}], "scalar": CoeffElem}
json to_json(const TorusExpansion& x);
TorusExpansion torus_from_json(const json& j);

// {"basis": "threaded"|"geometric"|"power",
//  "terms": [{"curve": [n, k], "threaded": bool, "dpow": [i, j], "coeff": CoeffElem}],
//  "scalar": CoeffElem}
// One entry per (curve, d0^i d1^j); "coeff" carries the remaining A-part.
json to_json(const CurveExpansion& x);
CurveExpansion curves_from_json(const json& j);

json to_json(const ConfluenceReport& r, const RewriteSystem& sys);
json to_json(const HomReport& r, const RewriteSystem& target);

json to_json(const GroupedCoeff& g);
json to_json(const PositivityRecord& r);

// Complex numbers are [re, im]; matrices are row-major arrays of them.
json to_json(const ShadowData& s);
ShadowData shadow_from_json(const json& j);
json to_json(const RepMatrices& m);
RepMatrices rep_from_json(const json& j);
json to_json(const AdmissibilityReport& r);
json to_json(const VerifyReport& r);

/// Shortest decimal form that reads back to the same double.
std::string exact_decimal(double v);

}  // namespace skein::io
