// JSON encodings for the exact value types and the curve descriptor.
// parse(serialize(x)) == x on every value the library produces; all numbers
// travel as strings of exact integers/fractions (never floating point).
#pragma once

#include <nlohmann/json_fwd.hpp>
#include <stdexcept>

#include "eisgen/corralg.hpp"
#include "eisgen/curve.hpp"
#include "eisgen/qfield.hpp"
#include "eisgen/ratfun.hpp"

namespace eisgen::serialize {

using json = nlohmann::json;

struct BadPayload : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// q-rational part: {"num": {"<exp>": "<rational>"}, "den": {...}}
json to_json(const QRat& r);
QRat qrat_from_json(const json& j);

// pure values carry "half_q" 0|1 on a single q-rational; mixed values are
// the two-component extension {"int_part": ..., "half_part": ...}
json to_json(const ScalarQ& s);
ScalarQ scalar_from_json(const json& j);

// {"var": ..., "num": [coeff...], "den": [coeff...]}, low degree first
json to_json(const RatFun& f);
RatFun ratfun_from_json(const json& j);

// [{"a":..,"coh":..,"tate2":..,"torsion":..,"mult":"<int>"}], key-sorted
json to_json(const corralg::GradedChar& c);
corralg::GradedChar gradedchar_from_json(const json& j);

// curve descriptor {"q":..,"g":..,"numerator":["<int>"...],"counts":[...]}
// (counts optional; when absent the numerator is taken as-is)
json curve_to_json(const curve::CurveData& C);
curve::CurveData curve_from_json(const json& j);

}  // namespace eisgen::serialize
