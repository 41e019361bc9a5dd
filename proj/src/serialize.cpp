#include "eisgen/serialize.hpp"

#include <nlohmann/json.hpp>

namespace eisgen::serialize {

namespace {

std::string rat_str(const Rat& r) {
  Int n = boost::multiprecision::numerator(r);
  Int d = boost::multiprecision::denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw BadPayload("malformed rational: " + s);
  }
}

json poly_to_json(const QPoly& p) {
  json j = json::object();
  for (size_t i = 0; i < p.c.size(); ++i)
    if (p.c[i] != 0) j[std::to_string(i)] = rat_str(p.c[i]);
  return j;
}

QPoly poly_from_json(const json& j) {
  if (!j.is_object()) throw BadPayload("polynomial payload must be an object");
  QPoly p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    size_t e;
    try {
      e = std::stoul(it.key());
    } catch (const std::exception&) {
      throw BadPayload("bad exponent key: " + it.key());
    }
    if (e >= p.c.size()) p.c.resize(e + 1, Rat(0));
    p.c[e] = rat_parse(it.value().get<std::string>());
  }
  p.trim();
  return p;
}

}  // namespace

json to_json(const QRat& r) {
  return json{{"num", poly_to_json(r.num)}, {"den", poly_to_json(r.den)}};
}

QRat qrat_from_json(const json& j) {
  if (!j.contains("num") || !j.contains("den"))
    throw BadPayload("q-rational payload needs num and den");
  return QRat(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

json to_json(const ScalarQ& s) {
  if (s.is_pure()) {
    const QRat& part = s.half_tag() ? s.b : s.a;
    json j = to_json(part);
    j["half_q"] = s.half_tag();
    return j;
  }
  json lo = to_json(s.a);
  lo["half_q"] = 0;
  json hi = to_json(s.b);
  hi["half_q"] = 1;
  return json{{"int_part", lo}, {"half_part", hi}};
}

ScalarQ scalar_from_json(const json& j) {
  if (j.contains("int_part")) {
    ScalarQ lo = scalar_from_json(j.at("int_part"));
    ScalarQ hi = scalar_from_json(j.at("half_part"));
    if (lo.half_tag() != 0 || hi.half_tag() != 1)
      throw BadPayload("mixed scalar parts carry the wrong half tags");
    return ScalarQ(lo.a, hi.b);
  }
  QRat part = qrat_from_json(j);
  int tag = j.value("half_q", 0);
  if (tag != 0 && tag != 1) throw BadPayload("half_q must be 0 or 1");
  return tag ? ScalarQ(QRat(0L), part) : ScalarQ(part);
}

json to_json(const RatFun& f) {
  json num = json::array(), den = json::array();
  for (const auto& c : f.num.c) num.push_back(to_json(c));
  for (const auto& c : f.den.c) den.push_back(to_json(c));
  return json{{"var", f.var}, {"num", num}, {"den", den}};
}

RatFun ratfun_from_json(const json& j) {
  if (!j.contains("var") || !j.contains("num") || !j.contains("den"))
    throw BadPayload("rational-function payload needs var, num, den");
  SPoly num, den;
  for (const auto& c : j["num"]) num.c.push_back(scalar_from_json(c));
  for (const auto& c : j["den"]) den.c.push_back(scalar_from_json(c));
  num.trim();
  den.trim();
  return RatFun(j["var"].get<std::string>(), num, den);
}

json to_json(const corralg::GradedChar& c) {
  json arr = json::array();
  for (const auto& [k, n] : c.mult)
    arr.push_back(json{{"a", std::get<0>(k)},
                       {"coh", std::get<1>(k)},
                       {"tate2", std::get<2>(k)},
                       {"torsion", std::get<3>(k)},
                       {"mult", std::to_string(n)}});
  return arr;
}

corralg::GradedChar gradedchar_from_json(const json& j) {
  if (!j.is_array()) throw BadPayload("graded character payload must be an array");
  corralg::GradedChar c;
  for (const auto& e : j)
    c.add(e.at("a").get<int>(), e.at("coh").get<int>(), e.at("tate2").get<int>(),
          e.at("torsion").get<int>(), std::stoll(e.at("mult").get<std::string>()));
  return c;
}

json curve_to_json(const curve::CurveData& C) {
  json num = json::array();
  for (const auto& c : C.P) num.push_back(c.str());
  json j{{"q", C.q}, {"g", C.g}, {"numerator", num}};
  if (!C.counts.empty()) {
    json counts = json::array();
    for (const auto& n : C.counts) counts.push_back(n.str());
    j["counts"] = counts;
  }
  return j;
}

curve::CurveData curve_from_json(const json& j) {
  if (!j.contains("q") || !j.contains("g"))
    throw BadPayload("curve descriptor needs q and g");
  long q = j["q"].get<long>();
  long g = j["g"].get<long>();
  if (j.contains("counts")) {
    std::vector<Int> counts;
    for (const auto& n : j["counts"]) counts.emplace_back(n.get<std::string>());
    curve::CurveData C = curve::zeta_from_counts(q, g, counts);
    if (j.contains("numerator")) {
      std::vector<Int> P;
      for (const auto& c : j["numerator"]) P.emplace_back(c.get<std::string>());
      if (P != C.P) throw BadPayload("numerator disagrees with the point counts");
    }
    return C;
  }
  if (!j.contains("numerator"))
    throw BadPayload("curve descriptor needs counts or a numerator");
  curve::CurveData C;
  C.q = q;
  C.g = g;
  for (const auto& c : j["numerator"]) C.P.emplace_back(c.get<std::string>());
  if (long(C.P.size()) != 2 * g + 1 || C.P.empty() || C.P[0] != 1)
    throw BadPayload("numerator must have degree 2g and constant term 1");
  return C;
}

}  // namespace eisgen::serialize
