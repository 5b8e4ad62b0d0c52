#ifndef WSG_JSON_IO_HPP
#define WSG_JSON_IO_HPP

// JSON encodings: series, input models and verification reports. Output
// objects keep insertion order so serialization is byte-stable.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "wsg/errors.hpp"
#include "wsg/onepoint.hpp"
#include "wsg/oracle.hpp"
#include "wsg/series.hpp"
#include "wsg/twopoint.hpp"
#include "wsg/verification.hpp"

namespace wsg::json_io {

using Json = nlohmann::ordered_json;

inline Json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(c));
  return Json(c.str());
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw InputError("invalid integer string '" + j.get<std::string>() + "'");
    }
  }
  throw InputError("expected an integer coefficient");
}

inline Json exponent_to_json(const ExponentVec& e) { return Json(e.components()); }

inline Json point_to_json(Point p) { return Json::array({p.x, p.y}); }

inline Json points_to_json(const std::vector<Point>& pts) {
  Json a = Json::array();
  for (auto p : pts) a.push_back(point_to_json(p));
  return a;
}

inline Json poly_terms_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["e"] = exponent_to_json(e);
    t["c"] = integer_to_json(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

/// {"num":[{"e":[..],"c":N},...],"den":[[..],...]}
inline Json series_to_json(const RationalGF& f) {
  Json j;
  j["num"] = poly_terms_to_json(f.numerator());
  Json den = Json::array();
  for (const auto& v : f.denominator()) den.push_back(exponent_to_json(v));
  j["den"] = std::move(den);
  return j;
}

namespace detail {

inline std::vector<std::int64_t> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError(std::string(what) + " must contain integers only");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

inline const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

inline std::int64_t int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace detail

inline RationalGF series_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("series must be a JSON object");
  const Json& num = detail::field(j, "num");
  const Json& den = detail::field(j, "den");
  if (!num.is_array() || !den.is_array()) throw InputError("series 'num' and 'den' must be arrays");
  std::optional<std::size_t> arity;
  std::vector<std::pair<ExponentVec, Integer>> terms;
  auto take_arity = [&](const ExponentVec& e) {
    if (arity && *arity != e.arity()) throw InputError("series exponents mix arities");
    arity = e.arity();
  };
  for (const auto& t : num) {
    ExponentVec e = ExponentVec::from_components(detail::int_list(detail::field(t, "e"), "exponent"));
    take_arity(e);
    terms.emplace_back(e, integer_from_json(detail::field(t, "c")));
  }
  std::vector<ExponentVec> factors;
  for (const auto& v : den) {
    ExponentVec e = ExponentVec::from_components(detail::int_list(v, "denominator factor"));
    take_arity(e);
    factors.push_back(e);
  }
  const std::size_t n = arity.value_or(1);
  return RationalGF(LaurentPoly(n, terms), std::move(factors));
}

inline RationalGF series_from_string(const std::string& text) {
  try {
    return series_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

struct TwoPointModel {
  TwoPointSemigroup semigroup;
  std::optional<oracle::Fixture> fixture;
};

using Model = std::variant<NumericalSemigroup, OnePointSemigroup, TwoPointModel>;

inline oracle::Fixture fixture_from_json(const Json& j) {
  const Json& name = detail::field(j, "name");
  if (!name.is_string()) throw InputError("fixture name must be a string");
  const auto n = name.get<std::string>();
  if (n == "projective_line") return oracle::Fixture::projective_line();
  if (n == "elliptic") return oracle::Fixture::elliptic(detail::int_field(j, "period"));
  throw InputError("unknown fixture '" + n + "'");
}

/// Dispatches on "kind"; every model is fully validated here.
inline Model parse_model(const Json& j) {
  if (!j.is_object()) throw InputError("input must be a JSON object");
  std::string kind;
  if (auto it = j.find("kind"); it != j.end()) {
    if (!it->is_string()) throw InputError("'kind' must be a string");
    kind = it->get<std::string>();
  } else if (j.contains("name")) {
    kind = "fixture";
  } else {
    throw InputError("missing field 'kind'");
  }

  if (kind == "numerical")
    return NumericalSemigroup::from_generators(detail::int_list(detail::field(j, "generators"), "generators"));
  if (kind == "delta") {
    auto seq = DeltaSequence::from_generators(detail::int_list(detail::field(j, "r"), "r"));
    std::vector<std::int64_t> extras;
    if (auto it = j.find("extras"); it != j.end()) extras = detail::int_list(*it, "extras");
    return OnePointSemigroup(std::move(seq), std::move(extras));
  }
  if (kind == "two_point_strip") {
    const Json& rows = detail::field(j, "strip");
    if (!rows.is_array()) throw InputError("'strip' must be an array of rows");
    Strip strip;
    for (const auto& row : rows) {
      if (!row.is_array()) throw InputError("strip rows must be arrays of booleans");
      std::vector<bool> r;
      for (const auto& b : row) {
        if (!b.is_boolean()) throw InputError("strip entries must be booleans");
        r.push_back(b.get<bool>());
      }
      strip.push_back(std::move(r));
    }
    return TwoPointModel{TwoPointSemigroup::from_strip(detail::int_field(j, "genus"),
                                                       detail::int_field(j, "period"), std::move(strip)),
                         std::nullopt};
  }
  if (kind == "two_point") {
    const Json& members = detail::field(j, "members");
    if (!members.is_array()) throw InputError("'members' must be an array of points");
    std::vector<Point> gens;
    for (const auto& p : members) {
      auto c = detail::int_list(p, "member point");
      if (c.size() != 2) throw InputError("member points must have two coordinates");
      gens.push_back({c[0], c[1]});
    }
    return TwoPointModel{TwoPointSemigroup::from_members(detail::int_field(j, "genus"),
                                                         detail::int_field(j, "period"), gens),
                         std::nullopt};
  }
  if (kind == "fixture") {
    auto f = fixture_from_json(j);
    return TwoPointModel{oracle::semigroup_from_fixture(f), f};
  }
  throw InputError("unknown kind '" + kind + "'");
}

inline Model parse_input(const std::string& bytes) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_model(j);
}

inline Json window_to_json(const Window& w) {
  Json a = Json::array();
  for (const auto& iv : w.ranges()) {
    a.push_back(iv.lo);
    a.push_back(iv.hi);
  }
  return a;
}

inline Json note_to_json(const NoteValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

inline Json report_to_json(const VerificationReport& r) {
  Json j;
  j["check"] = r.check;
  j["pass"] = r.pass;
  j["window"] = r.window ? window_to_json(*r.window) : Json(nullptr);
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json wj;
    wj["point"] = exponent_to_json(w.point);
    Json vals = Json::object();
    for (const auto& [k, v] : w.values) vals[k] = v;
    wj["values"] = std::move(vals);
    ws.push_back(std::move(wj));
  }
  j["witness_count"] = r.witnesses.size();
  j["witnesses"] = std::move(ws);
  Json notes = Json::object();
  for (const auto& [k, v] : r.notes) notes[k] = note_to_json(v);
  j["notes"] = std::move(notes);
  j["series"] = r.series ? series_to_json(*r.series) : Json(nullptr);
  return j;
}

}  // namespace wsg::json_io

#endif  // WSG_JSON_IO_HPP
