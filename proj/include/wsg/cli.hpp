#ifndef WSG_CLI_HPP
#define WSG_CLI_HPP

// Command execution behind the `wsg` tool. run() is pure apart from its
// return value: identical commands yield byte-identical output.
//
// Exit codes: 0 success / all checks passed, 1 a check listed witnesses,
// 2 invalid input or a verb that does not fit the model.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "wsg/errors.hpp"
#include "wsg/json_io.hpp"
#include "wsg/onepoint.hpp"
#include "wsg/oracle.hpp"
#include "wsg/series.hpp"
#include "wsg/twopoint.hpp"
#include "wsg/verification.hpp"

namespace wsg::cli {

enum class Verb { validate, analyze, maximals, poincare, expand, verify };

enum ExitCode : int { kOk = 0, kViolations = 1, kInvalid = 2 };

struct Command {
  Verb verb = Verb::validate;
  std::string input;                  // JSON text of the model
  std::vector<std::int64_t> window;   // empty, 2 or 4 integers
  std::string form;                   // poincare / expand; empty = default
  std::string check = "all";          // verify
  bool corner = false;                // maximals
  bool json = false;
};

struct RunResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

inline std::optional<Verb> parse_verb(const std::string& s) {
  if (s == "validate") return Verb::validate;
  if (s == "analyze") return Verb::analyze;
  if (s == "maximals") return Verb::maximals;
  if (s == "poincare") return Verb::poincare;
  if (s == "expand") return Verb::expand;
  if (s == "verify") return Verb::verify;
  return std::nullopt;
}

namespace detail {

using json_io::Json;
using json_io::Model;
using json_io::TwoPointModel;

/// Verb does not apply to the parsed model.
class Incompatible : public Error {
 public:
  using Error::Error;
};

inline std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) + "\n" : j.dump() + "\n"; }

inline std::optional<Window> explicit_window(const Command& cmd, std::size_t arity) {
  if (cmd.window.empty()) return std::nullopt;
  if (cmd.window.size() != 2 * arity)
    throw InputError("window needs " + std::to_string(2 * arity) + " integers for this input, got " +
                     std::to_string(cmd.window.size()));
  std::vector<Interval> r;
  for (std::size_t i = 0; i < arity; ++i) r.push_back({cmd.window[2 * i], cmd.window[2 * i + 1]});
  return Window(std::move(r));
}

inline const NumericalSemigroup& one_point_semigroup(const Model& m) {
  if (const auto* n = std::get_if<NumericalSemigroup>(&m)) return *n;
  return std::get<OnePointSemigroup>(m).semigroup();
}

inline Json ints(const std::vector<std::int64_t>& v) { return Json(v); }

inline Json opt_sign(const std::optional<int>& s) { return s ? Json(*s) : Json("none"); }

/// Sorted generators read as a delta-sequence, if they form one.
inline std::optional<DeltaSequence> try_delta(const std::vector<std::int64_t>& gens) {
  try {
    return DeltaSequence::from_generators(gens);
  } catch (const InvalidSemigroup&) {
    return std::nullopt;
  }
}

inline Json delta_to_json(const DeltaSequence& d) {
  Json j;
  j["r"] = ints(d.generators());
  j["theta"] = ints(d.theta());
  j["d"] = ints(d.d());
  return j;
}

inline Json analyze_one_point(const Model& model) {
  const NumericalSemigroup& s = one_point_semigroup(model);
  Json j;
  const auto* op = std::get_if<OnePointSemigroup>(&model);
  j["kind"] = op ? "delta" : "numerical";
  j["generators"] = ints(s.generators());
  j["gaps"] = ints(s.gaps());
  j["conductor"] = s.conductor();
  j["genus"] = s.genus();
  j["symmetric"] = is_symmetric(s);
  if (op) {
    j["delta_sequence"] = delta_to_json(op->base());
    j["extras"] = ints(op->extras());
    const auto cmp = poincare_onepoint(*op, OnePointMode::finite_sum).comparison;
    Json c;
    c["window"] = Json::array({0, cmp.window_hi});
    c["agree"] = cmp.agree;
    c["disagreements"] = ints(cmp.disagreements);
    j["mode_comparison"] = std::move(c);
  } else {
    auto d = try_delta(s.generators());
    j["delta_sequence"] = d ? delta_to_json(*d) : Json(nullptr);
  }
  const auto l = compare_l_forms(s);
  Json lj;
  lj["direct"] = json_io::poly_terms_to_json(l.direct);
  lj["paper"] = json_io::poly_terms_to_json(l.paper);
  lj["differ"] = l.differ;
  lj["difference"] = json_io::poly_terms_to_json(l.difference);
  lj["complete_intersection_form"] = json_io::poly_terms_to_json(l.complete_intersection);
  lj["complete_intersection_matches"] = l.complete_intersection_matches;
  j["l_polynomial"] = std::move(lj);
  if (is_symmetric(s)) {
    const auto signs = functional_equation_sign(s);
    Json f;
    f["eps_L"] = opt_sign(signs.eps_l);
    f["eps_P"] = opt_sign(signs.eps_p);
    f["published_eps_L"] = FunctionalEquationSigns::kPublishedEpsL;
    f["published_eps_P"] = FunctionalEquationSigns::kPublishedEpsP;
    f["matches_published_signs"] = signs.matches_published();
    j["functional_equation"] = std::move(f);
  } else {
    j["functional_equation"] = nullptr;
  }
  return j;
}

inline Json symmetry_to_json(const SymmetryReport& r) {
  Json j;
  j["sigma"] = r.sigma ? json_io::point_to_json(*r.sigma) : Json("none");
  j["involution_ok"] = r.involution_ok;
  j["point_symmetry_ok"] = r.point_symmetry_ok;
  j["candidates"] = json_io::points_to_json(r.candidates);
  j["witnesses"] = json_io::points_to_json(r.witnesses);
  return j;
}

inline Json analyze_two_point(const TwoPointModel& m, const Window& w) {
  const auto& s = m.semigroup;
  Json j;
  j["kind"] = "two_point";
  j["fixture"] = m.fixture ? Json(m.fixture->name()) : Json(nullptr);
  j["genus"] = s.genus();
  j["period"] = s.period();
  j["strip"] = s.strip();
  j["gap_classes"] = s.gap_class_count();
  j["corner_maximals"] = json_io::points_to_json(corner_maximals(s).points);
  j["window"] = json_io::window_to_json(w);
  j["symmetry"] = symmetry_to_json(find_symmetry_point(s, w));
  j["order_independent"] = order_independence_failures(s, w).empty();
  return j;
}

// Human-readable rendering of analysis objects: one "key: value" line each.
inline std::string human(const Json& j) {
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) os << k << ": " << v.dump() << "\n";
  return os.str();
}

inline RationalGF select_form(const Model& model, const std::string& requested) {
  const std::string form = requested.empty() ? (std::holds_alternative<TwoPointModel>(model) ? "corner" : "direct")
                                             : requested;
  if (form != "direct" && form != "closed" && form != "corner" && form != "paper")
    throw InputError("unknown form '" + form + "' (expected direct|closed|corner|paper)");

  if (const auto* tp = std::get_if<TwoPointModel>(&model)) {
    if (form == "corner" || form == "paper") return poincare_corner(tp->semigroup);
    throw Incompatible("two-point inputs support --form corner|paper only");
  }
  if (form == "corner") throw Incompatible("--form corner needs a two-point input");
  const NumericalSemigroup& s = one_point_semigroup(model);
  if (const auto* op = std::get_if<OnePointSemigroup>(&model)) {
    if (form == "direct") return poincare_direct(s);
    if (form == "closed") return poincare_onepoint(*op, OnePointMode::finite_sum).series;
    return poincare_onepoint(*op, OnePointMode::paper_product).series;
  }
  if (form == "direct") return poincare_direct(s);
  if (form == "paper")
    return RationalGF(l_polynomial(s, LMode::paper), {ExponentVec(1)});
  auto d = try_delta(s.generators());
  if (!d) throw Incompatible("generators do not form a delta-sequence; no closed product form");
  return poincare_delta_product(*d);
}

inline std::string human_report(const VerificationReport& r) {
  std::ostringstream os;
  os << r.check << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.witnesses.size() << " witnesses";
  if (r.window) {
    os << ", window";
    for (const auto& iv : r.window->ranges()) os << " [" << iv.lo << "," << iv.hi << "]";
  }
  os << ")\n";
  for (const auto& [k, v] : r.notes) os << "  " << k << " = " << json_io::note_to_json(v).dump() << "\n";
  for (const auto& w : r.witnesses) {
    os << "  witness " << to_string(w.point);
    for (const auto& [k, v] : w.values) os << " " << k << "=" << v;
    os << "\n";
  }
  return os.str();
}

inline RunResult run_verify(const Command& cmd, const Model& model) {
  std::vector<VerificationReport> reports;
  const bool all = cmd.check == "all";
  if (const auto* tp = std::get_if<TwoPointModel>(&model)) {
    const Window w = explicit_window(cmd, 2).value_or(default_window(tp->semigroup));
    if (all) {
      reports = verify_all(tp->semigroup, w, tp->fixture);
    } else {
      const Check c = parse_check(cmd.check);
      if (c == Check::oracle && !tp->fixture) throw Incompatible("the oracle check needs a fixture input");
      reports.push_back(verify(tp->semigroup, c, w, tp->fixture));
    }
  } else {
    const NumericalSemigroup& s = one_point_semigroup(model);
    const Window w = explicit_window(cmd, 1).value_or(default_window(s));
    if (all) {
      reports = verify_all(s, w);
    } else {
      const Check c = parse_check(cmd.check);
      const auto allowed = onepoint_checks();
      if (std::find(allowed.begin(), allowed.end(), c) == allowed.end())
        throw Incompatible("check '" + cmd.check + "' applies to two-point inputs only");
      reports.push_back(verify(s, c, w));
    }
  }

  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  RunResult res;
  res.exit_code = pass ? kOk : kViolations;
  if (cmd.json) {
    if (all) {
      Json j;
      j["check"] = "all";
      j["pass"] = pass;
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(json_io::report_to_json(r));
      j["reports"] = std::move(arr);
      res.out = dump(j, true);
    } else {
      res.out = dump(json_io::report_to_json(reports.front()), true);
    }
  } else {
    for (const auto& r : reports) res.out += human_report(r);
    if (all) res.out += std::string("all: ") + (pass ? "PASS" : "FAIL") + "\n";
  }
  return res;
}

inline RunResult run_model(const Command& cmd, const Model& model) {
  RunResult res;
  const auto* tp = std::get_if<TwoPointModel>(&model);
  switch (cmd.verb) {
    case Verb::validate: {
      Json j;
      j["valid"] = true;
      if (tp) {
        j["kind"] = "two_point";
        j["genus"] = tp->semigroup.genus();
        j["period"] = tp->semigroup.period();
      } else {
        const auto& s = one_point_semigroup(model);
        j["kind"] = std::holds_alternative<OnePointSemigroup>(model) ? "delta" : "numerical";
        j["genus"] = s.genus();
        j["conductor"] = s.conductor();
      }
      res.out = cmd.json ? dump(j, true) : human(j);
      return res;
    }
    case Verb::analyze: {
      Json j = tp ? analyze_two_point(*tp, explicit_window(cmd, 2).value_or(default_window(tp->semigroup)))
                  : analyze_one_point(model);
      res.out = cmd.json ? dump(j, true) : human(j);
      return res;
    }
    case Verb::maximals: {
      if (!tp) throw Incompatible("maximals needs a two-point input");
      Json j;
      if (cmd.corner) {
        j["corner"] = json_io::points_to_json(corner_maximals(tp->semigroup).points);
      } else {
        const Window w = explicit_window(cmd, 2).value_or(default_window(tp->semigroup));
        j["window"] = json_io::window_to_json(w);
        j["maximals"] = json_io::points_to_json(maximals_in_window(tp->semigroup, w));
      }
      res.out = cmd.json ? dump(j, true) : human(j);
      return res;
    }
    case Verb::poincare: {
      res.out = dump(json_io::series_to_json(select_form(model, cmd.form)), false);
      return res;
    }
    case Verb::expand: {
      const RationalGF f = select_form(model, cmd.form);
      const Window w = tp ? explicit_window(cmd, 2).value_or(default_window(tp->semigroup))
                          : explicit_window(cmd, 1).value_or(default_window(one_point_semigroup(model)));
      Json coeffs = Json::array();
      std::ostringstream text;
      for (const auto& [e, c] : expand(f, w)) {
        Json t;
        t["e"] = json_io::exponent_to_json(e);
        t["c"] = json_io::integer_to_json(c);
        coeffs.push_back(std::move(t));
        text << to_string(e) << " " << c << "\n";
      }
      if (cmd.json) {
        Json j;
        j["window"] = json_io::window_to_json(w);
        j["series"] = json_io::series_to_json(f);
        j["coefficients"] = std::move(coeffs);
        res.out = dump(j, true);
      } else {
        res.out = text.str();
      }
      return res;
    }
    case Verb::verify:
      return run_verify(cmd, model);
  }
  return res;
}

}  // namespace detail

/// Parses cmd.input and executes the verb. Never throws.
inline RunResult run(const Command& cmd) {
  try {
    const json_io::Model model = json_io::parse_input(cmd.input);
    return detail::run_model(cmd, model);
  } catch (const AxiomViolation& e) {
    return {kInvalid, "", std::string("axiom violation: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {kInvalid, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kInvalid, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace wsg::cli

#endif  // WSG_CLI_HPP
