#ifndef WSG_VERIFICATION_HPP
#define WSG_VERIFICATION_HPP

// Windowed verification of the structural statements about one- and
// two-point semigroups. Every check enumerates all failures in its window
// instead of stopping at the first one.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wsg/errors.hpp"
#include "wsg/onepoint.hpp"
#include "wsg/oracle.hpp"
#include "wsg/series.hpp"
#include "wsg/twopoint.hpp"

namespace wsg {

using NoteValue = std::variant<bool, std::int64_t, std::string>;

struct Witness {
  ExponentVec point;
  std::vector<std::pair<std::string, std::int64_t>> values;
};

struct VerificationReport {
  std::string check;
  bool pass = true;
  std::vector<Witness> witnesses;
  std::optional<Window> window;
  std::vector<std::pair<std::string, NoteValue>> notes;
  std::optional<RationalGF> series;

  void fail(ExponentVec point, std::vector<std::pair<std::string, std::int64_t>> values = {}) {
    pass = false;
    witnesses.push_back({point, std::move(values)});
  }
  void note(std::string key, NoteValue value) { notes.emplace_back(std::move(key), std::move(value)); }
};

enum class Check {
  closure,
  c_prop,
  c_identity,
  corner_translates,
  lemma4,
  d_agreement,
  symmetry,
  funceq,
  oracle,
};

inline constexpr Check kAllChecks[] = {Check::closure,   Check::c_prop,      Check::c_identity,
                                       Check::corner_translates, Check::lemma4,
                                       Check::d_agreement, Check::symmetry, Check::funceq,
                                       Check::oracle};

inline std::string check_name(Check c) {
  switch (c) {
    case Check::closure: return "closure";
    case Check::c_prop: return "c_prop";
    case Check::c_identity: return "c_identity";
    case Check::corner_translates: return "corner_translates";
    case Check::lemma4: return "lemma4";
    case Check::d_agreement: return "d_agreement";
    case Check::symmetry: return "symmetry";
    case Check::funceq: return "funceq";
    case Check::oracle: return "oracle";
  }
  return "unknown";
}

inline Check parse_check(const std::string& name) {
  for (Check c : kAllChecks)
    if (check_name(c) == name) return c;
  throw UnknownCheck("unknown check id '" + name + "'");
}

/// Cells kept free around the window interior for difference operators.
inline constexpr std::int64_t kDifferenceMargin = 2;

/// Points where the two orders of taking the dimension jump disagree.
inline std::vector<Point> order_independence_failures(const TwoPointSemigroup& s, const Window& w) {
  std::vector<Point> out;
  for (auto x = w[0].lo; x <= w[0].hi; ++x)
    for (auto y = w[1].lo; y <= w[1].hi; ++y)
      if (dim_jump(s, {x, y}) != dim_jump_transposed(s, {x, y})) out.push_back({x, y});
  return out;
}

namespace detail {

template <typename F>
void for_each_point(const Window& w, F&& f) {
  for (auto x = w[0].lo; x <= w[0].hi; ++x)
    for (auto y = w[1].lo; y <= w[1].hi; ++y) f(Point{x, y});
}

inline std::string point_note(Point p) { return to_string(p); }

inline void verify_closure(const TwoPointSemigroup& s, const Window& w, VerificationReport& r) {
  std::vector<Point> members;
  for_each_point(w, [&](Point p) {
    if (s.contains(p)) members.push_back(p);
  });
  std::set<Point> missing;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i; j < members.size(); ++j) {
      const Point sum = members[i] + members[j];
      if (w.contains(sum.exponent()) && !s.contains(sum) && missing.insert(sum).second)
        r.fail(sum.exponent(), {{"a1", members[i].x}, {"a2", members[i].y},
                                {"b1", members[j].x}, {"b2", members[j].y}});
    }
  r.note("member_count", static_cast<std::int64_t>(members.size()));
}

inline void verify_c_prop(const TwoPointSemigroup& s, const Window& w, VerificationReport& r) {
  bool adjacent = true;
  for_each_point(w, [&](Point m) {
    const int c = euler_c(s, m, DVariant::jump);
    const bool here = is_maximal(s, m);
    const bool below = is_maximal(s, {m.x - 1, m.y - 1});
    if ((c == -1) != below || (c == 1) != here) {
      adjacent = adjacent && here && below;
      r.fail(m.exponent(), {{"c", c}, {"maximal", here}, {"shifted_maximal", below}});
    }
  });
  r.note("violations_have_both_maximal", adjacent);
}

inline void verify_c_identity(const TwoPointSemigroup& s, const Window& w, VerificationReport& r) {
  for_each_point(w, [&](Point m) {
    const int c = euler_c(s, m, DVariant::jump);
    const int expected = (is_maximal(s, m) ? 1 : 0) - (is_maximal(s, {m.x - 1, m.y - 1}) ? 1 : 0);
    if (c != expected) r.fail(m.exponent(), {{"c", c}, {"expected", expected}});
  });
}

inline void verify_corner_translates(const TwoPointSemigroup& s, const Window& w,
                                     VerificationReport& r) {
  const CornerData corner = corner_maximals(s);
  const std::int64_t p = s.period();
  std::set<Point> translates;
  for (auto c : corner.points) {
    const std::int64_t lo = std::max(ceil_div(w[0].lo - c.x, p), ceil_div(c.y - w[1].hi, p));
    const std::int64_t hi = std::min(floor_div(w[0].hi - c.x, p), floor_div(c.y - w[1].lo, p));
    for (auto k = lo; k <= hi; ++k) translates.insert({c.x + k * p, c.y - k * p});
  }
  const auto scanned = maximals_in_window(s, w);
  const std::set<Point> scan(scanned.begin(), scanned.end());
  std::set<Point> all = scan;
  all.insert(translates.begin(), translates.end());
  for (auto m : all) {
    const bool in_scan = scan.count(m) > 0;
    if (in_scan != (translates.count(m) > 0))
      r.fail(m.exponent(), {{"in_scan", in_scan}, {"in_translates", !in_scan}});
  }
  r.note("corner_size", static_cast<std::int64_t>(corner.points.size()));
  r.note("maximal_count", static_cast<std::int64_t>(scan.size()));
}

inline void verify_lemma4(const TwoPointSemigroup& s, const Window& w, VerificationReport& r) {
  for_each_point(w, [&](Point m) {
    if (m.x <= 0 || m.y <= 0) return;
    if (!column_has_member(s, m.x, 0) || !row_has_member(s, 0, m.y)) return;
    const int d = dim_jump(s, m);
    if (d != 2) r.fail(m.exponent(), {{"d", d}});
  });
}

inline void verify_d_agreement(const TwoPointSemigroup& s, const Window& w, VerificationReport& r) {
  for_each_point(w, [&](Point m) {
    const int j = dim_jump(s, m);
    const int n = dim_nabla(s, m);
    if (j != n) r.fail(m.exponent(), {{"jump", j}, {"nabla", n}});
  });
}

inline void note_sigma(const SymmetryReport& sym, VerificationReport& r) {
  r.note("sigma", sym.sigma ? point_note(*sym.sigma) : std::string("none"));
  r.note("involution_ok", sym.involution_ok);
}

// Without a center every corner maximal is listed: those of sum 2g were
// tried and rejected, the others could not serve.
inline void fail_without_center(const TwoPointSemigroup& s, VerificationReport& r) {
  for (auto m : corner_maximals(s).points)
    r.fail(m.exponent(), {{"sum", m.sum()}, {"candidate", m.sum() == 2 * s.genus()}});
}

// d(n) + d(2g - 1 - n) = 1 on [0, 2g - 1]; every n breaking it is listed.
inline void fail_unpaired(const NumericalSemigroup& s, VerificationReport& r) {
  const std::int64_t top = 2 * s.genus() - 1;
  for (std::int64_t n = 0; n <= top; ++n) {
    const int total = (s.contains(n) ? 1 : 0) + (s.contains(top - n) ? 1 : 0);
    if (total != 1) r.fail(ExponentVec(n), {{"pair_sum", total}});
  }
}

inline void verify_symmetry(const TwoPointSemigroup& s, const Window& w, VerificationReport& r) {
  const SymmetryReport sym = find_symmetry_point(s, w);
  note_sigma(sym, r);
  r.note("point_symmetry_ok", sym.point_symmetry_ok);
  if (!sym.sigma) {
    fail_without_center(s, r);
    return;
  }
  for (auto n : sym.witnesses)
    r.fail(n.exponent(), {{"member", s.contains(n)}, {"nabla_empty", nabla_empty(s, *sym.sigma - n)}});
}

inline void verify_funceq(const TwoPointSemigroup& s, const Window& w, const Window& interior,
                          VerificationReport& r) {
  const SymmetryReport sym = find_symmetry_point(s, w);
  note_sigma(sym, r);
  if (!sym.sigma) {
    fail_without_center(s, r);
    return;
  }
  const Point sigma = *sym.sigma;
  r.series = poincare_corner(s);
  // Maximal set is invariant under m -> sigma - m.
  for_each_point(w, [&](Point m) {
    const bool a = is_maximal(s, m);
    const bool b = is_maximal(s, sigma - m);
    if (a != b) r.fail(m.exponent(), {{"maximal", a}, {"reflected_maximal", b}});
  });
  // L(t) = -t^(sigma+1) L(1/t), coefficientwise.
  const Point shift = sigma + Point{1, 1};
  for_each_point(interior, [&](Point m) {
    const int c = euler_c(s, m, DVariant::jump);
    const int reflected = euler_c(s, shift - m, DVariant::jump);
    if (c != -reflected) r.fail(m.exponent(), {{"c", c}, {"reflected_c", reflected}});
  });
}

inline void verify_oracle(const TwoPointSemigroup& s, const oracle::Fixture& f, const Window& w,
                          VerificationReport& r) {
  for_each_point(w, [&](Point m) {
    const int j = dim_jump(s, m);
    const auto d = oracle::d_oracle(f, m);
    const bool member = s.contains(m);
    const bool nongap = oracle::is_nongap(f, m);
    if (j != d || member != nongap)
      r.fail(m.exponent(), {{"jump", j}, {"oracle", d}, {"member", member}, {"oracle_member", nongap}});
  });
}

}  // namespace detail

/// Runs one two-point check. Difference-based checks (c_prop, c_identity,
/// funceq) evaluate on the window shrunk by kDifferenceMargin.
inline VerificationReport verify(const TwoPointSemigroup& s, Check check, const Window& w,
                                 const std::optional<oracle::Fixture>& fixture = std::nullopt) {
  if (w.arity() != 2) throw InputError("two-point verification needs a two-variable window");
  const Window interior = w.shrunk(kDifferenceMargin);
  VerificationReport r;
  r.check = check_name(check);
  const bool uses_interior =
      check == Check::c_prop || check == Check::c_identity || check == Check::funceq;
  r.window = uses_interior ? interior : w;
  switch (check) {
    case Check::closure: detail::verify_closure(s, w, r); break;
    case Check::c_prop: detail::verify_c_prop(s, interior, r); break;
    case Check::c_identity: detail::verify_c_identity(s, interior, r); break;
    case Check::corner_translates: detail::verify_corner_translates(s, w, r); break;
    case Check::lemma4: detail::verify_lemma4(s, w, r); break;
    case Check::d_agreement: detail::verify_d_agreement(s, w, r); break;
    case Check::symmetry: detail::verify_symmetry(s, w, r); break;
    case Check::funceq: detail::verify_funceq(s, w, interior, r); break;
    case Check::oracle:
      if (!fixture) throw InputError("the oracle check needs a fixture input");
      detail::verify_oracle(s, *fixture, w, r);
      r.note("fixture", fixture->name());
      break;
  }
  return r;
}

/// Every check in canonical order; the oracle check is reported as not
/// applicable (and passing) when no fixture is given.
inline std::vector<VerificationReport> verify_all(
    const TwoPointSemigroup& s, const Window& w,
    const std::optional<oracle::Fixture>& fixture = std::nullopt) {
  std::vector<VerificationReport> out;
  for (Check c : kAllChecks) {
    if (c == Check::oracle && !fixture) {
      VerificationReport r;
      r.check = check_name(c);
      r.window = w;
      r.note("applicable", false);
      out.push_back(std::move(r));
      continue;
    }
    out.push_back(verify(s, c, w, fixture));
  }
  return out;
}

// One-point checks.

/// [0, 3c], at least [0, 10].
inline Window default_window(const NumericalSemigroup& s) {
  return Window(0, std::max<std::int64_t>(3 * s.conductor(), 10));
}

inline std::vector<Check> onepoint_checks() { return {Check::closure, Check::symmetry, Check::funceq}; }

inline VerificationReport verify(const NumericalSemigroup& s, Check check, const Window& w) {
  if (w.arity() != 1) throw InputError("one-point verification needs a one-variable window");
  VerificationReport r;
  r.check = check_name(check);
  r.window = w;
  switch (check) {
    case Check::closure: {
      // Sieve closure and agreement of the Poincare expansion with membership.
      for (auto a = std::max<std::int64_t>(w[0].lo, 0); a <= w[0].hi; ++a)
        for (auto b = a; a + b <= w[0].hi; ++b)
          if (s.contains(a) && s.contains(b) && !s.contains(a + b))
            r.fail(ExponentVec(a + b), {{"a", a}, {"b", b}});
      r.series = poincare_direct(s);
      for (const auto& [m, c] : expand(*r.series, w)) {
        const Integer expected = s.contains(m[0]) ? 1 : 0;
        if (c != expected)
          r.fail(m, {{"coefficient", static_cast<std::int64_t>(c)}, {"member", s.contains(m[0])}});
      }
      break;
    }
    case Check::symmetry: {
      const bool sym = is_symmetric(s);
      r.note("symmetric", sym);
      r.note("conductor", s.conductor());
      r.note("genus", s.genus());
      detail::fail_unpaired(s, r);
      break;
    }
    case Check::funceq: {
      if (!is_symmetric(s)) {
        r.note("symmetric", false);
        detail::fail_unpaired(s, r);
        break;
      }
      const auto signs = functional_equation_sign(s);
      r.series = RationalGF(l_polynomial(s, LMode::direct));
      r.note("eps_L", signs.eps_l ? NoteValue(std::int64_t{*signs.eps_l}) : NoteValue(std::string("none")));
      r.note("eps_P", signs.eps_p ? NoteValue(std::int64_t{*signs.eps_p}) : NoteValue(std::string("none")));
      r.note("published_eps_L", std::int64_t{FunctionalEquationSigns::kPublishedEpsL});
      r.note("published_eps_P", std::int64_t{FunctionalEquationSigns::kPublishedEpsP});
      r.note("matches_published_signs", signs.matches_published());
      if (!signs.eps_l || !signs.eps_p) r.pass = false;
      break;
    }
    default:
      throw InputError("check '" + check_name(check) + "' applies to two-point semigroups only");
  }
  return r;
}

inline std::vector<VerificationReport> verify_all(const NumericalSemigroup& s, const Window& w) {
  std::vector<VerificationReport> out;
  for (Check c : onepoint_checks()) out.push_back(verify(s, c, w));
  return out;
}

}  // namespace wsg

#endif  // WSG_VERIFICATION_HPP
