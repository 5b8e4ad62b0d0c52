#ifndef WSG_TWOPOINT_HPP
#define WSG_TWOPOINT_HPP

// Two-point semigroups stored on the quotient strip. A point m is a member
// iff its sum s = m1 + m2 is >= 2g, or 0 <= s < 2g and the class
// (s, m1 mod period) is marked in the strip. The period translation
// (period, -period) therefore preserves every property computed here.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wsg/errors.hpp"
#include "wsg/series.hpp"

namespace wsg {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  std::int64_t sum() const noexcept { return x + y; }
  ExponentVec exponent() const { return ExponentVec(x, y); }

  friend Point operator+(Point a, Point b) noexcept { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) noexcept { return {a.x - b.x, a.y - b.y}; }
  friend auto operator<=>(const Point&, const Point&) = default;
};

inline std::string to_string(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

}  // namespace detail

/// Rows indexed by sum in [0, 2g), columns by first coordinate mod period.
using Strip = std::vector<std::vector<bool>>;

class TwoPointSemigroup {
 public:
  /// Validates the strip: shape, origin membership and closure of the
  /// member classes under addition (exhaustive over pairs of classes).
  static TwoPointSemigroup from_strip(std::int64_t genus, std::int64_t period, Strip rows) {
    check_shape(genus, period, rows);
    if (genus > 0 && !rows[0][0])
      throw AxiomViolation("origin (sum 0, residue 0) is not a member", {{0, 0}});
    TwoPointSemigroup s(genus, period, std::move(rows));
    s.check_closure();
    return s;
  }

  /// Additive closure of the origin and `generators` on the quotient strip.
  static TwoPointSemigroup from_members(std::int64_t genus, std::int64_t period,
                                        const std::vector<Point>& generators) {
    if (genus < 0) throw AxiomViolation("genus must be nonnegative");
    if (period < 1) throw AxiomViolation("period must be at least 1");
    const std::int64_t top = 2 * genus;
    Strip rows(static_cast<std::size_t>(top), std::vector<bool>(static_cast<std::size_t>(period), false));
    std::vector<std::pair<std::int64_t, std::int64_t>> gens;
    for (auto p : generators) {
      if (p.sum() < 0)
        throw AxiomViolation("generator " + to_string(p) + " has negative sum",
                             {{p.sum(), detail::floor_mod(p.x, period)}});
      if (p.sum() < top) gens.emplace_back(p.sum(), detail::floor_mod(p.x, period));
    }
    if (top > 0) {
      std::vector<std::pair<std::int64_t, std::int64_t>> frontier{{0, 0}};
      rows[0][0] = true;
      while (!frontier.empty()) {
        auto [s, a] = frontier.back();
        frontier.pop_back();
        for (auto [gs, ga] : gens) {
          const std::int64_t ns = s + gs;
          const std::int64_t na = (a + ga) % period;
          if (ns >= top) continue;
          auto&& cell = rows[static_cast<std::size_t>(ns)][static_cast<std::size_t>(na)];
          if (!cell) {
            cell = true;
            frontier.emplace_back(ns, na);
          }
        }
      }
    }
    return from_strip(genus, period, std::move(rows));
  }

  std::int64_t genus() const noexcept { return genus_; }
  std::int64_t period() const noexcept { return period_; }
  const Strip& strip() const noexcept { return rows_; }

  std::int64_t residue(std::int64_t x) const noexcept { return detail::floor_mod(x, period_); }

  bool class_member(std::int64_t sum, std::int64_t residue) const noexcept {
    if (sum < 0) return false;
    if (sum >= 2 * genus_) return true;
    return rows_[static_cast<std::size_t>(sum)][static_cast<std::size_t>(residue)];
  }

  bool contains(Point m) const noexcept { return class_member(m.sum(), residue(m.x)); }

  /// Number of non-member classes in the strip.
  std::int64_t gap_class_count() const noexcept {
    std::int64_t n = 0;
    for (const auto& row : rows_)
      for (bool b : row) n += b ? 0 : 1;
    return n;
  }

  friend bool operator==(const TwoPointSemigroup&, const TwoPointSemigroup&) = default;

 private:
  TwoPointSemigroup(std::int64_t g, std::int64_t p, Strip rows)
      : genus_(g), period_(p), rows_(std::move(rows)) {}

  static void check_shape(std::int64_t genus, std::int64_t period, const Strip& rows) {
    if (genus < 0) throw AxiomViolation("genus must be nonnegative");
    if (period < 1) throw AxiomViolation("period must be at least 1");
    if (static_cast<std::int64_t>(rows.size()) != 2 * genus)
      throw AxiomViolation("strip must have 2g = " + std::to_string(2 * genus) + " rows, got " +
                           std::to_string(rows.size()));
    for (const auto& row : rows)
      if (static_cast<std::int64_t>(row.size()) != period)
        throw AxiomViolation("every strip row must have period = " + std::to_string(period) +
                             " entries");
  }

  void check_closure() const {
    const std::int64_t top = 2 * genus_;
    std::set<std::pair<long long, long long>> missing;
    for (std::int64_t s1 = 0; s1 < top; ++s1)
      for (std::int64_t a1 = 0; a1 < period_; ++a1) {
        if (!class_member(s1, a1)) continue;
        for (std::int64_t s2 = s1; s1 + s2 < top; ++s2)
          for (std::int64_t a2 = 0; a2 < period_; ++a2) {
            if (!class_member(s2, a2)) continue;
            const std::int64_t a = (a1 + a2) % period_;
            if (!class_member(s1 + s2, a)) missing.emplace(s1 + s2, a);
          }
      }
    if (!missing.empty()) {
      std::string msg = "strip is not closed under addition; missing classes (sum,residue):";
      for (auto [s, a] : missing) msg += " (" + std::to_string(s) + "," + std::to_string(a) + ")";
      throw AxiomViolation(msg, {missing.begin(), missing.end()});
    }
  }

  std::int64_t genus_;
  std::int64_t period_;
  Strip rows_;
};

inline bool membership(const TwoPointSemigroup& s, Point m) { return s.contains(m); }

/// Some (x, y') with y' <= y_max is a member.
inline bool column_has_member(const TwoPointSemigroup& s, std::int64_t x, std::int64_t y_max) {
  const std::int64_t top_sum = x + y_max;
  if (top_sum < 0) return false;
  if (top_sum >= 2 * s.genus()) return true;
  const std::int64_t a = s.residue(x);
  for (std::int64_t sum = 0; sum <= top_sum; ++sum)
    if (s.class_member(sum, a)) return true;
  return false;
}

/// Some (x', y) with x' <= x_max is a member.
inline bool row_has_member(const TwoPointSemigroup& s, std::int64_t x_max, std::int64_t y) {
  const std::int64_t top_sum = x_max + y;
  if (top_sum < 0) return false;
  if (top_sum >= 2 * s.genus()) return true;
  for (std::int64_t sum = 0; sum <= top_sum; ++sum)
    if (s.class_member(sum, s.residue(sum - y))) return true;
  return false;
}

enum class Strictness { strict, leq };

/// Coordinate set J: pinned coordinates.
enum class Pinned { first, second, both };

struct NablaSet {
  bool empty = true;
  std::vector<Point> points;  // ascending
};

/// Members m with the pinned coordinates equal to n and the others below
/// n (strictly, or weakly for Strictness::leq).
inline NablaSet nabla(const TwoPointSemigroup& s, Point n, Pinned pinned, Strictness strictness) {
  NablaSet out;
  const std::int64_t slack = strictness == Strictness::strict ? 1 : 0;
  switch (pinned) {
    case Pinned::both:
      if (s.contains(n)) out.points.push_back(n);
      break;
    case Pinned::first:
      for (std::int64_t y = -n.x; y <= n.y - slack; ++y)
        if (s.contains({n.x, y})) out.points.push_back({n.x, y});
      break;
    case Pinned::second:
      for (std::int64_t x = -n.y; x <= n.x - slack; ++x)
        if (s.contains({x, n.y})) out.points.push_back({x, n.y});
      break;
  }
  out.empty = out.points.empty();
  return out;
}

/// The absolute nabla set (union of both strict single-pin slices) is empty.
/// Constant time in the size of the slices.
inline bool nabla_empty(const TwoPointSemigroup& s, Point n) {
  return !column_has_member(s, n.x, n.y - 1) && !row_has_member(s, n.x - 1, n.y);
}

/// Maximal points are members with empty absolute nabla set.
inline bool is_maximal(const TwoPointSemigroup& s, Point n) {
  return s.contains(n) && nabla_empty(s, n);
}

/// Translate by multiples of (period, -period) until the first coordinate
/// lies in (0, period].
inline Point normalize(const TwoPointSemigroup& s, Point m) {
  const std::int64_t lambda = detail::floor_div(s.period() - m.x, s.period());
  return {m.x + lambda * s.period(), m.y - lambda * s.period()};
}

struct CornerData {
  std::vector<Point> points;  // ascending
};

/// Maximal points with 0 < m1 <= period and 0 <= m1 + m2 <= 2g.
inline CornerData corner_maximals(const TwoPointSemigroup& s) {
  CornerData c;
  for (std::int64_t x = 1; x <= s.period(); ++x)
    for (std::int64_t sum = 0; sum <= 2 * s.genus(); ++sum)
      if (is_maximal(s, {x, sum - x})) c.points.push_back({x, sum - x});
  std::sort(c.points.begin(), c.points.end());
  return c;
}

/// Sheaf-style dimension jump: [column reaches m2] + [row reaches m1 - 1].
inline int dim_jump(const TwoPointSemigroup& s, Point m) {
  return (column_has_member(s, m.x, m.y) ? 1 : 0) + (row_has_member(s, m.x - 1, m.y) ? 1 : 0);
}

/// Same jump taken in the other coordinate order; equal to dim_jump on
/// semigroups coming from curves.
inline int dim_jump_transposed(const TwoPointSemigroup& s, Point m) {
  return (row_has_member(s, m.x, m.y) ? 1 : 0) + (column_has_member(s, m.x, m.y - 1) ? 1 : 0);
}

/// 0 for non-members, 1 for maximal points, 2 for the other members.
inline int dim_nabla(const TwoPointSemigroup& s, Point m) {
  if (!s.contains(m)) return 0;
  return nabla_empty(s, m) ? 1 : 2;
}

enum class DVariant { jump, nabla };

inline int dim(const TwoPointSemigroup& s, Point m, DVariant v) {
  return v == DVariant::jump ? dim_jump(s, m) : dim_nabla(s, m);
}

/// d(m) - d(m - e1) - d(m - e2) + d(m - (1,1)).
inline int euler_c(const TwoPointSemigroup& s, Point m, DVariant v) {
  return dim(s, m, v) - dim(s, {m.x - 1, m.y}, v) - dim(s, {m.x, m.y - 1}, v) +
         dim(s, {m.x - 1, m.y - 1}, v);
}

/// Number of maximal points componentwise <= m, counted through the period
/// translates of the corner maximals.
inline std::int64_t maximal_count_below(const TwoPointSemigroup& s, const CornerData& corner, Point m) {
  const std::int64_t p = s.period();
  std::int64_t total = 0;
  for (auto c : corner.points) {
    const std::int64_t hi = detail::floor_div(m.x - c.x, p);
    const std::int64_t lo = detail::ceil_div(c.y - m.y, p);
    if (hi >= lo) total += hi - lo + 1;
  }
  return total;
}

/// Coefficient of t^m in (1 - t1 t2) sum_{maximal} t^m / ((1 - t1)(1 - t2)).
inline std::int64_t maximal_count_coefficient(const TwoPointSemigroup& s, const CornerData& corner,
                                              Point m) {
  return maximal_count_below(s, corner, m) - maximal_count_below(s, corner, {m.x - 1, m.y - 1});
}

inline std::int64_t maximal_count_coefficient(const TwoPointSemigroup& s, Point m) {
  return maximal_count_coefficient(s, corner_maximals(s), m);
}

/// (1 - t1 t2) sum_{corner maximals} t^m / ((1 - t1)(1 - t2)). This rational
/// form only agrees with the dimension series under a two-sided summation
/// convention; its one-sided expansion is not the Poincare series.
inline RationalGF poincare_corner(const TwoPointSemigroup& s) {
  LaurentPoly sum(2);
  for (auto p : corner_maximals(s).points) sum = sum + LaurentPoly::monomial(p.exponent());
  return RationalGF(LaurentPoly::one_minus(ExponentVec(1, 1)) * sum,
                    {ExponentVec(1, 0), ExponentVec(0, 1)});
}

/// Maximal points of a rectangular region, ascending.
inline std::vector<Point> maximals_in_window(const TwoPointSemigroup& s, const Window& w) {
  std::vector<Point> out;
  for (auto x = w[0].lo; x <= w[0].hi; ++x)
    for (auto y = w[1].lo; y <= w[1].hi; ++y)
      if (is_maximal(s, {x, y})) out.push_back({x, y});
  return out;
}

/// [-(2g + 2 period + 2), 2g + 2 period + 2]^2.
inline Window default_window(const TwoPointSemigroup& s) {
  const std::int64_t r = 2 * s.genus() + 2 * s.period() + 2;
  return Window(-r, r, -r, r);
}

struct SymmetryReport {
  std::optional<Point> sigma;
  bool involution_ok = false;
  bool point_symmetry_ok = false;
  /// Points n where membership of n disagrees with emptiness of nabla(sigma - n).
  std::vector<Point> witnesses;
  /// Corner candidates of sum 2g that were tried.
  std::vector<Point> candidates;
};

/// True when m -> normalize(sigma - m) maps the corner maximals onto themselves.
inline bool reflects_corner(const TwoPointSemigroup& s, const CornerData& corner, Point sigma) {
  std::vector<Point> image;
  for (auto m : corner.points) image.push_back(normalize(s, sigma - m));
  std::sort(image.begin(), image.end());
  return image == corner.points;
}

inline SymmetryReport find_symmetry_point(const TwoPointSemigroup& s, const Window& w) {
  SymmetryReport r;
  const CornerData corner = corner_maximals(s);
  for (auto c : corner.points) {
    if (c.sum() != 2 * s.genus()) continue;
    r.candidates.push_back(c);
    if (!r.sigma && reflects_corner(s, corner, c)) r.sigma = c;
  }
  r.involution_ok = r.sigma.has_value();
  if (!r.sigma) return r;
  for (auto x = w[0].lo; x <= w[0].hi; ++x)
    for (auto y = w[1].lo; y <= w[1].hi; ++y) {
      const Point n{x, y};
      if (s.contains(n) != nabla_empty(s, *r.sigma - n)) r.witnesses.push_back(n);
    }
  r.point_symmetry_ok = r.witnesses.empty();
  return r;
}

inline SymmetryReport find_symmetry_point(const TwoPointSemigroup& s) {
  return find_symmetry_point(s, default_window(s));
}

}  // namespace wsg

#endif  // WSG_TWOPOINT_HPP
