#ifndef WSG_TESTS_SUPPORT_HPP
#define WSG_TESTS_SUPPORT_HPP

// Independent reference implementations used only by the tests. None of
// these call into the library code paths they are compared against.

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "wsg/wsg.hpp"

namespace wsg::testing {

/// Elements of <gens> up to `bound` by breadth-first closure from 0.
inline std::set<std::int64_t> closure_bfs(const std::vector<std::int64_t>& gens, std::int64_t bound) {
  std::set<std::int64_t> seen{0};
  std::vector<std::int64_t> frontier{0};
  while (!frontier.empty()) {
    auto n = frontier.back();
    frontier.pop_back();
    for (auto g : gens)
      if (n + g <= bound && seen.insert(n + g).second) frontier.push_back(n + g);
  }
  return seen;
}

/// Truncated power-series expansion: numerator times each geometric
/// series, term by term, on the box [min numerator exponent, hi].
inline std::map<ExponentVec, Integer> expand_truncated(const RationalGF& f, const Window& w) {
  const std::size_t n = f.arity();
  std::map<ExponentVec, Integer> series;
  for (const auto& [e, c] : f.numerator().terms()) series[e] += c;
  auto in_range = [&](const ExponentVec& e) {
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] > w[i].hi) return false;
    return true;
  };
  for (const auto& v : f.denominator()) {
    std::map<ExponentVec, Integer> next;
    for (const auto& [e, c] : series) {
      ExponentVec cur = e;
      while (in_range(cur)) {
        next[cur] += c;
        cur = cur + v;
      }
    }
    series = std::move(next);
  }
  std::map<ExponentVec, Integer> out;
  for (const auto& m : w.points()) {
    auto it = series.find(m);
    out[m] = it == series.end() ? Integer(0) : it->second;
  }
  return out;
}

/// No member strictly below n in its column or its row. Members have
/// nonnegative sum, which bounds both scans.
inline bool nabla_empty_by_definition(const TwoPointSemigroup& s, Point n) {
  for (std::int64_t y = -n.x; y < n.y; ++y)
    if (s.contains({n.x, y})) return false;
  for (std::int64_t x = -n.y; x < n.x; ++x)
    if (s.contains({x, n.y})) return false;
  return true;
}

inline bool maximal_by_definition(const TwoPointSemigroup& s, Point m) {
  return s.contains(m) && nabla_empty_by_definition(s, m);
}

/// Maximal points componentwise <= m. Members have nonnegative sum, so
/// x >= -y >= -m.y bounds the scan.
inline std::int64_t maximal_count_brute(const TwoPointSemigroup& s, Point m) {
  std::int64_t n = 0;
  for (std::int64_t x = -m.y; x <= m.x; ++x)
    for (std::int64_t y = -x; y <= m.y; ++y)
      if (maximal_by_definition(s, {x, y})) ++n;
  return n;
}

/// Riemann-Roch dimension of m1 P1 + m2 P2, written out independently:
/// on P^1 (points 0 and infinity) the space is spanned by monomials z^k with
/// -m1 <= k <= m2; on an elliptic curve with P1 - P2 of order p it is deg
/// for deg >= 1, and for deg 0 it is 1 exactly when the divisor is principal.
inline std::int64_t ell_reference(bool elliptic, std::int64_t period, Point m) {
  const std::int64_t deg = m.x + m.y;
  if (!elliptic) return deg < 0 ? 0 : m.y - (-m.x) + 1;
  if (deg > 0) return deg;
  if (deg < 0) return 0;
  return m.x % period == 0 ? 1 : 0;
}

/// Random numerical semigroup with genus at most `max_genus`.
inline std::vector<std::int64_t> random_generators(std::mt19937_64& rng, std::int64_t max_genus) {
  for (;;) {
    std::uniform_int_distribution<std::int64_t> count(2, 4), value(2, 2 * max_genus + 1);
    std::vector<std::int64_t> g;
    const auto k = count(rng);
    for (std::int64_t i = 0; i < k; ++i) g.push_back(value(rng));
    std::int64_t d = 0;
    for (auto x : g) d = std::gcd(d, x);
    if (d != 1) continue;
    // Genus: gaps of the closure below the Frobenius bound.
    const std::int64_t lo = *std::min_element(g.begin(), g.end());
    const std::int64_t hi = *std::max_element(g.begin(), g.end());
    const auto elems = closure_bfs(g, 2 * lo * hi);
    const std::int64_t genus = 2 * lo * hi + 1 - static_cast<std::int64_t>(elems.size());
    if (genus <= max_genus) return g;
  }
}

/// Random validated two-point strip: closure of a few random classes.
inline TwoPointSemigroup random_strip(std::mt19937_64& rng, std::int64_t max_genus, std::int64_t max_period) {
  std::uniform_int_distribution<std::int64_t> genus(1, max_genus), period(1, max_period), count(0, 4);
  const auto g = genus(rng);
  const auto p = period(rng);
  std::uniform_int_distribution<std::int64_t> sum(1, 2 * g - 1), res(0, p - 1);
  std::vector<Point> gens;
  const auto k = count(rng);
  for (std::int64_t i = 0; i < k; ++i) {
    const auto x = res(rng);
    gens.push_back({x, sum(rng) - x});
  }
  return TwoPointSemigroup::from_members(g, p, gens);
}

inline std::vector<oracle::Fixture> all_fixtures() {
  return {oracle::Fixture::projective_line(), oracle::Fixture::elliptic(1), oracle::Fixture::elliptic(2),
          oracle::Fixture::elliptic(3)};
}

/// Fixtures realizable by two distinct points. On an elliptic curve
/// P1 - P2 principal forces P1 = P2, so period 1 is excluded.
inline std::vector<oracle::Fixture> realizable_fixtures() {
  return {oracle::Fixture::projective_line(), oracle::Fixture::elliptic(2), oracle::Fixture::elliptic(3),
          oracle::Fixture::elliptic(4)};
}

inline std::vector<Point> points_of(const Window& w) {
  std::vector<Point> out;
  for (const auto& e : w.points()) out.push_back({e[0], e[1]});
  return out;
}

}  // namespace wsg::testing

#endif  // WSG_TESTS_SUPPORT_HPP
