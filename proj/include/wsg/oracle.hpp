#ifndef WSG_ORACLE_HPP
#define WSG_ORACLE_HPP

// Closed-form Riemann-Roch dimensions for two curve families, used as
// ground truth for the combinatorial two-point machinery.
//
//   projective line:  g = 0, l(m) = s + 1 for s = m1 + m2 >= 0.
//   elliptic curve:   g = 1, P1 - P2 of exact order `period` in the class
//                     group; l(m) = s for s >= 1, and for s = 0 the divisor
//                     class is trivial iff period | m1.

#include <cstdint>
#include <string>

#include "wsg/errors.hpp"
#include "wsg/twopoint.hpp"

namespace wsg::oracle {

enum class Family { projective_line, elliptic };

struct Fixture {
  Family family = Family::projective_line;
  std::int64_t period = 1;

  static Fixture projective_line() { return {Family::projective_line, 1}; }
  static Fixture elliptic(std::int64_t period) {
    if (period < 1) throw InputError("elliptic fixture period must be at least 1");
    return {Family::elliptic, period};
  }

  std::int64_t genus() const noexcept { return family == Family::elliptic ? 1 : 0; }
  std::string name() const {
    return family == Family::elliptic ? "elliptic" : "projective_line";
  }
};

/// dim of the global sections of m1 P1 + m2 P2.
inline std::int64_t ell(const Fixture& f, Point m) {
  const std::int64_t s = m.sum();
  if (f.family == Family::projective_line) return s >= 0 ? s + 1 : 0;
  if (s >= 1) return s;
  if (s == 0) return detail::floor_mod(m.x, f.period) == 0 ? 1 : 0;
  return 0;
}

/// l(m) - l(m - (1,1)).
inline std::int64_t d_oracle(const Fixture& f, Point m) {
  return ell(f, m) - ell(f, {m.x - 1, m.y - 1});
}

/// m is a non-gap iff l jumps by one in both coordinate directions.
inline bool is_nongap(const Fixture& f, Point m) {
  const std::int64_t l = ell(f, m);
  return l - ell(f, {m.x - 1, m.y}) == 1 && l - ell(f, {m.x, m.y - 1}) == 1;
}

inline TwoPointSemigroup semigroup_from_fixture(const Fixture& f) {
  const std::int64_t top = 2 * f.genus();
  Strip rows(static_cast<std::size_t>(top), std::vector<bool>(static_cast<std::size_t>(f.period)));
  for (std::int64_t s = 0; s < top; ++s)
    for (std::int64_t a = 0; a < f.period; ++a)
      rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)] = is_nongap(f, {a, s - a});
  return TwoPointSemigroup::from_strip(f.genus(), f.period, std::move(rows));
}

}  // namespace wsg::oracle

#endif  // WSG_ORACLE_HPP
