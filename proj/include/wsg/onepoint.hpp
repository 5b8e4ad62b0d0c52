#ifndef WSG_ONEPOINT_HPP
#define WSG_ONEPOINT_HPP

// Numerical (one-point) semigroups, delta-sequences and their Poincare and
// L-series in closed form.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wsg/errors.hpp"
#include "wsg/series.hpp"

namespace wsg {

/// Submonoid of the nonnegative integers with finite complement.
class NumericalSemigroup {
 public:
  /// Membership sieve up to 2*min*max + max, which bounds twice the
  /// conductor for coprime generators.
  static NumericalSemigroup from_generators(std::vector<std::int64_t> gens) {
    if (gens.empty()) throw InvalidSemigroup("generator list is empty");
    for (auto g : gens)
      if (g <= 0) throw InvalidSemigroup("generators must be positive, got " + std::to_string(g));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::int64_t d = 0;
    for (auto g : gens) d = std::gcd(d, g);
    if (d != 1) throw InvalidSemigroup("gcd of generators is " + std::to_string(d) + ", not 1");

    const std::int64_t limit = 2 * gens.front() * gens.back() + gens.back();
    if (limit > kSieveLimit) throw InputError("generators too large for the membership sieve");
    std::vector<bool> reach(static_cast<std::size_t>(limit) + 1, false);
    reach[0] = true;
    for (std::int64_t n = 1; n <= limit; ++n)
      for (auto g : gens) {
        if (g > n) break;
        if (reach[static_cast<std::size_t>(n - g)]) {
          reach[static_cast<std::size_t>(n)] = true;
          break;
        }
      }

    NumericalSemigroup s;
    s.generators_ = std::move(gens);
    s.conductor_ = 0;
    for (std::int64_t n = limit; n >= 0; --n)
      if (!reach[static_cast<std::size_t>(n)]) {
        s.conductor_ = n + 1;
        break;
      }
    s.below_conductor_.assign(reach.begin(), reach.begin() + s.conductor_);
    for (std::int64_t n = 0; n < s.conductor_; ++n)
      if (!reach[static_cast<std::size_t>(n)]) s.gaps_.push_back(n);
    return s;
  }

  const std::vector<std::int64_t>& generators() const noexcept { return generators_; }
  const std::vector<std::int64_t>& gaps() const noexcept { return gaps_; }
  std::int64_t conductor() const noexcept { return conductor_; }
  std::int64_t genus() const noexcept { return static_cast<std::int64_t>(gaps_.size()); }

  bool contains(std::int64_t n) const noexcept {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return below_conductor_[static_cast<std::size_t>(n)];
  }

  /// Members strictly below the conductor, ascending.
  std::vector<std::int64_t> small_elements() const {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 0; n < conductor_; ++n)
      if (contains(n)) out.push_back(n);
    return out;
  }

  static constexpr std::int64_t kSieveLimit = 50'000'000;

 private:
  NumericalSemigroup() = default;

  std::vector<std::int64_t> generators_;
  std::vector<std::int64_t> gaps_;
  std::vector<bool> below_conductor_;
  std::int64_t conductor_ = 0;
};

/// n in S exactly when c-1-n is not, for every n in [0, c).
inline bool is_symmetric(const NumericalSemigroup& s) {
  const auto c = s.conductor();
  for (std::int64_t n = 0; n < c; ++n)
    if (s.contains(n) == s.contains(c - 1 - n)) return false;
  return true;
}

/// Generators (r_0, ..., r_h) of a strictly generated semigroup together
/// with theta_i = gcd(r_0..r_{i-1}) and d_i = theta_i / theta_{i+1}.
class DeltaSequence {
 public:
  static DeltaSequence from_generators(std::vector<std::int64_t> r) {
    if (r.empty()) throw InvalidSemigroup("delta-sequence is empty");
    for (auto x : r)
      if (x <= 0) throw InvalidSemigroup("delta-sequence entries must be positive");

    DeltaSequence seq;
    std::int64_t acc = 0;
    for (auto x : r) {
      acc = std::gcd(acc, x);
      seq.theta_.push_back(acc);
    }
    if (seq.theta_.back() != 1)
      throw InvalidSemigroup("gcd of the delta-sequence is " + std::to_string(seq.theta_.back()) +
                             ", not 1");
    for (std::size_t i = 0; i + 1 < seq.theta_.size(); ++i) {
      auto d = seq.theta_[i] / seq.theta_[i + 1];
      if (d == 1)
        throw NotStrictlyGenerated("d_" + std::to_string(i + 1) +
                                   " = 1: generator r_" + std::to_string(i + 1) +
                                   " does not lower the gcd");
      seq.d_.push_back(d);
    }
    seq.r_ = std::move(r);
    seq.check_unique_representation();
    return seq;
  }

  const std::vector<std::int64_t>& generators() const noexcept { return r_; }
  /// theta_1 .. theta_{h+1}
  const std::vector<std::int64_t>& theta() const noexcept { return theta_; }
  /// d_1 .. d_h
  const std::vector<std::int64_t>& d() const noexcept { return d_; }
  std::size_t h() const noexcept { return r_.size() - 1; }

  NumericalSemigroup semigroup() const { return NumericalSemigroup::from_generators(r_); }

  /// Number of representations lambda_0 r_0 + sum lambda_i r_i with
  /// lambda_0 >= 0 and 0 <= lambda_i < d_i, for every value in [0, bound].
  std::vector<int> representation_counts(std::int64_t bound) const {
    std::vector<int> count(static_cast<std::size_t>(bound) + 1, 0);
    std::vector<std::int64_t> partial{0};
    for (std::size_t i = 1; i < r_.size(); ++i) {
      std::vector<std::int64_t> next;
      for (auto p : partial)
        for (std::int64_t lam = 0; lam < d_[i - 1]; ++lam)
          if (p + lam * r_[i] <= bound) next.push_back(p + lam * r_[i]);
      partial = std::move(next);
    }
    for (auto p : partial)
      for (auto v = p; v <= bound; v += r_[0]) ++count[static_cast<std::size_t>(v)];
    return count;
  }

 private:
  DeltaSequence() = default;

  void check_unique_representation() const {
    const NumericalSemigroup s = semigroup();
    std::int64_t dmax = 1;
    for (auto d : d_) dmax = std::max(dmax, d);
    const std::int64_t bound = s.conductor() + r_[0] * dmax;
    const auto count = representation_counts(bound);
    for (std::int64_t n = 0; n <= bound; ++n) {
      const int k = count[static_cast<std::size_t>(n)];
      if (k > 1)
        throw NotStrictlyGenerated(std::to_string(n) + " has " + std::to_string(k) +
                                   " restricted representations");
      if ((k == 1) != s.contains(n))
        throw NotStrictlyGenerated("restricted representations miss semigroup element " +
                                   std::to_string(n));
    }
  }

  std::vector<std::int64_t> r_;
  std::vector<std::int64_t> theta_;
  std::vector<std::int64_t> d_;
};

/// Gamma = S u E where S is generated by a delta-sequence and E is a finite
/// set of extra values outside S.
class OnePointSemigroup {
 public:
  OnePointSemigroup(DeltaSequence base, std::vector<std::int64_t> extras)
      : base_(std::move(base)), extras_(std::move(extras)), full_(build_full(base_, extras_)) {}

  const DeltaSequence& base() const noexcept { return base_; }
  /// Sorted, duplicate free.
  const std::vector<std::int64_t>& extras() const noexcept { return extras_; }
  /// The whole semigroup S u E.
  const NumericalSemigroup& semigroup() const noexcept { return full_; }

 private:
  static NumericalSemigroup build_full(const DeltaSequence& base, std::vector<std::int64_t>& extras) {
    std::sort(extras.begin(), extras.end());
    extras.erase(std::unique(extras.begin(), extras.end()), extras.end());
    const NumericalSemigroup s = base.semigroup();
    for (auto e : extras)
      if (e <= 0 || s.contains(e))
        throw InvalidSemigroup("extra value " + std::to_string(e) +
                               " must be a positive gap of the base semigroup");
    std::vector<std::int64_t> gens = base.generators();
    gens.insert(gens.end(), extras.begin(), extras.end());
    NumericalSemigroup full = NumericalSemigroup::from_generators(gens);

    const std::int64_t emax = extras.empty() ? 0 : extras.back();
    const std::int64_t rmax = *std::max_element(base.generators().begin(), base.generators().end());
    const std::int64_t bound = full.conductor() + emax + rmax;
    for (std::int64_t n = 0; n <= bound; ++n) {
      const bool listed = s.contains(n) || std::binary_search(extras.begin(), extras.end(), n);
      if (listed != full.contains(n))
        throw InvalidSemigroup("base semigroup plus extras is not additively closed: " +
                               std::to_string(n) + " is generated but not listed");
    }
    return full;
  }

  DeltaSequence base_;
  std::vector<std::int64_t> extras_;
  NumericalSemigroup full_;
};

namespace detail {

inline LaurentPoly power_sum(const std::vector<std::int64_t>& exps) {
  LaurentPoly p(1);
  for (auto e : exps) p = p + LaurentPoly::monomial(ExponentVec(e));
  return p;
}

inline LaurentPoly one_minus_t() { return LaurentPoly::one_minus(ExponentVec(1)); }

}  // namespace detail

/// sum_{n in S} t^n = (t^c + (1 - t) sum_{n in S, n < c} t^n) / (1 - t).
inline RationalGF poincare_direct(const NumericalSemigroup& s) {
  LaurentPoly num = LaurentPoly::monomial(ExponentVec(s.conductor())) +
                    detail::one_minus_t() * detail::power_sum(s.small_elements());
  return RationalGF(std::move(num), {ExponentVec(1)});
}

/// 1/(1 - t^{r_0}) * prod_i (1 - t^{d_i r_i}) / (1 - t^{r_i}).
inline RationalGF poincare_delta_product(const DeltaSequence& seq) {
  LaurentPoly num = LaurentPoly::constant(1, 1);
  std::vector<ExponentVec> den{ExponentVec(seq.generators()[0])};
  for (std::size_t i = 1; i < seq.generators().size(); ++i) {
    num = num * LaurentPoly::one_minus(ExponentVec(seq.d()[i - 1] * seq.generators()[i]));
    den.emplace_back(seq.generators()[i]);
  }
  return RationalGF(std::move(num), std::move(den));
}

enum class OnePointMode { finite_sum, paper_product };

/// Expansion comparison between the finite-sum and the product correction.
struct ModeComparison {
  std::int64_t window_hi = 0;  // window is [0, window_hi]
  bool agree = true;
  std::vector<std::int64_t> disagreements;
};

struct OnePointSeries {
  RationalGF series;
  ModeComparison comparison;
};

/// finite_sum: sum_{s in E} t^s. paper_product: prod_{s in E} 1/(1 - t^s)
/// minus its constant term, so only nonempty combinations of extras count
/// (0 already lies in the base). Both vanish for E empty.
inline RationalGF onepoint_correction(const OnePointSemigroup& g, OnePointMode mode) {
  if (mode == OnePointMode::finite_sum) return RationalGF(detail::power_sum(g.extras()));
  std::vector<ExponentVec> den;
  for (auto s : g.extras()) den.emplace_back(s);
  LaurentPoly num = LaurentPoly::constant(1, 1) - factor_product(1, den);
  return RationalGF(std::move(num), std::move(den));
}

inline OnePointSeries poincare_onepoint(const OnePointSemigroup& g, OnePointMode mode) {
  const RationalGF base = poincare_delta_product(g.base());
  const RationalGF finite = base + onepoint_correction(g, OnePointMode::finite_sum);
  const RationalGF product = base + onepoint_correction(g, OnePointMode::paper_product);

  ModeComparison cmp;
  const std::int64_t emax = g.extras().empty() ? 0 : g.extras().back();
  cmp.window_hi = g.semigroup().conductor() + emax + 10;
  const Window w(0, cmp.window_hi);
  const auto a = expand(finite, w);
  const auto b = expand(product, w);
  for (const auto& [m, c] : a)
    if (b.at(m) != c) cmp.disagreements.push_back(m[0]);
  cmp.agree = cmp.disagreements.empty();
  return {mode == OnePointMode::finite_sum ? finite : product, cmp};
}

enum class LMode { direct, paper };

/// direct: t^c + (1 - t) sum_{n in S, n < c} t^n, i.e. (1 - t) P(t).
/// paper: direct + (1 - t), the variant with the extra 1 - t term.
inline LaurentPoly l_polynomial(const NumericalSemigroup& s, LMode mode) {
  LaurentPoly direct = LaurentPoly::monomial(ExponentVec(s.conductor())) +
                       detail::one_minus_t() * detail::power_sum(s.small_elements());
  if (mode == LMode::direct) return direct;
  return direct + detail::one_minus_t();
}

struct LFormComparison {
  LaurentPoly direct;
  LaurentPoly paper;
  LaurentPoly difference;  // paper - direct
  bool differ = false;
  /// 1 - t + t^{2g}, the complete-intersection closed form.
  LaurentPoly complete_intersection;
  bool complete_intersection_matches = false;
};

inline LFormComparison compare_l_forms(const NumericalSemigroup& s) {
  LFormComparison r;
  r.direct = l_polynomial(s, LMode::direct);
  r.paper = l_polynomial(s, LMode::paper);
  r.difference = r.paper - r.direct;
  r.differ = !r.difference.is_zero();
  r.complete_intersection =
      detail::one_minus_t() + LaurentPoly::monomial(ExponentVec(2 * s.genus()));
  r.complete_intersection_matches = r.complete_intersection == r.direct;
  return r;
}

/// Signs eps with f(t) = eps * t^k * f(1/t). Empty optional: no sign (or
/// both signs) work.
struct FunctionalEquationSigns {
  std::optional<int> eps_l;
  std::optional<int> eps_p;
  static constexpr int kPublishedEpsL = -1;
  static constexpr int kPublishedEpsP = +1;
  bool matches_published() const {
    return eps_l == kPublishedEpsL && eps_p == kPublishedEpsP;
  }
};

inline std::optional<int> unique_reflection_sign(const RationalGF& f, std::int64_t shift) {
  const RationalGF reflected = reciprocal(f) * LaurentPoly::monomial(ExponentVec(shift));
  std::optional<int> found;
  int hits = 0;
  for (int eps : {+1, -1}) {
    if (equivalent(f, reflected * LaurentPoly::constant(1, eps))) {
      found = eps;
      ++hits;
    }
  }
  return hits == 1 ? found : std::nullopt;
}

inline FunctionalEquationSigns functional_equation_sign(const NumericalSemigroup& s) {
  if (!is_symmetric(s))
    throw NotSymmetric("semigroup is not symmetric (conductor " + std::to_string(s.conductor()) +
                       ", genus " + std::to_string(s.genus()) + ")");
  FunctionalEquationSigns r;
  r.eps_l = unique_reflection_sign(RationalGF(l_polynomial(s, LMode::direct)), 2 * s.genus());
  r.eps_p = unique_reflection_sign(poincare_direct(s), 2 * s.genus() - 1);
  return r;
}

}  // namespace wsg

#endif  // WSG_ONEPOINT_HPP
