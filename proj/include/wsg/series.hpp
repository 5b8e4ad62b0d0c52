#ifndef WSG_SERIES_HPP
#define WSG_SERIES_HPP

// Exact sparse Laurent polynomials and rational generating functions in one
// or two variables. Denominators stay factored as products of (1 - t^v)
// with v nonnegative and nonzero.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wsg/errors.hpp"

namespace wsg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent of a monomial t^e, with one or two components.
class ExponentVec {
 public:
  static constexpr std::size_t kMaxArity = 2;

  ExponentVec() = default;
  explicit ExponentVec(std::int64_t e) : comps_{e, 0}, arity_(1) {}
  ExponentVec(std::int64_t e1, std::int64_t e2) : comps_{e1, e2}, arity_(2) {}

  static ExponentVec zero(std::size_t arity) {
    check_arity(arity);
    return arity == 1 ? ExponentVec(0) : ExponentVec(0, 0);
  }

  static ExponentVec from_components(const std::vector<std::int64_t>& c) {
    check_arity(c.size());
    return c.size() == 1 ? ExponentVec(c[0]) : ExponentVec(c[0], c[1]);
  }

  std::size_t arity() const noexcept { return arity_; }
  std::int64_t operator[](std::size_t i) const noexcept { return comps_[i]; }

  std::vector<std::int64_t> components() const {
    return {comps_.begin(), comps_.begin() + static_cast<std::ptrdiff_t>(arity_)};
  }

  bool is_zero() const noexcept { return comps_[0] == 0 && comps_[1] == 0; }

  bool is_nonnegative() const noexcept {
    for (std::size_t i = 0; i < arity_; ++i)
      if (comps_[i] < 0) return false;
    return true;
  }

  /// Componentwise m <= n.
  bool dominated_by(const ExponentVec& other) const noexcept {
    for (std::size_t i = 0; i < arity_; ++i)
      if (comps_[i] > other.comps_[i]) return false;
    return true;
  }

  friend ExponentVec operator+(const ExponentVec& a, const ExponentVec& b) {
    same_arity(a, b);
    ExponentVec r = a;
    for (std::size_t i = 0; i < a.arity_; ++i) r.comps_[i] += b.comps_[i];
    return r;
  }

  friend ExponentVec operator-(const ExponentVec& a, const ExponentVec& b) {
    same_arity(a, b);
    ExponentVec r = a;
    for (std::size_t i = 0; i < a.arity_; ++i) r.comps_[i] -= b.comps_[i];
    return r;
  }

  friend ExponentVec operator-(const ExponentVec& a) {
    ExponentVec r = a;
    for (std::size_t i = 0; i < a.arity_; ++i) r.comps_[i] = -r.comps_[i];
    return r;
  }

  // Lexicographic; unused trailing components are always zero.
  friend auto operator<=>(const ExponentVec&, const ExponentVec&) = default;
  friend bool operator==(const ExponentVec&, const ExponentVec&) = default;

  static void check_arity(std::size_t arity) {
    if (arity < 1 || arity > kMaxArity)
      throw ArityMismatch("exponent arity must be 1 or 2, got " + std::to_string(arity));
  }

  static void same_arity(const ExponentVec& a, const ExponentVec& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch("exponent arity mismatch");
  }

 private:
  std::array<std::int64_t, kMaxArity> comps_{0, 0};
  std::size_t arity_ = 0;
};

inline std::string to_string(const ExponentVec& e) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.arity(); ++i) {
    if (i) os << ',';
    os << e[i];
  }
  os << ')';
  return os.str();
}

namespace detail {

inline Rational rational_pow(const Rational& base, std::int64_t exp) {
  if (exp < 0) {
    if (base == 0) throw Error("zero raised to a negative power");
    return rational_pow(Rational(1) / base, -exp);
  }
  Rational result = 1;
  Rational b = base;
  auto e = static_cast<std::uint64_t>(exp);
  while (e) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

}  // namespace detail

/// Finite sum of integer multiples of monomials t^e. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  using Terms = std::map<ExponentVec, Integer>;

  explicit LaurentPoly(std::size_t arity = 1) : arity_(arity) {
    ExponentVec::check_arity(arity);
  }

  LaurentPoly(std::size_t arity, std::initializer_list<std::pair<ExponentVec, Integer>> terms)
      : LaurentPoly(arity) {
    for (const auto& [e, c] : terms) accumulate(e, c);
  }

  LaurentPoly(std::size_t arity, const std::vector<std::pair<ExponentVec, Integer>>& terms)
      : LaurentPoly(arity) {
    for (const auto& [e, c] : terms) accumulate(e, c);
  }

  static LaurentPoly monomial(const ExponentVec& e, const Integer& c = 1) {
    LaurentPoly p(e.arity());
    p.accumulate(e, c);
    return p;
  }

  static LaurentPoly constant(std::size_t arity, const Integer& c) {
    return monomial(ExponentVec::zero(arity), c);
  }

  /// 1 - t^v
  static LaurentPoly one_minus(const ExponentVec& v) {
    LaurentPoly p = constant(v.arity(), 1);
    p.accumulate(v, -1);
    return p;
  }

  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coefficient(const ExponentVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Componentwise minimum / maximum exponent over the support.
  /// Precondition: nonzero.
  ExponentVec min_exponent() const { return extreme(true); }
  ExponentVec max_exponent() const { return extreme(false); }

  /// p(1/t): every exponent negated.
  LaurentPoly reciprocal() const {
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  LaurentPoly shifted(const ExponentVec& by) const {
    check_same(by.arity());
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
    return r;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    check_same(point.size());
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = Rational(c);
      for (std::size_t i = 0; i < arity_; ++i) term *= detail::rational_pow(point[i], e[i]);
      sum += term;
    }
    return sum;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b.arity_);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.accumulate(e, c);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b.arity_);
    LaurentPoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.accumulate(ea + eb, ca * cb);
    return r;
  }

  friend LaurentPoly operator*(const Integer& k, const LaurentPoly& a) {
    return a * constant(a.arity_, k);
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  void check_same(std::size_t arity) const {
    if (arity != arity_)
      throw ArityMismatch("arity mismatch: " + std::to_string(arity_) + " vs " +
                          std::to_string(arity));
  }

 private:
  void accumulate(const ExponentVec& e, const Integer& c) {
    check_same(e.arity());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  ExponentVec extreme(bool take_min) const {
    if (terms_.empty()) throw Error("extreme exponent of the zero polynomial");
    std::vector<std::int64_t> acc = terms_.begin()->first.components();
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < arity_; ++i)
        acc[i] = take_min ? std::min(acc[i], e[i]) : std::max(acc[i], e[i]);
    return ExponentVec::from_components(acc);
  }

  std::size_t arity_;
  Terms terms_;
};

inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.arity(); ++i) {
      if (e[i] == 0) continue;
      std::string name = e.arity() == 1 ? "t" : "t" + std::to_string(i + 1);
      factors.push_back(e[i] == 1 ? name : name + "^" + std::to_string(e[i]));
    }
    if (factors.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

/// Closed integer interval per variable.
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t width() const noexcept { return hi - lo + 1; }
};

class Window {
 public:
  Window(std::int64_t lo, std::int64_t hi) : ranges_{Interval{lo, hi}} { validate(); }
  Window(std::int64_t lo1, std::int64_t hi1, std::int64_t lo2, std::int64_t hi2)
      : ranges_{Interval{lo1, hi1}, Interval{lo2, hi2}} {
    validate();
  }
  explicit Window(std::vector<Interval> ranges) : ranges_(std::move(ranges)) { validate(); }

  std::size_t arity() const noexcept { return ranges_.size(); }
  const Interval& operator[](std::size_t i) const noexcept { return ranges_[i]; }
  const std::vector<Interval>& ranges() const noexcept { return ranges_; }

  bool contains(const ExponentVec& e) const noexcept {
    if (e.arity() != arity()) return false;
    for (std::size_t i = 0; i < arity(); ++i)
      if (e[i] < ranges_[i].lo || e[i] > ranges_[i].hi) return false;
    return true;
  }

  /// Every lattice point of the window in lexicographic order.
  std::vector<ExponentVec> points() const {
    std::vector<ExponentVec> out;
    if (arity() == 1) {
      for (auto x = ranges_[0].lo; x <= ranges_[0].hi; ++x) out.emplace_back(x);
    } else {
      for (auto x = ranges_[0].lo; x <= ranges_[0].hi; ++x)
        for (auto y = ranges_[1].lo; y <= ranges_[1].hi; ++y) out.emplace_back(x, y);
    }
    return out;
  }

  /// Window shrunk by `margin` cells on every side; throws when nothing is left.
  Window shrunk(std::int64_t margin) const {
    std::vector<Interval> r = ranges_;
    for (auto& iv : r) {
      iv.lo += margin;
      iv.hi -= margin;
      if (iv.lo > iv.hi)
        throw WindowTooSmall("window needs a margin of " + std::to_string(margin) +
                             " cells on each side");
    }
    return Window(std::move(r));
  }

 private:
  void validate() const {
    ExponentVec::check_arity(ranges_.size());
    for (const auto& iv : ranges_)
      if (iv.lo > iv.hi) throw InputError("window bounds must satisfy lo <= hi");
  }

  std::vector<Interval> ranges_;
};

/// numerator / prod (1 - t^v) over the denominator multiset.
class RationalGF {
 public:
  explicit RationalGF(LaurentPoly numerator, std::vector<ExponentVec> denominator = {})
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    for (const auto& v : den_) {
      num_.check_same(v.arity());
      if (!v.is_nonnegative() || v.is_zero())
        throw InputError("denominator factor exponent must be nonnegative and nonzero: " +
                         to_string(v));
    }
    std::sort(den_.begin(), den_.end());
  }

  std::size_t arity() const noexcept { return num_.arity(); }
  const LaurentPoly& numerator() const noexcept { return num_; }
  const std::vector<ExponentVec>& denominator() const noexcept { return den_; }

  /// Structural equality (same numerator, same factor multiset).
  friend bool operator==(const RationalGF&, const RationalGF&) = default;

 private:
  LaurentPoly num_;
  std::vector<ExponentVec> den_;  // sorted
};

/// Expanded product of (1 - t^v) over `factors`.
inline LaurentPoly factor_product(std::size_t arity, const std::vector<ExponentVec>& factors) {
  LaurentPoly p = LaurentPoly::constant(arity, 1);
  for (const auto& v : factors) p = p * LaurentPoly::one_minus(v);
  return p;
}

namespace detail {

// Multiset difference of two sorted factor lists.
inline std::vector<ExponentVec> factor_difference(const std::vector<ExponentVec>& a,
                                                  const std::vector<ExponentVec>& b) {
  std::vector<ExponentVec> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

inline RationalGF operator*(const RationalGF& f, const LaurentPoly& p) {
  return RationalGF(f.numerator() * p, f.denominator());
}

inline RationalGF operator-(const RationalGF& f) { return RationalGF(-f.numerator(), f.denominator()); }

/// Sum over the least common factor multiset.
inline RationalGF operator+(const RationalGF& a, const RationalGF& b) {
  a.numerator().check_same(b.arity());
  std::vector<ExponentVec> common;
  std::set_union(a.denominator().begin(), a.denominator().end(), b.denominator().begin(),
                 b.denominator().end(), std::back_inserter(common));
  LaurentPoly na = a.numerator() *
                   factor_product(a.arity(), detail::factor_difference(common, a.denominator()));
  LaurentPoly nb = b.numerator() *
                   factor_product(b.arity(), detail::factor_difference(common, b.denominator()));
  return RationalGF(na + nb, common);
}

/// Exact equality as rational functions.
inline bool equivalent(const RationalGF& a, const RationalGF& b) {
  a.numerator().check_same(b.arity());
  auto a_only = detail::factor_difference(a.denominator(), b.denominator());
  auto b_only = detail::factor_difference(b.denominator(), a.denominator());
  return a.numerator() * factor_product(a.arity(), b_only) ==
         b.numerator() * factor_product(b.arity(), a_only);
}

/// f(1/t), renormalized through 1 - t^-v = -t^-v (1 - t^v).
inline RationalGF reciprocal(const RationalGF& f) {
  std::vector<std::int64_t> shift(f.arity(), 0);
  for (const auto& v : f.denominator())
    for (std::size_t i = 0; i < f.arity(); ++i) shift[i] += v[i];
  LaurentPoly num = f.numerator().reciprocal().shifted(ExponentVec::from_components(shift));
  if (f.denominator().size() % 2 == 1) num = -num;
  return RationalGF(std::move(num), f.denominator());
}

/// Exact value at a point where no denominator factor vanishes.
inline Rational evaluate(const RationalGF& f, const std::vector<Rational>& point) {
  Rational den = factor_product(f.arity(), f.denominator()).evaluate(point);
  if (den == 0) throw Error("denominator vanishes at evaluation point");
  return f.numerator().evaluate(point) / den;
}

/// Coefficients of t^m for every m in the window, expanding each
/// 1/(1 - t^v) as sum_{k>=0} t^{kv}. Zero coefficients are included.
inline std::map<ExponentVec, Integer> expand(const RationalGF& f, const Window& w) {
  if (w.arity() != f.arity()) throw ArityMismatch("window arity does not match series arity");
  const std::size_t n = f.arity();
  std::map<ExponentVec, Integer> out;
  for (const auto& m : w.points()) out.emplace(m, Integer(0));
  if (f.numerator().is_zero()) return out;

  // Count of representations k = sum c_j v_j on the box [0, extent].
  const ExponentVec low = f.numerator().min_exponent();
  std::vector<std::int64_t> extent(n);
  for (std::size_t i = 0; i < n; ++i) {
    extent[i] = w[i].hi - low[i];
    if (extent[i] < 0) return out;
  }
  std::vector<std::size_t> stride(n);
  std::size_t total = 1;
  for (std::size_t i = n; i-- > 0;) {
    stride[i] = total;
    total *= static_cast<std::size_t>(extent[i] + 1);
  }
  std::vector<Integer> ways(total, Integer(0));
  ways[0] = 1;
  for (const auto& v : f.denominator()) {
    bool fits = true;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] > extent[i]) fits = false;
      offset += static_cast<std::size_t>(v[i]) * stride[i];
    }
    if (!fits) continue;
    for (std::size_t idx = offset; idx < total; ++idx) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i) {
        auto k = static_cast<std::int64_t>((idx / stride[i]) % static_cast<std::size_t>(extent[i] + 1));
        if (k < v[i]) {
          inside = false;
          break;
        }
      }
      if (inside) ways[idx] += ways[idx - offset];
    }
  }

  for (auto& [m, coeff] : out) {
    for (const auto& [e, c] : f.numerator().terms()) {
      ExponentVec k = m - e;
      if (!k.is_nonnegative()) continue;
      std::size_t idx = 0;
      for (std::size_t i = 0; i < n; ++i) idx += static_cast<std::size_t>(k[i]) * stride[i];
      coeff += c * ways[idx];
    }
  }
  return out;
}

inline std::string to_string(const RationalGF& f) {
  std::string s = "(" + to_string(f.numerator()) + ")";
  if (f.denominator().empty()) return s;
  s += " / (";
  bool first = true;
  for (const auto& v : f.denominator()) {
    if (!first) s += "*";
    first = false;
    s += "(" + to_string(LaurentPoly::one_minus(v)) + ")";
  }
  return s + ")";
}

}  // namespace wsg

#endif  // WSG_SERIES_HPP
