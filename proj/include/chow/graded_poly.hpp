#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chow/errors.hpp"
#include "chow/rational.hpp"

namespace chow {

// Dense exponent vector over a fixed generator profile; entry i is the
// exponent of generator i. Comparison (std::vector's lexicographic <) is the
// canonical monomial order used everywhere.
using ExponentVec = std::vector<int>;

// Multivariate polynomial with exact rational coefficients over graded
// generators g_1..g_m with deg(g_i) = generator_degrees[i-1]. Invariants:
// no stored zero coefficients, every exponent vector has full length, entries
// nonnegative. Two polynomials interoperate only when their degree profiles
// are identical.
class GradedPolynomial {
 public:
  using TermMap = std::map<ExponentVec, Rational>;

  GradedPolynomial() = default;  // zero polynomial over the empty profile

  explicit GradedPolynomial(std::vector<int> generator_degrees)
      : degrees_(std::move(generator_degrees)) {
    for (int d : degrees_)
      if (d <= 0) throw ArgumentError("polynomial: generator degrees must be positive");
  }

  static GradedPolynomial zero(std::vector<int> degrees) {
    return GradedPolynomial(std::move(degrees));
  }

  static GradedPolynomial constant(std::vector<int> degrees, const Rational& c) {
    GradedPolynomial p(std::move(degrees));
    if (c != 0) p.terms_[ExponentVec(p.degrees_.size(), 0)] = c;
    return p;
  }

  static GradedPolynomial one(std::vector<int> degrees) {
    return constant(std::move(degrees), Rational(1));
  }

  // index is 0-based.
  static GradedPolynomial generator(std::vector<int> degrees, int index) {
    GradedPolynomial p(std::move(degrees));
    if (index < 0 || index >= p.num_generators())
      throw ArgumentError("polynomial: generator index out of range");
    ExponentVec e(p.degrees_.size(), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.terms_[std::move(e)] = 1;
    return p;
  }

  static GradedPolynomial monomial(std::vector<int> degrees, ExponentVec exponents,
                                   const Rational& c) {
    GradedPolynomial p(std::move(degrees));
    p.check_exponents(exponents);
    if (c != 0) p.terms_[std::move(exponents)] = c;
    return p;
  }

  const std::vector<int>& generator_degrees() const { return degrees_; }
  int num_generators() const { return static_cast<int>(degrees_.size()); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const ExponentVec& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  long term_degree(const ExponentVec& exponents) const {
    long d = 0;
    for (std::size_t i = 0; i < degrees_.size(); ++i)
      d += static_cast<long>(exponents[i]) * degrees_[i];
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = term_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (term_degree(e) != d) return false;
    return true;
  }

  // Engaged iff nonzero and homogeneous.
  std::optional<long> homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return term_degree(terms_.begin()->first);
  }

  // True when every term has the given degree (vacuously true for zero).
  bool is_homogeneous_of_degree(long d) const {
    for (const auto& [e, c] : terms_)
      if (term_degree(e) != d) return false;
    return true;
  }

  // The terms of one fixed degree, as a polynomial.
  GradedPolynomial homogeneous_part(long d) const {
    GradedPolynomial out(degrees_);
    for (const auto& [e, c] : terms_)
      if (term_degree(e) == d) out.terms_[e] = c;
    return out;
  }

  GradedPolynomial& operator+=(const GradedPolynomial& rhs) {
    check_profile(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  GradedPolynomial& operator-=(const GradedPolynomial& rhs) {
    check_profile(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  GradedPolynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [e, v] : terms_) v *= c;
    }
    return *this;
  }

  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) {
    a += b;
    return a;
  }

  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) {
    a -= b;
    return a;
  }

  friend GradedPolynomial operator-(GradedPolynomial a) {
    for (auto& [e, v] : a.terms_) v = -v;
    return a;
  }

  friend GradedPolynomial operator*(const GradedPolynomial& a, const Rational& c) {
    GradedPolynomial r = a;
    r *= c;
    return r;
  }

  friend GradedPolynomial operator*(const Rational& c, const GradedPolynomial& a) {
    return a * c;
  }

  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    a.check_profile(b);
    GradedPolynomial r(a.degrees_);
    ExponentVec e(a.degrees_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  bool operator==(const GradedPolynomial& rhs) const {
    return degrees_ == rhs.degrees_ && terms_ == rhs.terms_;
  }

  GradedPolynomial pow(int n) const {
    if (n < 0) throw ArgumentError("polynomial: negative power");
    GradedPolynomial r = one(degrees_);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  // Substitutes g_i -> images[i]. All images must share result_degrees as
  // their profile. Grading is not checked here; callers that need a graded
  // substitution guarantee it.
  GradedPolynomial substitute(const std::vector<GradedPolynomial>& images,
                              const std::vector<int>& result_degrees) const {
    if (static_cast<int>(images.size()) != num_generators())
      throw ArgumentError("substitute: wrong number of images");
    for (const auto& im : images)
      if (im.generator_degrees() != result_degrees)
        throw ProfileError("substitute: image profile mismatch");
    GradedPolynomial out(result_degrees);
    for (const auto& [e, c] : terms_) {
      GradedPolynomial term = constant(result_degrees, c);
      for (std::size_t i = 0; i < images.size(); ++i)
        for (int t = 0; t < e[i]; ++t) term = term * images[i];
      out += term;
    }
    return out;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != num_generators())
      throw ArgumentError("evaluate: wrong point dimension");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
      Rational v = c;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (int t = 0; t < e[i]; ++t) v *= point[i];
      total += v;
    }
    return total;
  }

  // Scales by the unique positive rational making all coefficients integers
  // with gcd 1. Zero stays zero.
  GradedPolynomial make_primitive() const {
    if (terms_.empty()) return *this;
    Integer den_lcm = 1;
    for (const auto& [e, c] : terms_)
      den_lcm = boost::multiprecision::lcm(den_lcm, rational_den(c));
    Integer num_gcd = 0;
    for (const auto& [e, c] : terms_)
      num_gcd = boost::multiprecision::gcd(num_gcd, Integer(rational_num(c) * den_lcm / rational_den(c)));
    return *this * make_rational(den_lcm, num_gcd);
  }

 private:
  void check_profile(const GradedPolynomial& rhs) const {
    if (degrees_ != rhs.degrees_)
      throw ProfileError("polynomial: generator profiles do not match");
  }

  void check_exponents(const ExponentVec& e) const {
    if (e.size() != degrees_.size())
      throw ArgumentError("polynomial: exponent vector has wrong length");
    for (int x : e)
      if (x < 0) throw ArgumentError("polynomial: negative exponent");
  }

  void add_term(const ExponentVec& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  std::vector<int> degrees_;
  TermMap terms_;
};

// All exponent vectors e (over the given profile) with sum e_i * deg_i = d,
// in ascending lexicographic order.
inline std::vector<ExponentVec> homogeneous_exponents(const std::vector<int>& degrees,
                                                      long d) {
  std::vector<ExponentVec> out;
  if (d < 0) return out;
  ExponentVec cur(degrees.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, long rem) -> void {
    if (i == degrees.size()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    long maxe = rem / degrees[i];
    for (long e = 0; e <= maxe; ++e) {
      cur[i] = static_cast<int>(e);
      self(self, i + 1, rem - e * degrees[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

// Power series truncated at a fixed order: coefficient j is a polynomial,
// homogeneous of graded degree j (or zero).
class TruncatedSeries {
 public:
  TruncatedSeries(int order, std::vector<GradedPolynomial> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 0) throw ArgumentError("series: negative order");
    if (coeffs_.size() != static_cast<std::size_t>(order_) + 1)
      throw ArgumentError("series: expected order+1 coefficients");
    for (int j = 0; j <= order_; ++j) {
      if (coeffs_[j].generator_degrees() != coeffs_[0].generator_degrees())
        throw ProfileError("series: coefficient profiles do not match");
      if (!coeffs_[j].is_homogeneous_of_degree(j))
        throw ArgumentError("series: coefficient " + std::to_string(j) +
                            " is not homogeneous of that degree");
    }
  }

  static TruncatedSeries one(std::vector<int> degrees, int order) {
    std::vector<GradedPolynomial> cs;
    cs.push_back(GradedPolynomial::one(degrees));
    for (int j = 1; j <= order; ++j) cs.push_back(GradedPolynomial::zero(degrees));
    return TruncatedSeries(order, std::move(cs));
  }

  int order() const { return order_; }
  const std::vector<int>& generator_degrees() const {
    return coeffs_[0].generator_degrees();
  }

  // Zero beyond the truncation order.
  const GradedPolynomial& coeff(int j) const {
    if (j < 0) throw ArgumentError("series: negative coefficient index");
    if (j > order_) {
      if (!zero_) zero_.emplace(GradedPolynomial::zero(generator_degrees()));
      return *zero_;
    }
    return coeffs_[static_cast<std::size_t>(j)];
  }

  bool operator==(const TruncatedSeries& rhs) const {
    return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
  }

 private:
  int order_;
  std::vector<GradedPolynomial> coeffs_;
  mutable std::optional<GradedPolynomial> zero_;
};

inline TruncatedSeries truncated_mul(const TruncatedSeries& a, const TruncatedSeries& b,
                                     int order) {
  if (a.generator_degrees() != b.generator_degrees())
    throw ProfileError("series: generator profiles do not match");
  std::vector<GradedPolynomial> cs;
  cs.reserve(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    GradedPolynomial acc = GradedPolynomial::zero(a.generator_degrees());
    for (int m = 0; m <= j; ++m) acc += a.coeff(m) * b.coeff(j - m);
    cs.push_back(std::move(acc));
  }
  return TruncatedSeries(order, std::move(cs));
}

// Multiplicative inverse of c up to the given order. Requires constant
// coefficient 1: p_0 = 1 and p_j = -sum_{m=1..j} c_m p_{j-m}.
inline TruncatedSeries series_inverse(const TruncatedSeries& c, int order) {
  if (!(c.coeff(0) == GradedPolynomial::one(c.generator_degrees())))
    throw NonInvertibleError("series: constant coefficient is not 1");
  std::vector<GradedPolynomial> p;
  p.reserve(static_cast<std::size_t>(order) + 1);
  p.push_back(GradedPolynomial::one(c.generator_degrees()));
  for (int j = 1; j <= order; ++j) {
    GradedPolynomial acc = GradedPolynomial::zero(c.generator_degrees());
    for (int m = 1; m <= j; ++m) acc += c.coeff(m) * p[static_cast<std::size_t>(j - m)];
    p.push_back(-std::move(acc));
  }
  return TruncatedSeries(order, std::move(p));
}

// Coefficients p_j of the inverse of the universal series 1 + c_1 + ... +
// c_{k+1} with deg(c_i) = i. Handle type: copies of a ring sharing a cache
// should share one table. Thread-safe.
class PClassTable {
 public:
  explicit PClassTable(int k) : k_(k) {
    if (k_ < 0) throw ArgumentError("p_class: k must be nonnegative");
    for (int i = 1; i <= k_ + 1; ++i) degrees_.push_back(i);
    memo_.push_back(GradedPolynomial::one(degrees_));
  }

  int k() const { return k_; }
  const std::vector<int>& generator_degrees() const { return degrees_; }

  // p_j as a polynomial in c_1..c_{k+1}, homogeneous of degree j.
  GradedPolynomial p(int j) const {
    if (j < 0) throw ArgumentError("p_class: negative index");
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(memo_.size()) <= j) {
      int next = static_cast<int>(memo_.size());
      GradedPolynomial acc = GradedPolynomial::zero(degrees_);
      for (int m = 1; m <= std::min(next, k_ + 1); ++m)
        acc += GradedPolynomial::generator(degrees_, m - 1) *
               memo_[static_cast<std::size_t>(next - m)];
      memo_.push_back(-std::move(acc));
    }
    return memo_[static_cast<std::size_t>(j)];
  }

 private:
  int k_;
  std::vector<int> degrees_;
  mutable std::mutex mu_;
  mutable std::vector<GradedPolynomial> memo_;
};

inline GradedPolynomial p_class(int j, int k) { return PClassTable(k).p(j); }

}  // namespace chow
