#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chow/errors.hpp"
#include "chow/graded_poly.hpp"
#include "chow/partition.hpp"
#include "chow/rational.hpp"

namespace chow {

class SchubertElement;
class GrassmannRing;

namespace detail {

using PartitionTermMap = std::map<Partition, Rational, PartitionCanonicalLess>;

// Per-ring memo storage. Holds no ring handles (only raw term maps and
// polynomials), so handle copies can share it without reference cycles.
struct GrassmannCache {
  explicit GrassmannCache(int k) : pclass(k) {}

  std::mutex mu;
  std::map<Partition, GradedPolynomial, PartitionCanonicalLess> giambelli;
  std::vector<PartitionTermMap> chern;  // filled lazily, indices 0..k+1
  PClassTable pclass;
};

}  // namespace detail

// Handle to the Chow ring of the Grassmannian of projective k-planes in
// projective r-space, with the Schubert basis indexed by partitions inside
// the (k+1) x (r-k) box. Copies share the memo cache; rings with equal (k, r)
// are interchangeable. Immutable and safe to use from multiple threads.
class GrassmannRing {
 public:
  GrassmannRing(int k, int r) : k_(k), r_(r) {
    if (k < 0 || r < k)
      throw ArgumentError("ring: requires 0 <= k <= r");
    cache_ = std::make_shared<detail::GrassmannCache>(k);
  }

  int k() const { return k_; }
  int r() const { return r_; }
  int rows() const { return k_ + 1; }
  int cols() const { return r_ - k_; }  // number of special classes
  long top_degree() const { return static_cast<long>(rows()) * cols(); }

  // Degrees 1..r-k: the profile of polynomials in the special classes.
  std::vector<int> sigma_degrees() const {
    std::vector<int> d;
    for (int i = 1; i <= cols(); ++i) d.push_back(i);
    return d;
  }

  // Degrees 1..k+1: the profile of polynomials in the subbundle classes.
  std::vector<int> chern_degrees() const {
    std::vector<int> d;
    for (int i = 1; i <= k_ + 1; ++i) d.push_back(i);
    return d;
  }

  bool operator==(const GrassmannRing& rhs) const {
    return k_ == rhs.k_ && r_ == rhs.r_;
  }

  detail::GrassmannCache& cache() const { return *cache_; }

 private:
  int k_, r_;
  std::shared_ptr<detail::GrassmannCache> cache_;
};

// Finite rational combination of Schubert classes of one ring. Stored terms
// always fit the ring's box and carry nonzero coefficients; classes outside
// the box are dropped as zero on construction (geometric vanishing).
class SchubertElement {
 public:
  using TermMap = detail::PartitionTermMap;

  explicit SchubertElement(GrassmannRing ring) : ring_(std::move(ring)) {}

  static SchubertElement unit(const GrassmannRing& ring) {
    SchubertElement e(ring);
    e.terms_[Partition()] = 1;
    return e;
  }

  static SchubertElement sigma(const GrassmannRing& ring, const Partition& lam) {
    SchubertElement e(ring);
    if (lam.fits_box(ring.rows(), ring.cols())) e.terms_[lam] = 1;
    return e;
  }

  // The special class for j in 1..r-k; the unit for j = 0; zero otherwise.
  static SchubertElement sigma(const GrassmannRing& ring, int j) {
    if (j == 0) return unit(ring);
    if (j < 0 || j > ring.cols()) return SchubertElement(ring);
    return sigma(ring, Partition(std::vector<int>{j}));
  }

  static SchubertElement from_terms(const GrassmannRing& ring, const TermMap& raw) {
    SchubertElement e(ring);
    for (const auto& [lam, c] : raw)
      if (c != 0 && lam.fits_box(ring.rows(), ring.cols())) e.terms_[lam] = c;
    return e;
  }

  const GrassmannRing& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.size();
    for (const auto& [lam, c] : terms_)
      if (lam.size() != d) return false;
    return true;
  }

  // Engaged iff nonzero and homogeneous.
  std::optional<long> homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.begin()->first.size();
  }

  SchubertElement homogeneous_part(int d) const {
    SchubertElement out(ring_);
    for (const auto& [lam, c] : terms_)
      if (lam.size() == d) out.terms_[lam] = c;
    return out;
  }

  SchubertElement& operator+=(const SchubertElement& rhs) {
    check_ring(rhs);
    for (const auto& [lam, c] : rhs.terms_) add_term(lam, c);
    return *this;
  }

  SchubertElement& operator-=(const SchubertElement& rhs) {
    check_ring(rhs);
    for (const auto& [lam, c] : rhs.terms_) add_term(lam, -c);
    return *this;
  }

  SchubertElement& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [lam, v] : terms_) v *= c;
    }
    return *this;
  }

  friend SchubertElement operator+(SchubertElement a, const SchubertElement& b) {
    a += b;
    return a;
  }

  friend SchubertElement operator-(SchubertElement a, const SchubertElement& b) {
    a -= b;
    return a;
  }

  friend SchubertElement operator-(SchubertElement a) {
    for (auto& [lam, v] : a.terms_) v = -v;
    return a;
  }

  friend SchubertElement operator*(SchubertElement a, const Rational& c) {
    a *= c;
    return a;
  }

  friend SchubertElement operator*(const Rational& c, SchubertElement a) {
    a *= c;
    return a;
  }

  bool operator==(const SchubertElement& rhs) const {
    return ring_ == rhs.ring_ && terms_ == rhs.terms_;
  }

  void add_term(const Partition& lam, const Rational& c) {
    if (!lam.fits_box(ring_.rows(), ring_.cols())) return;
    auto it = terms_.find(lam);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(lam, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

 private:
  void check_ring(const SchubertElement& rhs) const {
    if (!(ring_ == rhs.ring_))
      throw ProfileError("element: rings do not match");
  }

  GrassmannRing ring_;
  TermMap terms_;
};

// Schubert basis of one graded piece, in canonical order. Degrees outside
// 0..top yield the empty list.
inline std::vector<Partition> enumerate_partitions(const GrassmannRing& ring, int degree) {
  return partitions_in_box(degree, ring.rows(), ring.cols());
}

// Product of the special class sigma_j with sigma_lam: the sum of sigma_mu
// over partitions mu obtained from lam by adding j boxes, no two in one
// column, staying inside the box. Multiplicity free.
inline SchubertElement pieri(const GrassmannRing& ring, int j, const Partition& lam) {
  if (j < 1 || j > ring.cols())
    throw ArgumentError("pieri: index must lie in 1..r-k");
  if (!lam.fits_box(ring.rows(), ring.cols()))
    throw ArgumentError("pieri: partition does not fit the box");
  SchubertElement out(ring);
  const int rows = ring.rows();
  std::vector<int> mu(static_cast<std::size_t>(rows), 0);
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == rows) {
      if (rem != 0) return;
      std::vector<int> parts;
      for (int v : mu)
        if (v > 0) parts.push_back(v);
      out.add_term(Partition(std::move(parts)), 1);
      return;
    }
    const int lo = lam.part(i);
    const int hi = std::min(i == 0 ? ring.cols() : lam.part(i - 1), lo + rem);
    for (int v = lo; v <= hi; ++v) {
      mu[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, rem - (v - lo));
    }
  };
  rec(rec, 0, j);
  return out;
}

inline SchubertElement pieri_apply(const GrassmannRing& ring, int j,
                                   const SchubertElement& x) {
  SchubertElement out(ring);
  for (const auto& [lam, c] : x.terms()) out += c * pieri(ring, j, lam);
  return out;
}

namespace detail {

inline GradedPolynomial poly_det(const std::vector<std::vector<GradedPolynomial>>& m,
                                 const std::vector<int>& profile) {
  const std::size_t n = m.size();
  if (n == 0) return GradedPolynomial::one(profile);
  if (n == 1) return m[0][0];
  GradedPolynomial acc = GradedPolynomial::zero(profile);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<GradedPolynomial>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<GradedPolynomial> row;
      row.reserve(n - 1);
      for (std::size_t jj = 0; jj < n; ++jj)
        if (jj != j) row.push_back(m[i][jj]);
      minor.push_back(std::move(row));
    }
    GradedPolynomial term = m[0][j] * poly_det(minor, profile);
    if (j % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

}  // namespace detail

// Expresses sigma_lam as the determinant det(sigma_{lam_i + j - i}) in the
// special classes, with sigma_0 = 1 and sigma_m = 0 outside 0..r-k. Memoized
// per ring handle.
inline GradedPolynomial giambelli(const GrassmannRing& ring, const Partition& lam) {
  if (!lam.fits_box(ring.rows(), ring.cols()))
    throw ArgumentError("giambelli: partition does not fit the box");
  const std::vector<int> profile = ring.sigma_degrees();
  auto& cache = ring.cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.giambelli.find(lam);
    if (it != cache.giambelli.end()) return it->second;
  }
  auto entry = [&](int m) -> GradedPolynomial {
    if (m == 0) return GradedPolynomial::one(profile);
    if (m < 0 || m > ring.cols()) return GradedPolynomial::zero(profile);
    return GradedPolynomial::generator(profile, m - 1);
  };
  const int len = lam.length();
  std::vector<std::vector<GradedPolynomial>> mat;
  mat.reserve(static_cast<std::size_t>(len));
  for (int i = 1; i <= len; ++i) {
    std::vector<GradedPolynomial> row;
    row.reserve(static_cast<std::size_t>(len));
    for (int j = 1; j <= len; ++j) row.push_back(entry(lam.part(i - 1) + j - i));
    mat.push_back(std::move(row));
  }
  GradedPolynomial result = detail::poly_det(mat, profile);
  std::lock_guard<std::mutex> lock(cache.mu);
  cache.giambelli.emplace(lam, result);
  return result;
}

// Full Schubert product: Giambelli-expand the left factor into special
// classes and push them through repeated Pieri steps on the right factor.
inline SchubertElement multiply(const SchubertElement& a, const SchubertElement& b) {
  if (!(a.ring() == b.ring()))
    throw ProfileError("multiply: rings do not match");
  const GrassmannRing& ring = a.ring();
  SchubertElement out(ring);
  for (const auto& [lam, ca] : a.terms()) {
    GradedPolynomial g = giambelli(ring, lam);
    SchubertElement acc(ring);
    for (const auto& [e, cg] : g.terms()) {
      SchubertElement t = b;
      for (std::size_t idx = 0; idx < e.size(); ++idx)
        for (int rep = 0; rep < e[idx]; ++rep)
          t = pieri_apply(ring, static_cast<int>(idx) + 1, t);
      acc += cg * t;
    }
    out += ca * acc;
  }
  return out;
}

inline SchubertElement operator*(const SchubertElement& a, const SchubertElement& b) {
  return multiply(a, b);
}

// Evaluates a polynomial at given ring elements (generator i -> images[i]).
inline SchubertElement evaluate_poly(const GrassmannRing& ring, const GradedPolynomial& f,
                                     const std::vector<SchubertElement>& images) {
  if (static_cast<int>(images.size()) != f.num_generators())
    throw ArgumentError("evaluate: wrong number of images");
  SchubertElement out(ring);
  for (const auto& [e, c] : f.terms()) {
    SchubertElement term = SchubertElement::unit(ring);
    for (std::size_t i = 0; i < images.size(); ++i)
      for (int rep = 0; rep < e[i]; ++rep) term = term * images[i];
    out += c * term;
  }
  return out;
}

// Chern class of the tautological subbundle, from the recursion
// c_0 = 1, c_i = -sum_{m=1..min(i,r-k)} sigma_m c_{i-m}. Valid for
// i in 0..k+1; memoized per ring handle.
inline SchubertElement chern_S(const GrassmannRing& ring, int i) {
  if (i < 0 || i > ring.k() + 1)
    throw ArgumentError("chern: index must lie in 0..k+1");
  auto& cache = ring.cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  if (cache.chern.empty())
    cache.chern.push_back(SchubertElement::unit(ring).terms());
  while (static_cast<int>(cache.chern.size()) <= i) {
    const int n = static_cast<int>(cache.chern.size());
    SchubertElement acc(ring);
    for (int m = 1; m <= std::min(n, ring.cols()); ++m) {
      SchubertElement prev = SchubertElement::from_terms(
          ring, cache.chern[static_cast<std::size_t>(n - m)]);
      acc += pieri_apply(ring, m, prev);
    }
    cache.chern.push_back((-acc).terms());
  }
  return SchubertElement::from_terms(ring, cache.chern[static_cast<std::size_t>(i)]);
}

// Evaluates a homogeneous polynomial in the subbundle classes c_1..c_{k+1}
// (profile degrees 1..k+1) in the ring.
inline SchubertElement to_schubert(const GrassmannRing& ring, const GradedPolynomial& f) {
  if (f.generator_degrees() != ring.chern_degrees())
    throw ProfileError("to_schubert: polynomial is not in the subbundle classes");
  if (!f.is_homogeneous())
    throw ArgumentError("to_schubert: polynomial is not homogeneous");
  std::vector<SchubertElement> images;
  for (int i = 1; i <= ring.k() + 1; ++i) images.push_back(chern_S(ring, i));
  return evaluate_poly(ring, f, images);
}

// Rank of each graded piece, degrees 0..top.
inline std::vector<long> poincare_dims(const GrassmannRing& ring) {
  std::vector<long> dims;
  for (long j = 0; j <= ring.top_degree(); ++j)
    dims.push_back(static_cast<long>(
        partitions_in_box(static_cast<int>(j), ring.rows(), ring.cols()).size()));
  return dims;
}

// Graded ranks of the polynomial ring on classes of degrees 1..k+1 (the
// stable point ring), degrees 0..bound.
inline std::vector<long> equivariant_point_dims(int k, int bound) {
  if (k < 0) throw ArgumentError("equivariant dims: k must be nonnegative");
  if (bound < 0) throw ArgumentError("equivariant dims: negative bound");
  std::vector<long> dims;
  for (int j = 0; j <= bound; ++j) dims.push_back(count_partitions_max_part(j, k + 1));
  return dims;
}

// Coefficient of the box class in a*b. Requires homogeneous inputs of
// complementary degrees; zero inputs pair to zero.
inline Rational duality_pair(const SchubertElement& a, const SchubertElement& b) {
  if (!(a.ring() == b.ring()))
    throw ProfileError("pairing: rings do not match");
  if (a.is_zero() || b.is_zero()) return 0;
  auto da = a.homogeneous_degree();
  auto db = b.homogeneous_degree();
  if (!da || !db)
    throw ArgumentError("pairing: inputs must be homogeneous");
  if (*da + *db != a.ring().top_degree())
    throw ArgumentError("pairing: degrees do not pair to the top degree");
  const Partition box = Partition::box(a.ring().rows(), a.ring().cols());
  return (a * b).coefficient(box);
}

}  // namespace chow
