#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "chow/errors.hpp"
#include "chow/graded_poly.hpp"
#include "chow/linalg.hpp"
#include "chow/schubert.hpp"

namespace chow {

class NonlinearRing;

namespace detail {

// Per-degree transport data: the monomial list in canonical (ascending
// lexicographic) order, the greedy independent subset whose images form the
// working basis, and that basis written in Schubert coordinates.
struct TransportTable {
  std::vector<ExponentVec> monomials;
  std::vector<Partition> partitions;   // Schubert coordinate labels
  std::vector<int> basis;              // indices into monomials
  RationalMatrix basis_matrix;         // #partitions rows x #basis columns
};

struct NonlinearCache {
  NonlinearCache(int k, int r) : grass(k, r) {}

  GrassmannRing grass;
  std::mutex mu;
  std::map<long, TransportTable> tables;
  std::optional<std::vector<GradedPolynomial>> relations;
};

}  // namespace detail

// Handle to the Chow ring of the space of degree-d maps from projective
// k-space to projective r-space, generated by classes s_1..s_{r-k} with
// deg(s_j) = j. Element arithmetic is transported through the graded
// isomorphism onto the Grassmannian ring which this handle carries along
// with its memo caches. Copies share the caches; handles with equal
// (k, r, d) are interchangeable.
class NonlinearRing {
 public:
  NonlinearRing(int k, int r, int d) : k_(k), r_(r), d_(d) {
    if (k < 1 || r < k) throw ArgumentError("ring: requires 1 <= k <= r");
    if (d < 1) throw ArgumentError("ring: requires d >= 1");
    cache_ = std::make_shared<detail::NonlinearCache>(k, r);
  }

  int k() const { return k_; }
  int r() const { return r_; }
  int d() const { return d_; }
  int num_generators() const { return r_ - k_; }
  long top_degree() const { return grassmannian().top_degree(); }

  const GrassmannRing& grassmannian() const { return cache_->grass; }

  // Degrees 1..r-k: the profile of polynomials in the generators.
  std::vector<int> s_degrees() const { return grassmannian().sigma_degrees(); }

  // The image of the monomial s^e picks up one factor d^{k+j} per generator:
  // d to the power sum_j e_j (k + j).
  Rational monomial_scale(const ExponentVec& e) const {
    unsigned weight = 0;
    for (std::size_t j = 0; j < e.size(); ++j)
      weight += static_cast<unsigned>(e[j]) * static_cast<unsigned>(k_ + 1 + j);
    return Rational(int_pow(Integer(d_), weight));
  }

  bool operator==(const NonlinearRing& rhs) const {
    return k_ == rhs.k_ && r_ == rhs.r_ && d_ == rhs.d_;
  }

  detail::NonlinearCache& cache() const { return *cache_; }

 private:
  int k_, r_, d_;
  std::shared_ptr<detail::NonlinearCache> cache_;
};

// Image of a single monomial: the matching product of special classes,
// scaled by the d power from monomial_scale.
inline SchubertElement lambda_monomial_image(const NonlinearRing& ring,
                                             const ExponentVec& e) {
  if (static_cast<int>(e.size()) != ring.num_generators())
    throw ArgumentError("transport: exponent vector has wrong length");
  const GrassmannRing& g = ring.grassmannian();
  SchubertElement img = SchubertElement::unit(g);
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] < 0) throw ArgumentError("transport: negative exponent");
    for (int rep = 0; rep < e[j]; ++rep)
      img = img * SchubertElement::sigma(g, static_cast<int>(j) + 1);
  }
  return img * ring.monomial_scale(e);
}

namespace detail {

inline RationalVec schubert_coords(const SchubertElement& x,
                                   const std::vector<Partition>& basis) {
  RationalVec v;
  v.reserve(basis.size());
  for (const auto& lam : basis) v.push_back(x.coefficient(lam));
  return v;
}

// Builds (or fetches) the transport table of one degree. The greedy scan
// keeps the first monomial, in canonical order, whose image is independent
// of the images already kept.
inline const TransportTable& transport_table(const NonlinearRing& ring, long degree) {
  auto& cache = ring.cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto it = cache.tables.find(degree);
  if (it != cache.tables.end()) return it->second;

  TransportTable table;
  table.monomials = homogeneous_exponents(ring.s_degrees(), degree);
  table.partitions = enumerate_partitions(ring.grassmannian(), static_cast<int>(degree));
  EchelonSpan span(static_cast<int>(table.partitions.size()));
  std::vector<RationalVec> kept;
  for (std::size_t idx = 0; idx < table.monomials.size(); ++idx) {
    RationalVec v = schubert_coords(lambda_monomial_image(ring, table.monomials[idx]),
                                    table.partitions);
    if (span.add(v)) {
      table.basis.push_back(static_cast<int>(idx));
      kept.push_back(std::move(v));
    }
  }
  table.basis_matrix.assign(table.partitions.size(), RationalVec(kept.size(), Rational(0)));
  for (std::size_t col = 0; col < kept.size(); ++col)
    for (std::size_t row = 0; row < table.partitions.size(); ++row)
      table.basis_matrix[row][col] = kept[col][row];
  return cache.tables.emplace(degree, std::move(table)).first->second;
}

}  // namespace detail

// Element of the nonlinear ring, stored in normal form: a combination of the
// per-degree basis monomials only. Raw monomial input is normalized through
// the transport on construction.
class NonlinearElement {
 public:
  using TermMap = std::map<ExponentVec, Rational>;

  explicit NonlinearElement(NonlinearRing ring) : ring_(std::move(ring)) {}

  static NonlinearElement unit(const NonlinearRing& ring) {
    NonlinearElement e(ring);
    e.terms_[ExponentVec(static_cast<std::size_t>(ring.num_generators()), 0)] = 1;
    return e;
  }

  // s_j for j in 1..r-k; the unit for j = 0.
  static NonlinearElement generator(const NonlinearRing& ring, int j) {
    if (j == 0) return unit(ring);
    if (j < 1 || j > ring.num_generators())
      throw ArgumentError("generator: index must lie in 0..r-k");
    NonlinearElement e(ring);
    ExponentVec exp(static_cast<std::size_t>(ring.num_generators()), 0);
    exp[static_cast<std::size_t>(j - 1)] = 1;
    e.terms_[std::move(exp)] = 1;
    return e;
  }

  static NonlinearElement from_monomials(const NonlinearRing& ring, const TermMap& raw);

  const NonlinearRing& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const ExponentVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  long monomial_degree(const ExponentVec& e) const {
    long d = 0;
    for (std::size_t j = 0; j < e.size(); ++j)
      d += static_cast<long>(e[j]) * static_cast<long>(j + 1);
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = monomial_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (monomial_degree(e) != d) return false;
    return true;
  }

  std::optional<long> homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return monomial_degree(terms_.begin()->first);
  }

  // Sums of normal forms are normal forms, so these need no re-transport.
  NonlinearElement& operator+=(const NonlinearElement& rhs) {
    check_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  NonlinearElement& operator-=(const NonlinearElement& rhs) {
    check_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  NonlinearElement& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [e, v] : terms_) v *= c;
    }
    return *this;
  }

  friend NonlinearElement operator+(NonlinearElement a, const NonlinearElement& b) {
    a += b;
    return a;
  }

  friend NonlinearElement operator-(NonlinearElement a, const NonlinearElement& b) {
    a -= b;
    return a;
  }

  friend NonlinearElement operator-(NonlinearElement a) {
    for (auto& [e, v] : a.terms_) v = -v;
    return a;
  }

  friend NonlinearElement operator*(NonlinearElement a, const Rational& c) {
    a *= c;
    return a;
  }

  friend NonlinearElement operator*(const Rational& c, NonlinearElement a) {
    a *= c;
    return a;
  }

  bool operator==(const NonlinearElement& rhs) const {
    return ring_ == rhs.ring_ && terms_ == rhs.terms_;
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

 private:
  void check_ring(const NonlinearElement& rhs) const {
    if (!(ring_ == rhs.ring_))
      throw ProfileError("element: rings do not match");
  }

  NonlinearRing ring_;
  TermMap terms_;
};

inline SchubertElement lambda_map(const NonlinearElement& x) {
  SchubertElement out(x.ring().grassmannian());
  for (const auto& [e, c] : x.terms()) out += c * lambda_monomial_image(x.ring(), e);
  return out;
}

// Preimage under the transport, written in the per-degree basis monomials.
// Defined for every element of the Grassmannian ring; a failed solve means a
// broken ring construction, not bad input.
inline NonlinearElement lambda_inverse(const SchubertElement& y,
                                       const NonlinearRing& ring) {
  if (!(y.ring() == ring.grassmannian()))
    throw ProfileError("transport: element lives on a different Grassmannian");
  NonlinearElement out(ring);
  std::map<long, SchubertElement> by_degree;
  for (const auto& [lam, c] : y.terms()) {
    auto [it, inserted] =
        by_degree.try_emplace(lam.size(), SchubertElement(y.ring()));
    it->second.add_term(lam, c);
  }
  for (const auto& [degree, part] : by_degree) {
    const detail::TransportTable& table = detail::transport_table(ring, degree);
    if (table.basis.empty())
      throw ConsistencyError("transport: no basis in degree " + std::to_string(degree));
    auto x = solve_unique(table.basis_matrix,
                          detail::schubert_coords(part, table.partitions));
    if (!x)
      throw ConsistencyError("transport: image basis failed to span in degree " +
                             std::to_string(degree));
    for (std::size_t col = 0; col < x->size(); ++col) {
      const Rational& c = (*x)[col];
      if (c != 0)
        out.add_term(table.monomials[static_cast<std::size_t>(
                         table.basis[col])],
                     c);
    }
  }
  return out;
}

inline NonlinearElement NonlinearElement::from_monomials(const NonlinearRing& ring,
                                                         const TermMap& raw) {
  SchubertElement img(ring.grassmannian());
  for (const auto& [e, c] : raw) img += c * lambda_monomial_image(ring, e);
  return lambda_inverse(img, ring);
}

// Product computed on the Grassmannian side and pulled back.
inline NonlinearElement nl_multiply(const NonlinearElement& a, const NonlinearElement& b) {
  if (!(a.ring() == b.ring()))
    throw ProfileError("multiply: rings do not match");
  return lambda_inverse(lambda_map(a) * lambda_map(b), a.ring());
}

inline NonlinearElement operator*(const NonlinearElement& a, const NonlinearElement& b) {
  return nl_multiply(a, b);
}

namespace detail {

// Relation generators among the special classes themselves (the d = 1 case),
// degree by degree: the kernel of monomial evaluation, modulo multiples of
// generators already found. Canonical kernel vectors keep coefficient +1 on
// the lexicographically largest monomial involved.
inline std::vector<GradedPolynomial> sigma_relation_generators(const GrassmannRing& g) {
  const std::vector<int> profile = g.sigma_degrees();
  std::vector<GradedPolynomial> rels;
  if (g.cols() == 0) return rels;
  std::vector<SchubertElement> gens;
  for (int j = 1; j <= g.cols(); ++j) gens.push_back(SchubertElement::sigma(g, j));
  for (long degree = 1; degree <= g.top_degree() + 1; ++degree) {
    const auto monos = homogeneous_exponents(profile, degree);
    const auto partitions = enumerate_partitions(g, static_cast<int>(degree));
    std::map<ExponentVec, int> col;
    for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = static_cast<int>(i);
    RationalMatrix a(partitions.size(), RationalVec(monos.size(), Rational(0)));
    for (std::size_t j = 0; j < monos.size(); ++j) {
      SchubertElement img =
          evaluate_poly(g, GradedPolynomial::monomial(profile, monos[j], 1), gens);
      for (std::size_t i = 0; i < partitions.size(); ++i)
        a[i][j] = img.coefficient(partitions[i]);
    }
    auto kernel = nullspace(std::move(a), static_cast<int>(monos.size()));
    EchelonSpan ideal(static_cast<int>(monos.size()));
    for (const auto& rel : rels) {
      long rel_degree = *rel.homogeneous_degree();
      for (const auto& e : homogeneous_exponents(profile, degree - rel_degree)) {
        GradedPolynomial mult = rel * GradedPolynomial::monomial(profile, e, 1);
        RationalVec v(monos.size(), Rational(0));
        for (const auto& [me, mc] : mult.terms())
          v[static_cast<std::size_t>(col.at(me))] = mc;
        ideal.add(std::move(v));
      }
    }
    for (const auto& v : kernel) {
      if (ideal.contains(v)) continue;
      GradedPolynomial rel = GradedPolynomial::zero(profile);
      for (std::size_t j = 0; j < monos.size(); ++j)
        if (v[j] != 0) rel += GradedPolynomial::monomial(profile, monos[j], v[j]);
      rels.push_back(std::move(rel));
      ideal.add(v);
    }
  }
  return rels;
}

}  // namespace detail

// Relation generators of the nonlinear ring presentation on s_1..s_{r-k}:
// the special-class relations rewritten through sigma_j = s_j / d^{k+j} and
// cleared to primitive integer coefficients. Cached per ring handle.
inline std::vector<GradedPolynomial> scaled_relations(const NonlinearRing& ring) {
  auto& cache = ring.cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    if (cache.relations) return *cache.relations;
  }
  std::vector<GradedPolynomial> rels =
      detail::sigma_relation_generators(ring.grassmannian());
  for (auto& rel : rels) {
    GradedPolynomial scaled = GradedPolynomial::zero(rel.generator_degrees());
    for (const auto& [e, c] : rel.terms()) {
      scaled += GradedPolynomial::monomial(rel.generator_degrees(), e,
                                           c / ring.monomial_scale(e));
    }
    rel = scaled.make_primitive();
  }
  std::lock_guard<std::mutex> lock(cache.mu);
  if (!cache.relations) cache.relations = std::move(rels);
  return *cache.relations;
}

inline std::vector<GradedPolynomial> scaled_relations(int k, int r, int d) {
  return scaled_relations(NonlinearRing(k, r, d));
}

// Graded ranks of the presentation Q[s_1..s_{r-k}] / (scaled relations) for
// degrees 0..top+1, computed from the relation generators alone.
inline std::vector<long> presentation_dims(const NonlinearRing& ring) {
  const std::vector<int> profile = ring.s_degrees();
  const auto rels = scaled_relations(ring);
  std::vector<long> dims;
  for (long degree = 0; degree <= ring.top_degree() + 1; ++degree) {
    const auto monos = homogeneous_exponents(profile, degree);
    std::map<ExponentVec, int> col;
    for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = static_cast<int>(i);
    EchelonSpan ideal(static_cast<int>(monos.size()));
    for (const auto& rel : rels) {
      long rel_degree = *rel.homogeneous_degree();
      if (rel_degree > degree) continue;
      for (const auto& e : homogeneous_exponents(profile, degree - rel_degree)) {
        GradedPolynomial mult = rel * GradedPolynomial::monomial(profile, e, 1);
        RationalVec v(monos.size(), Rational(0));
        for (const auto& [me, mc] : mult.terms())
          v[static_cast<std::size_t>(col.at(me))] = mc;
        ideal.add(std::move(v));
      }
    }
    dims.push_back(static_cast<long>(monos.size()) - ideal.rank());
  }
  return dims;
}

// Outcome of checking that pairwise products of special classes form a
// basis; the statement is specific to maps out of the projective line
// (k = 1), where the count r(r+1)/2 matches the total rank.
struct SigmaBasisReport {
  int r = 0;
  int d = 1;
  long product_count = 0;
  long independent_count = 0;
  long total_dim = 0;
  bool pass = false;
};

inline SigmaBasisReport verify_sigma_basis(int r, int d) {
  if (r < 1) throw ArgumentError("basis check: requires r >= 1");
  if (d < 1) throw ArgumentError("basis check: requires d >= 1");
  SigmaBasisReport report;
  report.r = r;
  report.d = d;
  GrassmannRing g(1, r);
  auto dims = poincare_dims(g);
  for (long n : dims) report.total_dim += n;
  // one image span per degree; products of different degrees are independent
  std::map<int, EchelonSpan> spans;
  const Rational dq(d);
  for (int b = 0; b <= r - 1; ++b) {
    for (int a = 0; a <= b; ++a) {
      ++report.product_count;
      SchubertElement img = SchubertElement::sigma(g, a) * SchubertElement::sigma(g, b);
      img *= Rational(int_pow(Integer(d), static_cast<unsigned>(2 + a + b)));
      const int degree = a + b;
      auto basis = enumerate_partitions(g, degree);
      auto [it, fresh] =
          spans.try_emplace(degree, static_cast<int>(basis.size()));
      if (it->second.add(detail::schubert_coords(img, basis)))
        ++report.independent_count;
    }
  }
  report.pass = report.independent_count == report.product_count &&
                report.product_count == report.total_dim;
  return report;
}

}  // namespace chow
