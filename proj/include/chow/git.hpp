#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chow/errors.hpp"
#include "chow/graded_poly.hpp"
#include "chow/linalg.hpp"
#include "chow/partition.hpp"

namespace chow {

// A tuple of r+1 forms of degree d in the k+1 coordinates, up to scale: the
// data of a rational map from projective k-space to projective r-space.
// Individual forms may vanish; the whole tuple may not.
class MapTuple {
 public:
  MapTuple(int k, int r, int d, std::vector<GradedPolynomial> forms)
      : k_(k), r_(r), d_(d), forms_(std::move(forms)) {
    if (k_ < 1) throw ArgumentError("map tuple: requires k >= 1");
    if (r_ < 1) throw ArgumentError("map tuple: requires r >= 1");
    if (d_ < 1) throw ArgumentError("map tuple: requires d >= 1");
    if (forms_.size() != static_cast<std::size_t>(r_) + 1)
      throw ArgumentError("map tuple: expected r+1 forms");
    const std::vector<int> profile = var_profile(k_);
    bool any = false;
    for (const auto& f : forms_) {
      if (f.generator_degrees() != profile)
        throw ProfileError("map tuple: form is not in the k+1 coordinates");
      if (!f.is_homogeneous_of_degree(d_))
        throw ArgumentError("map tuple: form is not homogeneous of degree d");
      if (!f.is_zero()) any = true;
    }
    if (!any) throw ArgumentError("map tuple: all forms vanish");
  }

  static std::vector<int> var_profile(int k) {
    return std::vector<int>(static_cast<std::size_t>(k) + 1, 1);
  }

  int k() const { return k_; }
  int r() const { return r_; }
  int d() const { return d_; }
  const std::vector<GradedPolynomial>& forms() const { return forms_; }

 private:
  int k_, r_, d_;
  std::vector<GradedPolynomial> forms_;
};

namespace detail {

// Deterministic helpers on top of the seeded engine; the standard
// distributions are not pinned down across implementations.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// ----- univariate polynomials over the rationals, for the k = 1 analysis --

using UniPoly = std::vector<Rational>;  // coefficient of x^i at index i

inline void uni_trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UniPoly uni_remainder(UniPoly a, const UniPoly& b) {
  uni_trim(a);
  while (uni_degree(a) >= uni_degree(b)) {
    Rational factor = a.back() / b.back();
    int shift = uni_degree(a) - uni_degree(b);
    for (int i = 0; i <= uni_degree(b); ++i)
      a[static_cast<std::size_t>(i + shift)] -= factor * b[static_cast<std::size_t>(i)];
    uni_trim(a);
  }
  return a;
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    UniPoly rem = uni_remainder(std::move(a), b);
    a = std::move(b);
    b = std::move(rem);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;  // monic normal form
  }
  return a;
}

// Evaluation with exact rational arithmetic.
inline Rational uni_eval(const UniPoly& p, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Divisors of |n| in increasing order, or empty when n is too large to
// factor by trial division within the bound.
inline std::vector<Integer> small_divisors(Integer n, const Integer& bound = Integer(1000000)) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  if (n == 0 || n > bound * bound) return out;
  for (Integer i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      if (i * i != n) out.push_back(n / i);
    }
    if (i > bound) return {};
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Rational roots of p, ascending. May return an empty list for coefficients
// too large to factor; that only weakens witness points, never correctness.
inline std::vector<Rational> rational_roots(const UniPoly& p) {
  std::vector<Rational> roots;
  if (p.empty()) return roots;
  // clear denominators to an integer polynomial
  Integer den_lcm = 1;
  for (const auto& c : p) den_lcm = boost::multiprecision::lcm(den_lcm, rational_den(c));
  std::vector<Integer> ip;
  for (const auto& c : p) ip.push_back(rational_num(c) * (den_lcm / rational_den(c)));
  while (!ip.empty() && ip.back() == 0) ip.pop_back();
  if (ip.size() <= 1) return roots;
  std::size_t low = 0;
  while (ip[low] == 0) ++low;  // x^low factor: root zero
  if (low > 0) roots.emplace_back(0);
  auto ps = small_divisors(ip[low]);
  auto qs = small_divisors(ip.back());
  if (ps.empty() || qs.empty()) return roots;
  std::set<Rational> found(roots.begin(), roots.end());
  for (const auto& pn : ps) {
    for (const auto& qn : qs) {
      for (int sign = -1; sign <= 1; sign += 2) {
        Rational cand = make_rational(sign * pn, qn);
        if (found.count(cand)) continue;
        if (uni_eval(p, cand) == 0) found.insert(cand);
      }
    }
  }
  return std::vector<Rational>(found.begin(), found.end());
}

struct BinarySplit {
  int v0_power = 0;  // shared power of the first coordinate
  int v1_power = 0;  // shared power of the second coordinate
  UniPoly core;      // dehomogenized remainder, nonzero constant term
};

inline BinarySplit split_binary_form(const GradedPolynomial& f) {
  BinarySplit out;
  if (f.is_zero()) return out;
  int min0 = -1, min1 = -1;
  for (const auto& [e, c] : f.terms()) {
    min0 = min0 < 0 ? e[0] : std::min(min0, e[0]);
    min1 = min1 < 0 ? e[1] : std::min(min1, e[1]);
  }
  out.v0_power = min0;
  out.v1_power = min1;
  long degree = *f.homogeneous_degree() - min0 - min1;
  out.core.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  for (const auto& [e, c] : f.terms())
    out.core[static_cast<std::size_t>(e[0] - min0)] = c;
  return out;
}

inline GradedPolynomial binary_from_split(int v0_power, int v1_power, const UniPoly& core,
                                          const std::vector<int>& profile) {
  GradedPolynomial out = GradedPolynomial::zero(profile);
  const int degree = uni_degree(core);
  for (int i = 0; i <= degree; ++i) {
    if (core[static_cast<std::size_t>(i)] == 0) continue;
    out += GradedPolynomial::monomial(
        profile, {v0_power + i, v1_power + degree - i}, core[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace detail

// Greatest common divisor of two binary forms (polynomials in two degree-1
// coordinates); the gcd of a form with zero is the form itself. Shared
// coordinate powers are split off, the cores are compared as univariate
// polynomials, and the result is rehomogenized with a monic core.
inline GradedPolynomial binary_form_gcd(const GradedPolynomial& f,
                                        const GradedPolynomial& g) {
  const std::vector<int> profile = MapTuple::var_profile(1);
  if (f.generator_degrees() != profile || g.generator_degrees() != profile)
    throw ProfileError("binary gcd: expected forms in two coordinates");
  if (!f.is_homogeneous() || !g.is_homogeneous())
    throw ArgumentError("binary gcd: inputs must be homogeneous");
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  auto sf = detail::split_binary_form(f);
  auto sg = detail::split_binary_form(g);
  detail::UniPoly core = detail::uni_gcd(sf.core, sg.core);
  return detail::binary_from_split(std::min(sf.v0_power, sg.v0_power),
                                   std::min(sf.v1_power, sg.v1_power), core, profile);
}

enum class BasepointKind { Free, Found, Undetermined };

struct BasepointResult {
  BasepointKind kind = BasepointKind::Undetermined;
  // a common zero in homogeneous coordinates, when one was pinned down
  std::optional<std::vector<Rational>> point;
  // k = 1 only: the nonconstant common divisor of the tuple
  std::optional<GradedPolynomial> common_divisor;
};

// Decides base locus emptiness. Exact for k = 1 via the binary form gcd.
// For k >= 2 the answer is one-sided: common zeros at coordinate points and
// at seeded sample points are found exactly, and anything else reports
// undetermined rather than free.
inline BasepointResult basepoint_free(const MapTuple& m, int samples = 32,
                                      std::uint64_t seed = 0x5eed) {
  BasepointResult result;
  if (m.k() == 1) {
    GradedPolynomial g = GradedPolynomial::zero(MapTuple::var_profile(1));
    for (const auto& f : m.forms()) g = binary_form_gcd(g, f);
    if (*g.homogeneous_degree() == 0) {
      result.kind = BasepointKind::Free;
      return result;
    }
    result.kind = BasepointKind::Found;
    result.common_divisor = g;
    auto split = detail::split_binary_form(g);
    if (split.v0_power > 0) {
      result.point = {Rational(0), Rational(1)};
    } else if (split.v1_power > 0) {
      result.point = {Rational(1), Rational(0)};
    } else {
      auto roots = detail::rational_roots(split.core);
      if (!roots.empty()) result.point = {roots.front(), Rational(1)};
    }
    return result;
  }
  auto vanishes_at = [&m](const std::vector<Rational>& pt) {
    for (const auto& f : m.forms())
      if (f.evaluate(pt) != 0) return false;
    return true;
  };
  const int n = m.k() + 1;
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
    e[static_cast<std::size_t>(j)] = 1;
    if (vanishes_at(e)) {
      result.kind = BasepointKind::Found;
      result.point = std::move(e);
      return result;
    }
  }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < samples; ++trial) {
    std::vector<Rational> pt;
    bool all_zero = true;
    for (int j = 0; j < n; ++j) {
      int v = detail::rand_int(rng, -9, 9);
      if (v != 0) all_zero = false;
      pt.emplace_back(v);
    }
    if (all_zero) continue;
    if (vanishes_at(pt)) {
      result.kind = BasepointKind::Found;
      result.point = std::move(pt);
      return result;
    }
  }
  result.kind = BasepointKind::Undetermined;
  return result;
}

// One coordinate of the linearized group action: the pairing w -> coeffs . w
// attached to a coordinate of the embedding that is nonzero at the tuple.
struct WeightFunctional {
  enum class Slot { DetUnit, Z, Sym };

  std::vector<long> coeffs;
  Slot slot = Slot::DetUnit;

  long value(const std::vector<int>& w) const {
    if (w.size() != coeffs.size())
      throw ArgumentError("functional: weight vector has wrong dimension");
    long acc = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * w[i];
    return acc;
  }

  bool operator==(const WeightFunctional& rhs) const = default;
};

// The list of weight functionals carried by the embedded tuple, one per
// nonzero coordinate class. Always contains the determinant functional
// (all-ones coefficients).
struct EmbeddedState {
  int k = 0;
  int q = 0;
  std::vector<WeightFunctional> functionals;
};

// Builds the weight state of the tuple embedded with twist parameter q:
// the determinant coordinate, one coordinate per monomial appearing in some
// form, and one per size-q multiset of appearing monomials. The multiset
// count is capped by the budget; exceeding it is an argument error since the
// enumeration is the practical limit of this finite model.
inline EmbeddedState embed_state(const MapTuple& m, int q, std::size_t budget = 100000) {
  if (q < 1) throw ArgumentError("embed: requires q >= 1");
  EmbeddedState state;
  state.k = m.k();
  state.q = q;
  const std::size_t n = static_cast<std::size_t>(m.k()) + 1;
  std::set<ExponentVec> support;
  for (const auto& f : m.forms())
    for (const auto& [e, c] : f.terms()) support.insert(e);
  std::vector<ExponentVec> alphas(support.begin(), support.end());
  Integer multisets = binomial(static_cast<int>(alphas.size()) + q - 1, q);
  if (multisets > Integer(budget))
    throw ArgumentError("embed: functional budget exceeded; " + multisets.str() +
                        " multisets requested, budget " + std::to_string(budget));
  std::map<std::vector<long>, WeightFunctional::Slot> seen;
  auto put = [&seen](std::vector<long> coeffs, WeightFunctional::Slot slot) {
    seen.try_emplace(std::move(coeffs), slot);  // first slot wins: det < z < sym
  };
  put(std::vector<long>(n, 1), WeightFunctional::Slot::DetUnit);
  for (const auto& alpha : alphas) {
    std::vector<long> coeffs(n, 1);
    for (std::size_t i = 0; i < n; ++i) coeffs[i] -= alpha[i];
    put(std::move(coeffs), WeightFunctional::Slot::Z);
  }
  std::vector<long> acc(n, 0);
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      std::vector<long> coeffs(n, 1);
      for (std::size_t i = 0; i < n; ++i) coeffs[i] -= acc[i];
      put(std::move(coeffs), WeightFunctional::Slot::Sym);
      return;
    }
    for (std::size_t idx = from; idx < alphas.size(); ++idx) {
      for (std::size_t i = 0; i < n; ++i) acc[i] += alphas[idx][i];
      self(self, idx, left - 1);
      for (std::size_t i = 0; i < n; ++i) acc[i] -= alphas[idx][i];
    }
  };
  rec(rec, 0, q);
  for (auto& [coeffs, slot] : seen)
    state.functionals.push_back(WeightFunctional{coeffs, slot});
  return state;
}

struct HMVerdict {
  bool positive = false;          // some functional is positive at w
  WeightFunctional best;          // the maximizer (first in order on ties)
  long value = 0;                 // its value
};

// Evaluates the numerical stability criterion at one weight vector: the
// verdict is positive iff the maximal functional value is.
inline HMVerdict hm_verdict(const EmbeddedState& state, const std::vector<int>& w) {
  if (state.functionals.empty())
    throw ArgumentError("verdict: empty state");
  if (w.size() != static_cast<std::size_t>(state.k) + 1)
    throw ArgumentError("verdict: weight vector has wrong dimension");
  if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; }))
    throw ArgumentError("verdict: weight vector is zero");
  HMVerdict verdict;
  bool first = true;
  for (const auto& fn : state.functionals) {
    long v = fn.value(w);
    if (first || v > verdict.value) {
      verdict.best = fn;
      verdict.value = v;
      first = false;
    }
  }
  verdict.positive = verdict.value > 0;
  return verdict;
}

// A closed-form positive functional for one weight vector, following the
// two-case dichotomy: the determinant coordinate when the total weight is
// positive, otherwise the q-th power of the pure-power coordinate at the
// most negative weight. The latter exists exactly when some form contains
// the d-th power of that coordinate; positivity is guaranteed only for
// q > k+1, so smaller q carries a warning flag.
struct ProofWitness {
  enum class Case { DetUnit, SymPower };

  bool success = false;
  Case taken = Case::DetUnit;
  WeightFunctional functional;
  long value = 0;
  int j = -1;                   // coordinate index in the SymPower case
  bool q_bound_warning = false;
  std::string failure;
};

inline ProofWitness proof_witness(const MapTuple& m, const std::vector<int>& w, int q) {
  if (q < 1) throw ArgumentError("witness: requires q >= 1");
  if (w.size() != static_cast<std::size_t>(m.k()) + 1)
    throw ArgumentError("witness: weight vector has wrong dimension");
  if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; }))
    throw ArgumentError("witness: weight vector is zero");
  ProofWitness out;
  out.q_bound_warning = q <= m.k() + 1;
  const std::size_t n = w.size();
  long total = 0;
  for (int x : w) total += x;
  if (total > 0) {
    out.success = true;
    out.taken = ProofWitness::Case::DetUnit;
    out.functional = {std::vector<long>(n, 1), WeightFunctional::Slot::DetUnit};
    out.value = total;
    return out;
  }
  int j = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (w[i] < w[static_cast<std::size_t>(j)]) j = static_cast<int>(i);
  out.j = j;
  out.taken = ProofWitness::Case::SymPower;
  ExponentVec pure(n, 0);
  pure[static_cast<std::size_t>(j)] = m.d();
  bool present = false;
  for (const auto& f : m.forms())
    if (f.coefficient(pure) != 0) present = true;
  if (!present) {
    out.failure = "no form contains the pure power of coordinate " + std::to_string(j) +
                  "; the tuple vanishes at that coordinate point";
    return out;
  }
  std::vector<long> coeffs(n, 1);
  coeffs[static_cast<std::size_t>(j)] -= static_cast<long>(q) * m.d();
  out.functional = {coeffs, WeightFunctional::Slot::Sym};
  out.value = out.functional.value(w);
  out.success = true;
  return out;
}

// Integer determinant by cofactor expansion; the matrices here are small.
inline Integer integer_det(const std::vector<std::vector<long>>& mat) {
  const std::size_t n = mat.size();
  for (const auto& row : mat)
    if (row.size() != n) throw ArgumentError("determinant: matrix is not square");
  if (n == 0) return 1;
  if (n == 1) return mat[0][0];
  Integer acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (mat[0][j] == 0) continue;
    std::vector<std::vector<long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long> row;
      for (std::size_t jj = 0; jj < n; ++jj)
        if (jj != j) row.push_back(mat[i][jj]);
      minor.push_back(std::move(row));
    }
    Integer term = Integer(mat[0][j]) * integer_det(minor);
    if (j % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

// Coordinate change v_i -> sum_j mat[i][j] v_j applied to every form.
inline MapTuple apply_basis_change(const MapTuple& m,
                                   const std::vector<std::vector<long>>& mat) {
  const std::size_t n = static_cast<std::size_t>(m.k()) + 1;
  if (mat.size() != n) throw ArgumentError("basis change: matrix has wrong size");
  if (integer_det(mat) == 0) throw ArgumentError("basis change: matrix is singular");
  const std::vector<int> profile = MapTuple::var_profile(m.k());
  std::vector<GradedPolynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    GradedPolynomial img = GradedPolynomial::zero(profile);
    for (std::size_t j = 0; j < n; ++j) {
      if (mat[i][j] == 0) continue;
      img += GradedPolynomial::generator(profile, static_cast<int>(j)) *
             Rational(mat[i][j]);
    }
    images.push_back(std::move(img));
  }
  std::vector<GradedPolynomial> forms;
  for (const auto& f : m.forms()) forms.push_back(f.substitute(images, profile));
  return MapTuple(m.k(), m.r(), m.d(), std::move(forms));
}

// An invertible integer matrix built from seeded elementary operations.
inline std::vector<std::vector<long>> random_unimodular(int n, std::mt19937_64& rng,
                                                        int ops = 8) {
  std::vector<std::vector<long>> mat(static_cast<std::size_t>(n),
                                     std::vector<long>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  if (n < 2) return mat;
  for (int t = 0; t < ops; ++t) {
    int kind = static_cast<int>(detail::rand_below(rng, 3));
    int i = detail::rand_int(rng, 0, n - 1);
    int j = detail::rand_int(rng, 0, n - 2);
    if (j >= i) ++j;  // j != i
    if (kind == 0) {
      int c = detail::rand_int(rng, 1, 2) * (detail::rand_below(rng, 2) ? 1 : -1);
      for (int col = 0; col < n; ++col)
        mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] +=
            c * mat[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)];
    } else if (kind == 1) {
      std::swap(mat[static_cast<std::size_t>(i)], mat[static_cast<std::size_t>(j)]);
    } else {
      for (int col = 0; col < n; ++col)
        mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] *= -1;
    }
  }
  return mat;
}

struct StabilityFailure {
  std::vector<int> w;
  std::optional<std::vector<std::vector<long>>> basis;  // set for transformed probes
  long max_value = 0;
};

struct StabilityReport {
  int q = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  long probes = 0;
  BasepointResult basepoint;
  std::vector<StabilityFailure> failures;

  bool stable_on_probes() const { return failures.empty(); }
};

// Probes the stability criterion over a finite family of one-parameter
// subgroups: the coordinate axes and all sign patterns, `samples` seeded
// random weight vectors, and the same family again after `samples` seeded
// invertible coordinate changes (which reach non-diagonal subgroups). A
// clean report says stable on these probes; it is evidence, not a proof.
inline StabilityReport torus_stable(const MapTuple& m, int q, int samples = 20,
                                    std::uint64_t seed = 0x5eed,
                                    std::size_t budget = 100000) {
  if (q <= m.k() + 1)
    throw ArgumentError("stability: requires q > k+1");
  if (samples < 0) throw ArgumentError("stability: negative sample count");
  StabilityReport report;
  report.q = q;
  report.samples = samples;
  report.seed = seed;
  report.basepoint = basepoint_free(m, samples == 0 ? 32 : samples, seed);
  if (report.basepoint.kind == BasepointKind::Found)
    throw ArgumentError("stability: tuple has a base point, the embedding is undefined");

  const int n = m.k() + 1;
  std::vector<std::vector<int>> probes;
  for (int j = 0; j < n; ++j) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    probes.push_back(e);
    e[static_cast<std::size_t>(j)] = -1;
    probes.push_back(e);
  }
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
    std::vector<int> w;
    for (int j = 0; j < n; ++j) w.push_back((bits >> j) & 1 ? 1 : -1);
    probes.push_back(std::move(w));
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < samples; ++t) {
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    bool all_zero = true;
    do {
      all_zero = true;
      for (int j = 0; j < n; ++j) {
        w[static_cast<std::size_t>(j)] = detail::rand_int(rng, -10, 10);
        if (w[static_cast<std::size_t>(j)] != 0) all_zero = false;
      }
    } while (all_zero);
    probes.push_back(std::move(w));
  }

  auto run_probes = [&](const MapTuple& tuple,
                        const std::optional<std::vector<std::vector<long>>>& basis) {
    EmbeddedState state = embed_state(tuple, q, budget);
    for (const auto& w : probes) {
      ++report.probes;
      HMVerdict verdict = hm_verdict(state, w);
      if (!verdict.positive)
        report.failures.push_back({w, basis, verdict.value});
    }
  };

  run_probes(m, std::nullopt);
  for (int t = 0; t < samples; ++t) {
    auto mat = random_unimodular(n, rng);
    run_probes(apply_basis_change(m, mat), mat);
  }
  return report;
}

// Seeded random tuple with integer coefficients in [-bound, bound]; retried
// until some form is nonzero.
inline MapTuple random_map_tuple(int k, int r, int d, std::mt19937_64& rng,
                                 int bound = 5) {
  if (bound < 1) throw ArgumentError("random tuple: bound must be positive");
  const std::vector<int> profile = MapTuple::var_profile(k);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<GradedPolynomial> forms;
    bool any = false;
    for (int l = 0; l <= r; ++l) {
      GradedPolynomial f = GradedPolynomial::zero(profile);
      for (const auto& e : homogeneous_exponents(profile, d)) {
        int c = detail::rand_int(rng, -bound, bound);
        if (c != 0) f += GradedPolynomial::monomial(profile, e, c);
      }
      if (!f.is_zero()) any = true;
      forms.push_back(std::move(f));
    }
    if (any) return MapTuple(k, r, d, std::move(forms));
  }
  throw ConsistencyError("random tuple: sampling kept producing zero tuples");
}

// Seeded random base-point-free tuple. Only k = 1 is supported, where the
// gcd test is exact.
inline MapTuple random_basepoint_free_tuple(int r, int d, std::mt19937_64& rng,
                                            int bound = 5) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    MapTuple m = random_map_tuple(1, r, d, rng, bound);
    if (basepoint_free(m).kind == BasepointKind::Free) return m;
  }
  throw ConsistencyError("random tuple: no base-point-free tuple found");
}

}  // namespace chow
