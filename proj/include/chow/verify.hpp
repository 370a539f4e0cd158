#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chow/git.hpp"
#include "chow/nonlinear.hpp"
#include "chow/projbundle.hpp"
#include "chow/schubert.hpp"

namespace chow {

struct CheckCase {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckCase> cases;
  std::uint64_t seed = 0;
  bool seeded = false;

  bool passed() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return !cases.empty();
  }
};

namespace detail {

inline void record(SuiteReport& report, std::string label, bool pass,
                   std::string detail = "") {
  report.cases.push_back({std::move(label), pass, std::move(detail)});
}

}  // namespace detail

// The inverse-series identity behind the fiber classes: with c_0 = 1, the
// recursively defined p_j satisfy (sum c_i) * (sum p_j) = 1 through the
// requested order.
inline SuiteReport verify_series(int max_k = 3, int order = 12) {
  if (max_k < 1 || order < 1) throw ArgumentError("verify: bad series bounds");
  SuiteReport report;
  report.suite = "series";
  for (int k = 1; k <= max_k; ++k) {
    std::vector<int> degrees;
    for (int i = 1; i <= k + 1; ++i) degrees.push_back(i);
    std::vector<GradedPolynomial> c_coeffs{GradedPolynomial::one(degrees)};
    for (int i = 1; i <= order; ++i)
      c_coeffs.push_back(i <= k + 1 ? GradedPolynomial::generator(degrees, i - 1)
                                    : GradedPolynomial::zero(degrees));
    TruncatedSeries c(order, c_coeffs);
    TruncatedSeries p = series_inverse(c, order);
    bool ok = truncated_mul(c, p, order) == TruncatedSeries::one(degrees, order);
    PClassTable table(k);
    for (int j = 0; j <= order && ok; ++j) {
      ok = ok && p.coeff(j) == table.p(j);
      ok = ok && p.coeff(j).is_homogeneous_of_degree(j);
    }
    detail::record(report, "inverse series matches the recursion, k = " + std::to_string(k),
                   ok, "order " + std::to_string(order));
  }
  return report;
}

// The scaled relation lists: every generator maps to zero under the scaled
// substitution into classes, coefficients are primitive integers, and the
// small frozen lists come out exactly.
inline SuiteReport verify_relations(int max_r = 5, int max_d = 3) {
  if (max_r < 2 || max_d < 1) throw ArgumentError("verify: bad relation bounds");
  SuiteReport report;
  report.suite = "relations";
  for (int r = 2; r <= max_r; ++r) {
    for (int d = 1; d <= max_d; ++d) {
      NonlinearRing ring(1, r, d);
      const GrassmannRing& g = ring.grassmannian();
      std::vector<SchubertElement> images;
      for (int j = 1; j <= ring.num_generators(); ++j)
        images.push_back(Rational(int_pow(Integer(d), static_cast<unsigned>(1 + j))) *
                         SchubertElement::sigma(g, j));
      const auto& rels = scaled_relations(ring);
      bool ok = !rels.empty();
      for (const auto& rel : rels) {
        ok = ok && evaluate_poly(g, rel, images).is_zero();
        for (const auto& [e, c] : rel.terms())
          ok = ok && rational_den(c) == 1;
      }
      detail::record(report,
                     "relations vanish in the class ring, (1," + std::to_string(r) +
                         "," + std::to_string(d) + ")",
                     ok, std::to_string(rels.size()) + " generators");
    }
  }
  {
    NonlinearRing ring(1, 3, 2);
    const auto& rels = scaled_relations(ring);
    const auto profile = ring.s_degrees();
    GradedPolynomial s1 = GradedPolynomial::generator(profile, 0);
    GradedPolynomial s2 = GradedPolynomial::generator(profile, 1);
    bool ok = rels.size() == 2 && rels[0] == s1.pow(3) - s1 * s2 * Rational(4) &&
              rels[1] == s1.pow(2) * s2 - s2.pow(2) * Rational(2);
    detail::record(report, "frozen list for (1,3,2)", ok);
  }
  return report;
}

// Complementary-degree pairing: against the canonical bases the pairing
// matrix is the permutation sending each partition to its box complement.
inline SuiteReport verify_duality(int max_k = 2, int max_r = 5) {
  if (max_k < 1 || max_r < 1) throw ArgumentError("verify: bad duality bounds");
  SuiteReport report;
  report.suite = "duality";
  for (int k = 0; k <= max_k; ++k) {
    for (int r = k; r <= max_r; ++r) {
      GrassmannRing g(k, r);
      bool ok = true;
      for (int deg = 0; deg <= g.top_degree(); ++deg) {
        auto low = enumerate_partitions(g, deg);
        auto high = enumerate_partitions(g, g.top_degree() - deg);
        for (const auto& lam : low) {
          Partition comp = box_complement(lam, g.rows(), g.cols());
          for (const auto& mu : high) {
            Rational got = duality_pair(SchubertElement::sigma(g, lam),
                                        SchubertElement::sigma(g, mu));
            ok = ok && got == (mu == comp ? Rational(1) : Rational(0));
          }
        }
      }
      detail::record(report,
                     "pairing is the complement permutation, (" + std::to_string(k) +
                         "," + std::to_string(r) + ")",
                     ok);
    }
  }
  return report;
}

// Fiber integration: the push to the base of every power of the relative
// hyperplane class equals the matching fiber class.
inline SuiteReport verify_pushforward(int max_k = 2, int max_n = 6) {
  if (max_k < 1 || max_n < 1) throw ArgumentError("verify: bad pushforward bounds");
  SuiteReport report;
  report.suite = "pushforward";
  for (int k = 1; k <= max_k; ++k) {
    for (int n = k; n <= max_n; ++n) {
      GrassmannRing g(k, n);
      bool ok = true;
      for (int l = 0; l <= n + 3; ++l) {
        SchubertElement got = pushforward(XiPolynomial::xi_power(g, l));
        SchubertElement want =
            l < k ? SchubertElement(g)
                  : to_schubert(g, g.cache().pclass.p(l - k));
        ok = ok && got == want;
      }
      detail::record(report,
                     "hyperplane powers push to fiber classes, (" + std::to_string(k) +
                         "," + std::to_string(n) + ")",
                     ok);
    }
  }
  return report;
}

// The scaled push-forward: the degree-d twist contributes an exact power of
// d next to the fiber class.
inline SuiteReport verify_scaled_pushforward(int max_k = 2, int max_r = 4,
                                             int max_d = 3, int max_alpha = 3) {
  if (max_k < 1 || max_r < 1 || max_d < 1 || max_alpha < 0)
    throw ArgumentError("verify: bad scaled pushforward bounds");
  SuiteReport report;
  report.suite = "scaled-pushforward";
  for (int k = 1; k <= max_k; ++k) {
    for (int r = std::max(1, k); r <= max_r; ++r) {
      bool ok = true;
      for (int d = 1; d <= max_d; ++d) {
        for (int alpha = 0; alpha <= max_alpha; ++alpha) {
          GrassmannRing ambient(k, r + alpha + 2);
          Rational scale(int_pow(Integer(d), static_cast<unsigned>(r + 1 + alpha)));
          SchubertElement want =
              scale * to_schubert(ambient, ambient.cache().pclass.p(r - k + 1 + alpha));
          ok = ok && bilt_pushforward(ambient, r, d, alpha) == want;
        }
      }
      detail::record(report,
                     "twisted powers scale by d, (" + std::to_string(k) + "," +
                         std::to_string(r) + ")",
                     ok);
    }
  }
  return report;
}

// The transported ring map: generator scaling, multiplicativity on all basis
// pairs, and seeded round trips through the class ring.
inline SuiteReport verify_lambda_iso(int k = 2, int r = 4, int d = 3,
                                     int roundtrips = 100,
                                     std::uint64_t seed = 20250822) {
  if (roundtrips < 1) throw ArgumentError("verify: bad roundtrip count");
  SuiteReport report;
  report.suite = "lambda";
  report.seed = seed;
  report.seeded = true;
  NonlinearRing ring(k, r, d);
  GrassmannRing g = ring.grassmannian();

  bool ok = lambda_map(NonlinearElement::unit(ring)) == SchubertElement::unit(g);
  for (int j = 1; j <= ring.num_generators(); ++j) {
    Rational scale(int_pow(Integer(d), static_cast<unsigned>(k + j)));
    ok = ok && lambda_map(NonlinearElement::generator(ring, j)) ==
                   scale * SchubertElement::sigma(g, j);
  }
  detail::record(report, "generators scale by d to the weight", ok);

  bool mult = true;
  std::vector<NonlinearElement> basis{NonlinearElement::unit(ring)};
  for (int deg = 1; deg <= ring.top_degree(); ++deg) {
    const auto& table = detail::transport_table(ring, deg);
    for (std::size_t idx : table.basis)
      basis.push_back(NonlinearElement::from_monomials(
          ring, {{table.monomials[idx], Rational(1)}}));
  }
  for (const auto& a : basis)
    for (const auto& b : basis)
      mult = mult && lambda_map(nl_multiply(a, b)) == lambda_map(a) * lambda_map(b);
  detail::record(report, "transport is multiplicative on all basis pairs", mult,
                 std::to_string(basis.size() * basis.size()) + " products");

  bool dims = true;
  auto expect = poincare_dims(g);
  expect.push_back(0);
  dims = presentation_dims(ring) == expect;
  detail::record(report, "presentation dimensions match the class ring", dims);

  std::mt19937_64 rng(seed);
  bool trips = true;
  for (int t = 0; t < roundtrips; ++t) {
    NonlinearElement x(ring);
    for (int picks = 0; picks < 4; ++picks) {
      const auto& elem = basis[detail::rand_below(rng, basis.size())];
      int num = detail::rand_int(rng, -9, 9);
      int den = detail::rand_int(rng, 1, 4);
      x += elem * make_rational(num, den);
    }
    trips = trips && lambda_inverse(lambda_map(x), ring) == x;
  }
  detail::record(report, "seeded round trips recover every element", trips,
                 std::to_string(roundtrips) + " trips");
  return report;
}

// The monomial scaling law on products of generators.
inline SuiteReport verify_scaling_law(int max_k = 2, int max_r = 4, int max_d = 3) {
  if (max_k < 1 || max_r < 1 || max_d < 1)
    throw ArgumentError("verify: bad scaling bounds");
  SuiteReport report;
  report.suite = "scaling";
  for (int k = 1; k <= max_k; ++k) {
    for (int r = k + 1; r <= max_r; ++r) {
      for (int d = 1; d <= max_d; ++d) {
        NonlinearRing ring(k, r, d);
        GrassmannRing g = ring.grassmannian();
        bool ok = true;
        int m = ring.num_generators();
        for (int a = 1; a <= m; ++a) {
          for (int b = a; b <= m; ++b) {
            Rational scale(
                int_pow(Integer(d), static_cast<unsigned>(2 * k + a + b)));
            SchubertElement want = scale * (SchubertElement::sigma(g, a) *
                                            SchubertElement::sigma(g, b));
            SchubertElement got = lambda_map(
                nl_multiply(NonlinearElement::generator(ring, a),
                            NonlinearElement::generator(ring, b)));
            ok = ok && got == want;
          }
        }
        detail::record(report,
                       "pair products scale by the summed weights, (" +
                           std::to_string(k) + "," + std::to_string(r) + "," +
                           std::to_string(d) + ")",
                       ok);
      }
    }
  }
  return report;
}

// Independence of the scaled class products over the line case.
inline SuiteReport verify_sigma_basis_range(int max_r = 5, int max_d = 3) {
  if (max_r < 1 || max_d < 1) throw ArgumentError("verify: bad basis bounds");
  SuiteReport report;
  report.suite = "basis";
  for (int r = 1; r <= max_r; ++r) {
    for (int d = 1; d <= max_d; ++d) {
      SigmaBasisReport rep = verify_sigma_basis(r, d);
      detail::record(report,
                     "scaled products stay independent, r = " + std::to_string(r) +
                         ", d = " + std::to_string(d),
                     rep.pass,
                     std::to_string(rep.independent_count) + " of " +
                         std::to_string(rep.total_dim) + " dimensions");
    }
  }
  return report;
}

// Weight arithmetic for the group action: the closed-form witness agrees
// with the enumerated verdict, the boundary twist degenerates to zero, and
// seeded base-point-free tuples pass every probe.
inline SuiteReport verify_git_suite(int max_d = 3, int tuples = 25, int samples = 20,
                                    std::uint64_t seed = 20250822) {
  if (max_d < 1 || tuples < 1 || samples < 1)
    throw ArgumentError("verify: bad stability bounds");
  SuiteReport report;
  report.suite = "git";
  report.seed = seed;
  report.seeded = true;
  const auto profile = MapTuple::var_profile(1);
  GradedPolynomial S = GradedPolynomial::generator(profile, 0);
  GradedPolynomial T = GradedPolynomial::generator(profile, 1);

  {
    MapTuple pencil(1, 1, 1, {S, T});
    auto pw = proof_witness(pencil, {-1, -1}, 2);
    bool ok = pw.success && pw.value == 0 && pw.q_bound_warning;
    auto verdict = hm_verdict(embed_state(pencil, 2), {-1, -1});
    ok = ok && !verdict.positive && verdict.value == 0;
    detail::record(report, "boundary twist degenerates to exactly zero", ok);
  }
  {
    MapTuple based(1, 1, 2, {S * S, S * T});
    auto pw = proof_witness(based, {0, -1}, 4);
    bool ok = !pw.success && pw.j == 1;
    ok = ok && basepoint_free(based).kind == BasepointKind::Found;
    detail::record(report, "coordinate base point defeats the witness", ok);
  }
  {
    std::mt19937_64 rng(seed);
    bool ok = true;
    long checked = 0;
    for (int t = 0; t < tuples; ++t) {
      int r = 1 + t % 3;
      int d = 1 + t % max_d;
      MapTuple m = random_basepoint_free_tuple(r, d, rng);
      int q = 3;
      EmbeddedState state = embed_state(m, q);
      for (int probe = 0; probe < samples; ++probe) {
        std::vector<int> w(2, 0);
        do {
          w[0] = detail::rand_int(rng, -10, 10);
          w[1] = detail::rand_int(rng, -10, 10);
        } while (w[0] == 0 && w[1] == 0);
        auto pw = proof_witness(m, w, q);
        auto verdict = hm_verdict(state, w);
        ok = ok && pw.success && pw.value > 0 && verdict.positive &&
             verdict.value >= pw.value;
        ++checked;
      }
    }
    detail::record(report, "seeded free tuples pass the witness dichotomy", ok,
                   std::to_string(checked) + " probes");
  }
  {
    std::mt19937_64 rng(seed + 1);
    bool ok = true;
    for (int t = 0; t < std::max(1, tuples / 5); ++t) {
      MapTuple m = random_basepoint_free_tuple(2, 2, rng);
      StabilityReport rep = torus_stable(m, 4, samples / 2, seed + t);
      ok = ok && rep.stable_on_probes();
    }
    detail::record(report, "probed stability survives coordinate changes", ok);
  }
  return report;
}

}  // namespace chow
