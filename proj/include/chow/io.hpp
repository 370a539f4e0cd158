#pragma once

#include <cctype>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "chow/errors.hpp"
#include "chow/git.hpp"
#include "chow/graded_poly.hpp"
#include "chow/nonlinear.hpp"
#include "chow/schubert.hpp"
#include "chow/verify.hpp"

namespace chow {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// text rendering

using NameFn = std::function<std::string(std::size_t)>;

inline std::string s_name(std::size_t i) { return "s" + std::to_string(i + 1); }
inline std::string v_name(std::size_t i) { return "v" + std::to_string(i); }

inline std::string monomial_text(const ExponentVec& e, const NameFn& name = s_name) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += name(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

namespace detail {

inline std::string combine_terms(const std::vector<std::pair<std::string, Rational>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : terms) {
    const bool negative = coeff < 0;
    Rational mag = negative ? Rational(-coeff) : coeff;
    std::string body =
        mono == "1" ? rational_to_string(mag)
                    : (mag == 1 ? mono : rational_to_string(mag) + "*" + mono);
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace detail

namespace detail {

// Display order: total degree ascending, ties with the earlier generators'
// powers first.
inline std::vector<std::pair<ExponentVec, Rational>> display_terms(
    const GradedPolynomial::TermMap& terms, const std::vector<int>& degrees) {
  std::vector<std::pair<ExponentVec, Rational>> out(terms.begin(), terms.end());
  auto weight = [&degrees](const ExponentVec& e) {
    long acc = 0;
    for (std::size_t i = 0; i < e.size(); ++i) acc += static_cast<long>(e[i]) * degrees[i];
    return acc;
  };
  std::sort(out.begin(), out.end(), [&weight](const auto& a, const auto& b) {
    long wa = weight(a.first), wb = weight(b.first);
    if (wa != wb) return wa < wb;
    return a.first > b.first;
  });
  return out;
}

}  // namespace detail

inline std::string poly_to_text(const GradedPolynomial& f, const NameFn& name = s_name) {
  std::vector<std::pair<std::string, Rational>> parts;
  for (const auto& [e, c] : detail::display_terms(f.terms(), f.generator_degrees()))
    parts.emplace_back(monomial_text(e, name), c);
  return detail::combine_terms(parts);
}

inline std::string partition_text(const Partition& lam) {
  std::string out = "sigma[";
  for (std::size_t i = 0; i < lam.parts().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(lam.parts()[i]);
  }
  return out + "]";
}

inline std::string schubert_to_text(const SchubertElement& x) {
  std::vector<std::pair<std::string, Rational>> parts;
  for (const auto& [lam, c] : x.terms())
    parts.emplace_back(lam.empty() ? "1" : partition_text(lam), c);
  return detail::combine_terms(parts);
}

inline std::string nonlinear_to_text(const NonlinearElement& x) {
  std::vector<std::pair<std::string, Rational>> parts;
  for (const auto& [e, c] : detail::display_terms(x.terms(), x.ring().s_degrees()))
    parts.emplace_back(monomial_text(e), c);
  return detail::combine_terms(parts);
}

// ---------------------------------------------------------------------------
// JSON helpers

namespace detail {

inline void expect_object(const Json& j, const char* what) {
  if (!j.is_object())
    throw ArgumentError(std::string(what) + ": expected a JSON object");
}

inline void expect_array(const Json& j, const char* what) {
  if (!j.is_array())
    throw ArgumentError(std::string(what) + ": expected a JSON array");
}

inline void check_keys(const Json& j, std::initializer_list<const char*> required,
                       std::initializer_list<const char*> optional, const char* what) {
  expect_object(j, what);
  for (const char* key : required)
    if (!j.contains(key))
      throw ArgumentError(std::string(what) + ": missing key \"" + key + "\"");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    bool known = false;
    for (const char* k : required) known = known || key == k;
    for (const char* k : optional) known = known || key == k;
    if (!known)
      throw ArgumentError(std::string(what) + ": unknown key \"" + key + "\"");
  }
}

inline long long expect_integer(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw ArgumentError(std::string(what) + ": expected an integer");
  return j.get<long long>();
}

inline int expect_small_int(const Json& j, const char* what) {
  long long v = expect_integer(j, what);
  if (v < -1000000 || v > 1000000)
    throw ArgumentError(std::string(what) + ": integer out of range");
  return static_cast<int>(v);
}

}  // namespace detail

inline Json rational_to_json(const Rational& q) { return rational_to_string(q); }

inline Rational json_to_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ArgumentError("rational: expected an integer or a \"num/den\" string");
}

inline Json poly_to_json(const GradedPolynomial& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms())
    out.push_back(Json{{"exponents", e}, {"coeff", rational_to_json(c)}});
  return out;
}

inline GradedPolynomial json_to_poly(const Json& j, const std::vector<int>& degrees) {
  detail::expect_array(j, "polynomial");
  GradedPolynomial out = GradedPolynomial::zero(degrees);
  for (const Json& entry : j) {
    detail::check_keys(entry, {"exponents", "coeff"}, {}, "polynomial term");
    detail::expect_array(entry["exponents"], "polynomial exponents");
    ExponentVec e;
    for (const Json& x : entry["exponents"]) {
      int v = detail::expect_small_int(x, "polynomial exponent");
      if (v < 0) throw ArgumentError("polynomial: negative exponent");
      e.push_back(v);
    }
    if (e.size() != degrees.size())
      throw ArgumentError("polynomial: exponent vector has wrong length");
    out += GradedPolynomial::monomial(degrees, e, json_to_rational(entry["coeff"]));
  }
  return out;
}

inline Json schubert_to_json(const SchubertElement& x) {
  Json terms = Json::array();
  for (const auto& [lam, c] : x.terms())
    terms.push_back(Json{{"partition", lam.parts()}, {"coeff", rational_to_json(c)}});
  return Json{{"k", x.ring().k()}, {"r", x.ring().r()}, {"terms", terms}};
}

inline SchubertElement json_to_schubert(const Json& j) {
  detail::check_keys(j, {"k", "r", "terms"}, {"d"}, "class element");
  if (j.contains("d") && detail::expect_integer(j["d"], "class element d") != 1)
    throw ArgumentError("class element: only d = 1 carries plain classes");
  GrassmannRing ring(detail::expect_small_int(j["k"], "class element k"),
                     detail::expect_small_int(j["r"], "class element r"));
  detail::expect_array(j["terms"], "class element terms");
  SchubertElement::TermMap terms;
  for (const Json& entry : j["terms"]) {
    detail::check_keys(entry, {"partition", "coeff"}, {}, "class term");
    detail::expect_array(entry["partition"], "class term partition");
    std::vector<int> parts;
    for (const Json& x : entry["partition"])
      parts.push_back(detail::expect_small_int(x, "class term part"));
    Partition lam(parts);
    if (!lam.fits_box(ring.rows(), ring.cols()))
      throw ArgumentError("class element: partition does not fit the ring");
    terms[lam] += json_to_rational(entry["coeff"]);
  }
  return SchubertElement::from_terms(ring, terms);
}

// Monomials in the nonlinear generators travel as sorted 1-based index lists
// with multiplicity, so s1^2*s2 is [1, 1, 2].
inline std::vector<int> exponents_to_indices(const ExponentVec& e) {
  std::vector<int> idx;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int t = 0; t < e[i]; ++t) idx.push_back(static_cast<int>(i) + 1);
  return idx;
}

inline ExponentVec indices_to_exponents(const std::vector<int>& idx, int num_generators) {
  ExponentVec e(static_cast<std::size_t>(num_generators), 0);
  for (int i : idx) {
    if (i < 1 || i > num_generators)
      throw ArgumentError("monomial: generator index out of range");
    ++e[static_cast<std::size_t>(i - 1)];
  }
  return e;
}

inline Json nonlinear_to_json(const NonlinearElement& x) {
  Json terms = Json::array();
  for (const auto& [e, c] : x.terms())
    terms.push_back(
        Json{{"monomial", exponents_to_indices(e)}, {"coeff", rational_to_json(c)}});
  return Json{{"k", x.ring().k()},
              {"r", x.ring().r()},
              {"d", x.ring().d()},
              {"terms", terms}};
}

inline NonlinearElement json_to_nonlinear(const Json& j) {
  detail::check_keys(j, {"k", "r", "d", "terms"}, {}, "moduli element");
  NonlinearRing ring(detail::expect_small_int(j["k"], "moduli element k"),
                     detail::expect_small_int(j["r"], "moduli element r"),
                     detail::expect_small_int(j["d"], "moduli element d"));
  detail::expect_array(j["terms"], "moduli element terms");
  NonlinearElement::TermMap terms;
  for (const Json& entry : j["terms"]) {
    detail::check_keys(entry, {"monomial", "coeff"}, {}, "moduli term");
    detail::expect_array(entry["monomial"], "moduli term monomial");
    std::vector<int> idx;
    for (const Json& x : entry["monomial"])
      idx.push_back(detail::expect_small_int(x, "moduli term index"));
    terms[indices_to_exponents(idx, ring.num_generators())] +=
        json_to_rational(entry["coeff"]);
  }
  return NonlinearElement::from_monomials(ring, terms);
}

inline Json map_tuple_to_json(const MapTuple& m) {
  Json forms = Json::array();
  for (const auto& f : m.forms()) forms.push_back(poly_to_json(f));
  return Json{{"k", m.k()}, {"r", m.r()}, {"d", m.d()}, {"forms", forms}};
}

inline MapTuple json_to_map_tuple(const Json& j) {
  detail::check_keys(j, {"k", "r", "d", "forms"}, {}, "map tuple");
  int k = detail::expect_small_int(j["k"], "map tuple k");
  if (k < 1) throw ArgumentError("map tuple: requires k >= 1");
  detail::expect_array(j["forms"], "map tuple forms");
  std::vector<GradedPolynomial> forms;
  for (const Json& f : j["forms"])
    forms.push_back(json_to_poly(f, MapTuple::var_profile(k)));
  return MapTuple(k, detail::expect_small_int(j["r"], "map tuple r"),
                  detail::expect_small_int(j["d"], "map tuple d"), std::move(forms));
}

// ---------------------------------------------------------------------------
// report serialization

inline Json functional_to_json(const WeightFunctional& fn) {
  const char* slot = fn.slot == WeightFunctional::Slot::DetUnit ? "det"
                     : fn.slot == WeightFunctional::Slot::Z     ? "z"
                                                                : "sym";
  return Json{{"coeffs", fn.coeffs}, {"slot", slot}};
}

inline Json verdict_to_json(const HMVerdict& v) {
  return Json{{"positive", v.positive},
              {"value", v.value},
              {"best", functional_to_json(v.best)}};
}

inline Json witness_to_json(const ProofWitness& w) {
  Json out{{"success", w.success},
           {"case", w.taken == ProofWitness::Case::DetUnit ? "det" : "sym-power"},
           {"q_bound_warning", w.q_bound_warning}};
  if (w.success) {
    out["functional"] = functional_to_json(w.functional);
    out["value"] = w.value;
  } else {
    out["failure"] = w.failure;
  }
  if (w.j >= 0) out["coordinate"] = w.j;
  return out;
}

inline Json basepoint_to_json(const BasepointResult& b) {
  Json out{{"kind", b.kind == BasepointKind::Free    ? "free"
                    : b.kind == BasepointKind::Found ? "found"
                                                     : "undetermined"}};
  if (b.point.has_value()) {
    Json pt = Json::array();
    for (const auto& c : *b.point) pt.push_back(rational_to_json(c));
    out["point"] = pt;
  }
  if (b.common_divisor.has_value()) {
    out["common_divisor"] = poly_to_json(*b.common_divisor);
    out["common_divisor_text"] = poly_to_text(*b.common_divisor, v_name);
  }
  return out;
}

inline Json stability_to_json(const StabilityReport& rep) {
  Json failures = Json::array();
  for (const auto& f : rep.failures) {
    Json entry{{"w", f.w}, {"max_value", f.max_value}};
    if (f.basis.has_value()) entry["basis"] = *f.basis;
    failures.push_back(entry);
  }
  return Json{{"stable_on_probes", rep.stable_on_probes()},
              {"q", rep.q},
              {"samples", rep.samples},
              {"seed", rep.seed},
              {"probes", rep.probes},
              {"basepoint", basepoint_to_json(rep.basepoint)},
              {"failures", failures}};
}

inline Json suite_to_json(const SuiteReport& rep) {
  Json cases = Json::array();
  for (const auto& c : rep.cases) {
    Json entry{{"label", c.label}, {"pass", c.pass}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    cases.push_back(entry);
  }
  Json out{{"suite", rep.suite}, {"passed", rep.passed()}, {"cases", cases}};
  if (rep.seeded) out["seed"] = rep.seed;
  return out;
}

inline std::string suite_to_text(const SuiteReport& rep) {
  std::string out = "suite " + rep.suite +
                    (rep.seeded ? " (seed " + std::to_string(rep.seed) + ")" : "") + "\n";
  for (const auto& c : rep.cases) {
    out += std::string(c.pass ? "  [PASS] " : "  [FAIL] ") + c.label;
    if (!c.detail.empty()) out += " (" + c.detail + ")";
    out += "\n";
  }
  out += rep.passed() ? "all checks passed\n" : "some checks FAILED\n";
  return out;
}

inline Json sigma_basis_to_json(const SigmaBasisReport& rep) {
  return Json{{"r", rep.r},
              {"d", rep.d},
              {"product_count", rep.product_count},
              {"independent_count", rep.independent_count},
              {"total_dim", rep.total_dim},
              {"pass", rep.pass}};
}

// ---------------------------------------------------------------------------
// expression parsing

namespace detail {

// Recursive descent over sums, products, and powers of the generators
// s1..sm, with integer or a/b rational literals and parentheses.
class ExprParser {
 public:
  ExprParser(const std::string& text, const std::vector<int>& degrees)
      : text_(text), degrees_(degrees) {}

  GradedPolynomial run() {
    GradedPolynomial out = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return out;
  }

 private:
  GradedPolynomial parse_sum() {
    skip_ws();
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = text_[pos_++] == '-';
    GradedPolynomial acc = parse_product();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      GradedPolynomial rhs = parse_product();
      if (c == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
  }

  GradedPolynomial parse_product() {
    GradedPolynomial acc = parse_power();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * parse_power();
    }
  }

  GradedPolynomial parse_power() {
    GradedPolynomial base = parse_atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    if (!std::isdigit(peek())) fail("expected a nonnegative integer exponent");
    long expn = 0;
    while (std::isdigit(peek())) {
      expn = expn * 10 + (text_[pos_++] - '0');
      if (expn > 1000) fail("exponent too large");
    }
    return base.pow(static_cast<int>(expn));
  }

  GradedPolynomial parse_atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      GradedPolynomial inner = parse_sum();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 's') {
      ++pos_;
      if (!std::isdigit(peek())) fail("expected a generator index after 's'");
      long idx = 0;
      while (std::isdigit(peek())) {
        idx = idx * 10 + (text_[pos_++] - '0');
        if (idx > 1000) fail("generator index too large");
      }
      if (idx < 1 || idx > static_cast<long>(degrees_.size()))
        fail("generator index out of range");
      return GradedPolynomial::generator(degrees_, static_cast<int>(idx - 1));
    }
    if (std::isdigit(c)) return GradedPolynomial::constant(degrees_, parse_number());
    fail("expected a number, generator, or '('");
  }

  Rational parse_number() {
    std::string digits;
    while (std::isdigit(peek())) digits += text_[pos_++];
    // fraction bars bind tighter than anything and allow no spaces
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(peek())) fail("expected digits after '/'");
      std::string den;
      while (std::isdigit(peek())) den += text_[pos_++];
      if (Integer(den) == 0) fail("zero denominator");
      return make_rational(Integer(digits), Integer(den));
    }
    return Rational(Integer(digits));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ArgumentError("parse error at position " + std::to_string(pos_) + ": " + what);
  }

  const std::string& text_;
  const std::vector<int>& degrees_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses an expression in the generators s1..sm over the given degree
// profile, e.g. "s1^2*s2 + 3/2*s3 - 1".
inline GradedPolynomial parse_polynomial(const std::string& text,
                                         const std::vector<int>& degrees) {
  return detail::ExprParser(text, degrees).run();
}

}  // namespace chow
