// Command line front end for the class ring library: ring descriptions,
// products, the transported isomorphism, push-forwards, relation lists,
// verification suites, and stability probing.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chow/io.hpp"

namespace {

using chow::Json;

constexpr std::uint64_t kDefaultSeed = 20250822;

std::uint64_t env_seed() {
  if (const char* text = std::getenv("CHOW_SEED")) {
    try {
      return std::stoull(text);
    } catch (const std::exception&) {
      throw chow::ArgumentError("CHOW_SEED must be a nonnegative integer");
    }
  }
  return kDefaultSeed;
}

// Element arguments are JSON documents when they start with '{', otherwise
// expressions in the generators s1..sm.
chow::NonlinearElement parse_nonlinear_arg(const chow::NonlinearRing& ring,
                                           const std::string& text) {
  if (!text.empty() && text[0] == '{') {
    chow::NonlinearElement x = chow::json_to_nonlinear(Json::parse(text));
    if (!(x.ring() == ring))
      throw chow::ArgumentError("element belongs to a different ring");
    return x;
  }
  chow::GradedPolynomial f = chow::parse_polynomial(text, ring.s_degrees());
  chow::NonlinearElement::TermMap terms;
  for (const auto& [e, c] : f.terms()) terms[e] += c;
  return chow::NonlinearElement::from_monomials(ring, terms);
}

chow::SchubertElement parse_schubert_arg(const chow::GrassmannRing& ring,
                                         const std::string& text) {
  if (!text.empty() && text[0] == '{') {
    chow::SchubertElement x = chow::json_to_schubert(Json::parse(text));
    if (!(x.ring() == ring))
      throw chow::ArgumentError("element belongs to a different ring");
    return x;
  }
  chow::GradedPolynomial f = chow::parse_polynomial(text, ring.sigma_degrees());
  std::vector<chow::SchubertElement> images;
  for (int j = 1; j <= ring.cols(); ++j)
    images.push_back(chow::SchubertElement::sigma(ring, j));
  return chow::evaluate_poly(ring, f, images);
}

void emit(const Json& doc, const std::string& text, bool as_json) {
  if (as_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

int run(int argc, char** argv) {
  CLI::App app{"exact class ring computations for spaces of embedded subvarieties"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // ring: basis and dimension description
  int ring_k = 1, ring_r = 3, ring_d = 1;
  auto* cmd_ring = app.add_subcommand("ring", "describe a ring's graded basis");
  cmd_ring->add_option("-k", ring_k, "subspace dimension")->required();
  cmd_ring->add_option("-r", ring_r, "ambient dimension")->required();
  cmd_ring->add_option("-d", ring_d, "embedding degree (1 gives the plain ring)");

  // multiply: product of two elements
  std::string mul_a, mul_b;
  int mul_k = 1, mul_r = 3, mul_d = 1;
  auto* cmd_mul = app.add_subcommand("multiply", "multiply two ring elements");
  cmd_mul->add_option("-k", mul_k)->required();
  cmd_mul->add_option("-r", mul_r)->required();
  cmd_mul->add_option("-d", mul_d);
  cmd_mul->add_option("a", mul_a, "left factor (expression or JSON)")->required();
  cmd_mul->add_option("b", mul_b, "right factor (expression or JSON)")->required();

  // lambda: transport a moduli class to the plain class ring
  std::string lam_x;
  int lam_k = 1, lam_r = 3, lam_d = 2;
  auto* cmd_lam = app.add_subcommand("lambda", "transport an element to the class ring");
  cmd_lam->add_option("-k", lam_k)->required();
  cmd_lam->add_option("-r", lam_r)->required();
  cmd_lam->add_option("-d", lam_d)->required();
  cmd_lam->add_option("x", lam_x, "element (expression or JSON)")->required();

  // lambda-inv: pull a class back to the moduli ring
  std::string inv_y;
  int inv_k = 1, inv_r = 3, inv_d = 2;
  auto* cmd_inv = app.add_subcommand("lambda-inv", "pull a class back through the transport");
  cmd_inv->add_option("-k", inv_k)->required();
  cmd_inv->add_option("-r", inv_r)->required();
  cmd_inv->add_option("-d", inv_d)->required();
  cmd_inv->add_option("y", inv_y, "class element (expression or JSON)")->required();

  // pushforward: fiber integration of hyperplane powers
  int push_k = 1, push_n = 3, push_l = 0, push_d = 0, push_r = 0, push_alpha = 0;
  auto* cmd_push = app.add_subcommand("pushforward",
                                      "push a hyperplane power to the base");
  cmd_push->add_option("-k", push_k)->required();
  cmd_push->add_option("-n", push_n, "base ambient dimension")->required();
  cmd_push->add_option("-l", push_l, "hyperplane power");
  cmd_push->add_option("-d", push_d, "twist degree (enables the scaled form)");
  cmd_push->add_option("-r", push_r, "twisted target dimension");
  cmd_push->add_option("--alpha", push_alpha, "extra power beyond r+1");

  // relations: scaled presentation of the moduli ring
  int rel_k = 1, rel_r = 3, rel_d = 2;
  auto* cmd_rel = app.add_subcommand("relations", "scaled relation generators");
  cmd_rel->add_option("-k", rel_k)->required();
  cmd_rel->add_option("-r", rel_r)->required();
  cmd_rel->add_option("-d", rel_d)->required();

  // verify: named suites
  std::string suite_name;
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify
      ->add_option("suite", suite_name,
                   "series | relations | duality | lambda | pushforward | "
                   "scaling | basis | git | all")
      ->required();

  // stability: probe a map tuple
  std::string stab_tuple;
  int stab_q = 0, stab_samples = 20;
  auto* cmd_stab = app.add_subcommand("stability", "probe a tuple for stable weights");
  cmd_stab->add_option("tuple", stab_tuple, "map tuple as JSON")->required();
  cmd_stab->add_option("-q", stab_q, "twist parameter (needs q > k+1)")->required();
  cmd_stab->add_option("--samples", stab_samples, "random probes per tuple");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cmd_ring->parsed()) {
    if (ring_d < 1) throw chow::ArgumentError("ring: requires d >= 1");
    chow::GrassmannRing g(ring_k, ring_r);
    auto dims = chow::poincare_dims(g);
    Json degrees = Json::array();
    std::string text = "graded dimensions:";
    for (std::size_t i = 0; i < dims.size(); ++i) {
      Json row{{"degree", i}, {"dim", dims[i]}, {"classes", Json::array()}};
      for (const auto& lam : enumerate_partitions(g, static_cast<int>(i)))
        row["classes"].push_back(chow::partition_text(lam));
      degrees.push_back(row);
      text += " " + std::to_string(dims[i]);
    }
    Json doc{{"k", ring_k}, {"r", ring_r}, {"d", ring_d},
             {"top_degree", g.top_degree()}, {"degrees", degrees}};
    if (ring_d > 1) {
      chow::NonlinearRing nl(ring_k, ring_r, ring_d);
      Json gens = Json::array();
      for (int j = 1; j <= nl.num_generators(); ++j)
        gens.push_back("s" + std::to_string(j));
      doc["generators"] = gens;
    }
    emit(doc, text + " (top degree " + std::to_string(g.top_degree()) + ")",
         opt.json());
    return 0;
  }

  if (cmd_mul->parsed()) {
    if (mul_d == 1) {
      chow::GrassmannRing g(mul_k, mul_r);
      auto prod = parse_schubert_arg(g, mul_a) * parse_schubert_arg(g, mul_b);
      emit(chow::schubert_to_json(prod), chow::schubert_to_text(prod), opt.json());
    } else {
      chow::NonlinearRing ring(mul_k, mul_r, mul_d);
      auto prod = parse_nonlinear_arg(ring, mul_a) * parse_nonlinear_arg(ring, mul_b);
      emit(chow::nonlinear_to_json(prod), chow::nonlinear_to_text(prod), opt.json());
    }
    return 0;
  }

  if (cmd_lam->parsed()) {
    chow::NonlinearRing ring(lam_k, lam_r, lam_d);
    auto image = chow::lambda_map(parse_nonlinear_arg(ring, lam_x));
    emit(chow::schubert_to_json(image), chow::schubert_to_text(image), opt.json());
    return 0;
  }

  if (cmd_inv->parsed()) {
    chow::NonlinearRing ring(inv_k, inv_r, inv_d);
    auto y = parse_schubert_arg(ring.grassmannian(), inv_y);
    auto x = chow::lambda_inverse(y, ring);
    emit(chow::nonlinear_to_json(x), chow::nonlinear_to_text(x), opt.json());
    return 0;
  }

  if (cmd_push->parsed()) {
    chow::GrassmannRing g(push_k, push_n);
    chow::SchubertElement out(g);
    Json doc;
    if (push_d > 0) {
      out = chow::bilt_pushforward(g, push_r, push_d, push_alpha);
      doc = Json{{"k", push_k}, {"n", push_n}, {"r", push_r}, {"d", push_d},
                 {"alpha", push_alpha}, {"result", chow::schubert_to_json(out)}};
    } else {
      out = chow::pushforward(chow::XiPolynomial::xi_power(g, push_l));
      doc = Json{{"k", push_k}, {"n", push_n}, {"l", push_l},
                 {"result", chow::schubert_to_json(out)}};
    }
    emit(doc, chow::schubert_to_text(out), opt.json());
    return 0;
  }

  if (cmd_rel->parsed()) {
    chow::NonlinearRing ring(rel_k, rel_r, rel_d);
    const auto& rels = chow::scaled_relations(ring);
    Json list = Json::array();
    std::string text;
    for (const auto& rel : rels) {
      list.push_back(Json{{"poly", chow::poly_to_json(rel)},
                          {"text", chow::poly_to_text(rel)}});
      text += chow::poly_to_text(rel) + "\n";
    }
    Json doc{{"k", rel_k}, {"r", rel_r}, {"d", rel_d}, {"relations", list}};
    if (text.empty()) text = "(no relations below the bound)\n";
    emit(doc, text.substr(0, text.size() - 1), opt.json());
    return 0;
  }

  if (cmd_verify->parsed()) {
    std::uint64_t seed = env_seed();
    std::vector<chow::SuiteReport> reports;
    auto want = [&suite_name](const char* name) {
      return suite_name == name || suite_name == "all";
    };
    if (want("series")) reports.push_back(chow::verify_series());
    if (want("relations")) reports.push_back(chow::verify_relations());
    if (want("duality")) reports.push_back(chow::verify_duality());
    if (want("pushforward")) {
      reports.push_back(chow::verify_pushforward());
      reports.push_back(chow::verify_scaled_pushforward());
    }
    if (want("lambda")) reports.push_back(chow::verify_lambda_iso(2, 4, 3, 100, seed));
    if (want("scaling")) reports.push_back(chow::verify_scaling_law());
    if (want("basis")) reports.push_back(chow::verify_sigma_basis_range());
    if (want("git")) reports.push_back(chow::verify_git_suite(3, 25, 20, seed));
    if (reports.empty())
      throw chow::ArgumentError("unknown suite \"" + suite_name + "\"");
    bool all = true;
    Json doc = Json::array();
    std::string text;
    for (const auto& rep : reports) {
      all = all && rep.passed();
      doc.push_back(chow::suite_to_json(rep));
      text += chow::suite_to_text(rep);
    }
    emit(doc, text.substr(0, text.size() - 1), opt.json());
    return all ? 0 : 1;
  }

  if (cmd_stab->parsed()) {
    chow::MapTuple m = chow::json_to_map_tuple(Json::parse(stab_tuple));
    chow::StabilityReport rep =
        chow::torus_stable(m, stab_q, stab_samples, env_seed());
    std::string text = rep.stable_on_probes()
                           ? "stable on all " + std::to_string(rep.probes) + " probes"
                           : "NOT stable: " + std::to_string(rep.failures.size()) +
                                 " failing probes of " + std::to_string(rep.probes);
    text += " (seed " + std::to_string(rep.seed) + ")";
    emit(chow::stability_to_json(rep), text, opt.json());
    return rep.stable_on_probes() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Json::parse_error& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
