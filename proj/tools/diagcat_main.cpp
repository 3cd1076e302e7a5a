// Command line interface for the diagram category toolkit: enumeration,
// composition, relation verification, Markov traces, Gram matrices, operator
// model certification and the doubling embedding.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <diagcat/algebra.hpp>
#include <diagcat/diagram.hpp>
#include <diagcat/enumerate.hpp>
#include <diagcat/errors.hpp>
#include <diagcat/opmodel.hpp>
#include <diagcat/opmodel_io.hpp>
#include <diagcat/relations.hpp>
#include <diagcat/represent.hpp>
#include <diagcat/trace.hpp>

namespace {

using diagcat::Kind;
using json = nlohmann::ordered_json;

constexpr const char* kSchema = "diagcat/1";

struct GlobalOptions {
  bool json = false;
  double beta = 2.0;
  double omega = 2.0;
  double tol = 1e-9;
  int budget = diagcat::kDefaultBudgetPoints;
};

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// All floating point output is funneled through %.12g so that repeated runs
// print byte-identical results.
double round12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json morphism_terms_json(const diagcat::Morphism& x, const GlobalOptions& g) {
  json terms = json::array();
  for (const auto& [d, c] : x.terms()) {
    terms.push_back({{"diagram", d.to_string()},
                     {"scalar", c.to_string()},
                     {"value", round12(c.eval(g.beta, g.omega))}});
  }
  return terms;
}

json signature_json(const diagcat::Signature& sig) {
  return {{"kind", std::string(diagcat::kind_name(sig.kind))},
          {"dom", sig.dom},
          {"cod", sig.cod}};
}

void print_morphism(const diagcat::Morphism& x) {
  std::cout << x.to_string() << "\n";
}

int run_dims(const GlobalOptions& g, const std::string& kind_text, int max) {
  const Kind kind = diagcat::parse_kind(kind_text);
  std::vector<json> entries;
  if (g.json) {
    json j{{"schema", kSchema},
           {"command", "dims"},
           {"kind", kind_text},
           {"max", max}};
    json rows = json::array();
    for (int m = 0; m <= max; ++m) {
      for (int n = 0; n <= max; ++n) {
        rows.push_back(
            {{"m", m}, {"n", n}, {"dim", diagcat::dimension(kind, m, n, g.budget)}});
      }
    }
    j["entries"] = std::move(rows);
    emit(j);
    return 0;
  }
  std::cout << "kind\tm\tn\tdim\n";
  for (int m = 0; m <= max; ++m) {
    for (int n = 0; n <= max; ++n) {
      std::cout << kind_text << "\t" << m << "\t" << n << "\t"
                << diagcat::dimension(kind, m, n, g.budget) << "\n";
    }
  }
  return 0;
}

int run_enumerate(const GlobalOptions& g, const std::string& kind_text, int m,
                  int n) {
  const Kind kind = diagcat::parse_kind(kind_text);
  const auto all = diagcat::enumerate_diagrams(kind, m, n, g.budget);
  if (g.json) {
    json diagrams = json::array();
    for (const auto& d : all) diagrams.push_back(d.to_string());
    emit(json{{"schema", kSchema},
              {"command", "enumerate"},
              {"kind", kind_text},
              {"m", m},
              {"n", n},
              {"count", all.size()},
              {"diagrams", std::move(diagrams)}});
    return 0;
  }
  std::cout << "count " << all.size() << "\n";
  for (const auto& d : all) std::cout << d.to_string() << "\n";
  return 0;
}

int run_compose(const GlobalOptions& g, const std::string& left,
                const std::string& right, const std::string& word,
                const std::string& kind_text) {
  const bool diagram_mode = !left.empty() || !right.empty();
  const bool word_mode = !word.empty();
  if (diagram_mode == word_mode) {
    throw diagcat::ParseError(
        "compose: give either --left and --right or --word");
  }
  if (diagram_mode) {
    if (left.empty() || right.empty()) {
      throw diagcat::ParseError("compose: --left and --right go together");
    }
    const diagcat::Diagram a = diagcat::Diagram::parse(left);
    const diagcat::Diagram b = diagcat::Diagram::parse(right);
    const diagcat::ComposeResult r = diagcat::compose_raw(a, b);
    if (g.json) {
      emit(json{{"schema", kSchema},
                {"command", "compose"},
                {"mode", "diagrams"},
                {"left", a.to_string()},
                {"right", b.to_string()},
                {"result", r.diagram.to_string()},
                {"white_loops", r.white_loops},
                {"black_loops", r.black_loops}});
      return 0;
    }
    std::cout << "result " << r.diagram.to_string() << "\n";
    std::cout << "white_loops " << r.white_loops << "\n";
    std::cout << "black_loops " << r.black_loops << "\n";
    return 0;
  }
  const Kind kind = diagcat::parse_kind(kind_text);
  const diagcat::GeneratorSet gens = diagcat::GeneratorSet::build(kind, 8);
  const diagcat::Morphism x = diagcat::evaluate_word(word, gens);
  if (g.json) {
    emit(json{{"schema", kSchema},
              {"command", "compose"},
              {"mode", "word"},
              {"word", word},
              {"signature", signature_json(x.signature())},
              {"terms", morphism_terms_json(x, g)}});
    return 0;
  }
  print_morphism(x);
  return 0;
}

int run_verify(const GlobalOptions& g, const std::string& suite,
               int max_index) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = diagcat::suite_names();
  } else {
    names.push_back(suite);
  }
  int checked = 0;
  int passed = 0;
  json jsuites = json::array();
  for (const std::string& name : names) {
    const diagcat::SuiteReport report = diagcat::verify_suite(name, max_index);
    if (g.json) {
      json results = json::array();
      for (const auto& r : report.results) {
        results.push_back(
            {{"id", r.id}, {"holds", r.holds}, {"detail", r.detail}});
      }
      jsuites.push_back({{"suite", report.suite},
                         {"results", std::move(results)},
                         {"all_hold", report.all_hold}});
    } else {
      std::cout << "suite " << report.suite << "\n";
      for (const auto& r : report.results) {
        if (r.holds) {
          std::cout << "ok " << r.id << "\n";
        } else {
          std::cout << "FAIL " << r.id << " (" << r.detail << ")\n";
        }
      }
    }
    int suite_passed = 0;
    for (const auto& r : report.results) {
      if (r.holds) ++suite_passed;
    }
    if (!g.json) {
      std::cout << suite_passed << "/" << report.results.size()
                << " relations hold exactly\n";
    }
    checked += static_cast<int>(report.results.size());
    passed += suite_passed;
  }
  if (g.json) {
    emit(json{{"schema", kSchema},
              {"command", "verify"},
              {"max_index", max_index},
              {"suites", std::move(jsuites)},
              {"checked", checked},
              {"passed", passed},
              {"all_hold", checked == passed}});
  } else if (names.size() > 1) {
    std::cout << "total " << passed << "/" << checked
              << " relations hold exactly\n";
  }
  return checked == passed ? 0 : 1;
}

int run_gram(const GlobalOptions& g, const std::string& kind_text, int m,
             int n) {
  const Kind kind = diagcat::parse_kind(kind_text);
  const diagcat::GramNumeric gram =
      diagcat::gram_numeric(kind, m, n, g.beta, g.omega, g.tol, g.budget);
  const int dim = static_cast<int>(gram.basis.size());
  if (g.json) {
    json matrix = json::array();
    for (int i = 0; i < dim; ++i) {
      json row = json::array();
      for (int j = 0; j < dim; ++j) row.push_back(round12(gram.matrix(i, j)));
      matrix.push_back(std::move(row));
    }
    json eigen = json::array();
    for (int i = 0; i < dim; ++i) eigen.push_back(round12(gram.eigenvalues[i]));
    emit(json{{"schema", kSchema},
              {"command", "gram"},
              {"kind", kind_text},
              {"m", m},
              {"n", n},
              {"beta", round12(g.beta)},
              {"omega", round12(g.omega)},
              {"dim", dim},
              {"matrix", std::move(matrix)},
              {"eigenvalues", std::move(eigen)},
              {"min_eig", round12(gram.min_eigenvalue)},
              {"max_eig", round12(gram.max_eigenvalue)},
              {"rank", gram.rank},
              {"positive", gram.positive_semidefinite}});
    return 0;
  }
  std::cout << "kind " << kind_text << "\nm " << m << "\nn " << n << "\ndim "
            << dim << "\nmatrix\n";
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      std::cout << (j ? " " : "") << fmt12(gram.matrix(i, j));
    }
    std::cout << "\n";
  }
  std::cout << "min_eig " << fmt12(gram.min_eigenvalue) << "\n";
  std::cout << "max_eig " << fmt12(gram.max_eigenvalue) << "\n";
  std::cout << "rank " << gram.rank << "\n";
  std::cout << "positive " << (gram.positive_semidefinite ? "true" : "false")
            << "\n";
  return 0;
}

int run_markov(const GlobalOptions& g, const std::string& kind_text,
               const std::string& word) {
  const Kind kind = diagcat::parse_kind(kind_text);
  const diagcat::GeneratorSet gens = diagcat::GeneratorSet::build(kind, 8);
  const diagcat::Morphism x = diagcat::evaluate_word(word, gens);
  const diagcat::Scalar trace = diagcat::markov_close(x);
  const double value = trace.eval(g.beta, g.omega);
  if (g.json) {
    emit(json{{"schema", kSchema},
              {"command", "markov"},
              {"kind", kind_text},
              {"word", word},
              {"trace", trace.to_string()},
              {"beta", round12(g.beta)},
              {"omega", round12(g.omega)},
              {"value", round12(value)}});
    return 0;
  }
  std::cout << "trace " << trace.to_string() << "\n";
  std::cout << "value " << fmt12(value) << "\n";
  return 0;
}

json delta_form_json(const diagcat::DeltaFormResult& r) {
  return {{"ok", r.ok},
          {"delta2", round12(r.delta2)},
          {"block_spread", round12(r.block_spread)},
          {"mult_residual", round12(r.mult_residual)}};
}

int run_opmodel_check(const GlobalOptions& g, const std::string& file) {
  const diagcat::ModelFile mf = diagcat::load_model_file(file);
  const diagcat::BetaOmegaFormResult bw =
      diagcat::is_beta_omega_form(mf.inclusion, mf.state, g.tol);
  const diagcat::CanonicalRestrictionResult canon =
      diagcat::check_canonical_restriction(mf.inclusion);
  const diagcat::OperatorModel model =
      diagcat::build_operator_model(mf.inclusion, mf.state);
  const auto residuals = diagcat::operator_relation_residuals(model);
  const std::string index_text = canon.index.str();

  if (g.json) {
    json jres = json::array();
    for (const auto& [name, value] : residuals) {
      jres.push_back({{"relation", name}, {"value", round12(value)}});
    }
    emit(json{{"schema", kSchema},
              {"command", "opmodel-check"},
              {"file", file},
              {"delta2", round12(bw.delta2)},
              {"beta2", round12(bw.beta2)},
              {"omega2", round12(bw.omega2)},
              {"delta_form_d", delta_form_json(bw.on_d)},
              {"delta_form_b", delta_form_json(bw.on_b)},
              {"unit_residual", round12(bw.unit_residual)},
              {"algebra_residual", round12(bw.algebra_residual)},
              {"canonical_restriction", canon.restricts_to_canonical},
              {"index", index_text},
              {"residuals", std::move(jres)},
              {"certified", bw.ok}});
    return bw.ok ? 0 : 1;
  }
  std::cout << "file " << file << "\n";
  std::cout << "delta2 " << fmt12(bw.delta2) << "\n";
  std::cout << "beta2 " << fmt12(bw.beta2) << "\n";
  std::cout << "omega2 " << fmt12(bw.omega2) << "\n";
  std::cout << "delta_form_d " << (bw.on_d.ok ? "ok" : "FAIL") << " (spread "
            << fmt12(bw.on_d.block_spread) << ", mult " << fmt12(bw.on_d.mult_residual)
            << ")\n";
  std::cout << "delta_form_b " << (bw.on_b.ok ? "ok" : "FAIL") << " (spread "
            << fmt12(bw.on_b.block_spread) << ", mult " << fmt12(bw.on_b.mult_residual)
            << ")\n";
  std::cout << "unit_residual " << fmt12(bw.unit_residual) << "\n";
  std::cout << "algebra_residual " << fmt12(bw.algebra_residual) << "\n";
  std::cout << "canonical_restriction "
            << (canon.restricts_to_canonical ? "true" : "false") << "\n";
  std::cout << "index " << index_text << "\n";
  for (const auto& [name, value] : residuals) {
    std::cout << "residual " << name << " " << fmt12(value) << "\n";
  }
  std::cout << "certified " << (bw.ok ? "true" : "false") << "\n";
  return bw.ok ? 0 : 1;
}

int run_opmodel_agree(const GlobalOptions& g, const std::string& file, int m,
                      int n) {
  const diagcat::ModelFile mf = diagcat::load_model_file(file);
  diagcat::Representer rep(mf.inclusion, mf.state);
  const diagcat::Representer::AgreementReport r = rep.gram_agreement(m, n);
  const bool agree = r.max_abs_deviation <= g.tol;
  if (g.json) {
    emit(json{{"schema", kSchema},
              {"command", "opmodel-agree"},
              {"file", file},
              {"m", m},
              {"n", n},
              {"beta", round12(rep.beta0())},
              {"omega", round12(rep.omega0())},
              {"dim", r.dim},
              {"max_deviation", round12(r.max_abs_deviation)},
              {"span_rank", r.span_rank},
              {"agree", agree}});
    return agree ? 0 : 1;
  }
  std::cout << "file " << file << "\n";
  std::cout << "m " << m << "\nn " << n << "\n";
  std::cout << "beta " << fmt12(rep.beta0()) << "\n";
  std::cout << "omega " << fmt12(rep.omega0()) << "\n";
  std::cout << "dim " << r.dim << "\n";
  std::cout << "max_deviation " << fmt12(r.max_abs_deviation) << "\n";
  std::cout << "span_rank " << r.span_rank << "\n";
  std::cout << "agree " << (agree ? "true" : "false") << "\n";
  return agree ? 0 : 1;
}

int run_embed_tl(const GlobalOptions& g, const std::string& diagram_text,
                 const std::string& word) {
  const bool diagram_mode = !diagram_text.empty();
  if (diagram_mode == !word.empty()) {
    throw diagcat::ParseError("embed-tl: give either --diagram or --word");
  }
  if (diagram_mode) {
    const diagcat::Diagram d = diagcat::Diagram::parse(diagram_text);
    const diagcat::Diagram doubled = diagcat::tl_to_fc(d);
    if (g.json) {
      emit(json{{"schema", kSchema},
                {"command", "embed-tl"},
                {"mode", "diagram"},
                {"input", d.to_string()},
                {"result", doubled.to_string()}});
      return 0;
    }
    std::cout << doubled.to_string() << "\n";
    return 0;
  }
  const diagcat::GeneratorSet gens = diagcat::GeneratorSet::build(Kind::TL, 8);
  const diagcat::Morphism x = diagcat::evaluate_word(word, gens);
  diagcat::Morphism out =
      diagcat::Morphism::zero(Kind::FC, x.dom(), x.cod());
  for (const auto& [d, c] : x.terms()) {
    out = out + diagcat::Morphism::of(diagcat::tl_to_fc(d), c);
  }
  if (g.json) {
    emit(json{{"schema", kSchema},
              {"command", "embed-tl"},
              {"mode", "word"},
              {"word", word},
              {"signature", signature_json(out.signature())},
              {"terms", morphism_terms_json(out, g)}});
    return 0;
  }
  print_morphism(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for bicolored and uncolored planar diagram "
               "categories with an operator model"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_flag("--json", g.json, "emit JSON instead of plain text");
  app.add_option("--beta", g.beta, "white loop parameter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--omega", g.omega, "black loop parameter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol", g.tol, "numeric tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--budget", g.budget, "boundary point budget")
      ->capture_default_str();

  int rc = 0;

  // dims
  std::string dims_kind = "FC";
  int dims_max = 4;
  CLI::App* dims = app.add_subcommand("dims", "dimension table of the hom spaces");
  dims->add_option("--kind", dims_kind, "TL or FC")->capture_default_str();
  dims->add_option("--max", dims_max, "largest object count")
      ->capture_default_str();
  dims->callback([&] { rc = run_dims(g, dims_kind, dims_max); });

  // enumerate
  std::string enum_kind = "FC";
  int enum_m = 0;
  int enum_n = 0;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list the diagrams of one signature");
  enumerate->add_option("--kind", enum_kind, "TL or FC")->capture_default_str();
  enumerate->add_option("--m", enum_m, "domain object count")->required();
  enumerate->add_option("--n", enum_n, "codomain object count")->required();
  enumerate->callback([&] { rc = run_enumerate(g, enum_kind, enum_m, enum_n); });

  // compose
  std::string comp_left, comp_right, comp_word;
  std::string comp_kind = "FC";
  CLI::App* compose = app.add_subcommand(
      "compose", "compose two diagrams or evaluate a generator word");
  compose->add_option("--left", comp_left, "diagram applied second");
  compose->add_option("--right", comp_right, "diagram applied first");
  compose->add_option("--word", comp_word, "word over the generators");
  compose->add_option("--kind", comp_kind, "TL or FC (word mode)")
      ->capture_default_str();
  compose->callback(
      [&] { rc = run_compose(g, comp_left, comp_right, comp_word, comp_kind); });

  // verify
  std::string verify_suite = "all";
  int verify_max_index = 4;
  CLI::App* verify = app.add_subcommand(
      "verify", "check the relation suites in the diagram algebra");
  verify->add_option("--suite", verify_suite,
                     "T1, T2, BJ, reduced, star, useful, aux or all")
      ->capture_default_str();
  verify->add_option("--max-index", verify_max_index,
                     "largest Jones projection index")
      ->capture_default_str();
  verify->callback([&] { rc = run_verify(g, verify_suite, verify_max_index); });

  // gram
  std::string gram_kind = "FC";
  int gram_m = 0;
  int gram_n = 0;
  CLI::App* gram = app.add_subcommand(
      "gram", "Markov form Gram matrix of a diagram basis");
  gram->add_option("--kind", gram_kind, "TL or FC")->capture_default_str();
  gram->add_option("--m", gram_m, "domain object count")->required();
  gram->add_option("--n", gram_n, "codomain object count")->required();
  gram->callback([&] { rc = run_gram(g, gram_kind, gram_m, gram_n); });

  // markov
  std::string markov_kind = "FC";
  std::string markov_word;
  CLI::App* markov =
      app.add_subcommand("markov", "exact Markov trace of a word");
  markov->add_option("--kind", markov_kind, "TL or FC")->capture_default_str();
  markov->add_option("--word", markov_word, "word over the generators")
      ->required();
  markov->callback([&] { rc = run_markov(g, markov_kind, markov_word); });

  // opmodel
  CLI::App* opmodel =
      app.add_subcommand("opmodel", "operator model certification");
  opmodel->require_subcommand(1);
  std::string check_file;
  CLI::App* check = opmodel->add_subcommand(
      "check", "certify a model file as a (beta, omega) form");
  check->add_option("file", check_file, "model JSON file")->required();
  check->callback([&] { rc = run_opmodel_check(g, check_file); });
  std::string agree_file;
  int agree_m = 1;
  int agree_n = 1;
  CLI::App* agree = opmodel->add_subcommand(
      "agree", "compare operator and symbolic Gram matrices");
  agree->add_option("file", agree_file, "model JSON file")->required();
  agree->add_option("--m", agree_m, "domain object count")
      ->capture_default_str();
  agree->add_option("--n", agree_n, "codomain object count")
      ->capture_default_str();
  agree->callback([&] { rc = run_opmodel_agree(g, agree_file, agree_m, agree_n); });

  // embed-tl
  std::string embed_diagram, embed_word;
  CLI::App* embed = app.add_subcommand(
      "embed-tl", "double an uncolored diagram or word into the colored category");
  embed->add_option("--diagram", embed_diagram, "TL diagram text");
  embed->add_option("--word", embed_word, "word over the TL generators");
  embed->callback([&] { rc = run_embed_tl(g, embed_diagram, embed_word); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const diagcat::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const diagcat::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const diagcat::CertificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const diagcat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
