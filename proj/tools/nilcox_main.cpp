/// @file nilcox_main.cpp
/// @brief Command-line front end for the nilcox library.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nilcox/classifier.hpp"
#include "nilcox/errors.hpp"
#include "nilcox/matrix_io.hpp"
#include "nilcox/nca_algebra.hpp"
#include "nilcox/oracle.hpp"
#include "nilcox/witness.hpp"

using namespace nilcox;
using nlohmann::json;

namespace {

struct Options {
  int n = 0;
  int d = 0;
  std::string word;
  std::string lhs;
  std::string rhs;
  std::string matrix;
  int max_degree = 10;
  int depth = 8;
  std::string case_tag;
  std::string format = "text";
};

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      const int letter = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(letter);
    } catch (const std::exception&) {
      throw DomainError("bad letter \"" + token + "\" in word");
    }
  }
  return out;
}

/// --matrix accepts inline JSON or a path to a JSON file; without it the
/// (n, d) flags select the path diagram with one raised order.
CoxeterMatrix resolve_matrix(const Options& opt) {
  if (!opt.matrix.empty()) {
    std::string text = opt.matrix;
    if (text.find('{') == std::string::npos) {
      std::ifstream in(text);
      if (!in) throw DomainError("cannot open matrix file " + text);
      std::ostringstream buffer;
      buffer << in.rdbuf();
      text = buffer.str();
    }
    CoxeterMatrix M = matrix_from_json_text(text);
    M.require_valid();
    return M;
  }
  if (opt.n < 1 || opt.d < 2)
    throw DomainError("need --matrix, or --n and --d");
  return CoxeterMatrix::nc_a(opt.n, opt.d);
}

bool json_mode(const Options& opt) {
  if (opt.format == "json") return true;
  if (opt.format == "text") return false;
  throw DomainError("--format must be text or json");
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (json_mode(opt))
    std::cout << j.dump(2) << std::endl;
  else
    std::cout << text << std::endl;
}

void cmd_dim(const Options& opt) {
  const mpz_class value = dimension(opt.n, opt.d);
  emit(opt, json{{"n", opt.n}, {"d", opt.d}, {"dimension", value.get_str()}},
       value.get_str());
}

void cmd_hilbert(const Options& opt) {
  const auto poly = hilbert(opt.n, opt.d);
  json coeffs = json::array();
  for (const auto& c : poly.coefficients) coeffs.push_back(c.get_str());
  emit(opt,
       json{{"n", opt.n},
            {"d", opt.d},
            {"coefficients", coeffs},
            {"degree", poly.degree()},
            {"sum", poly.sum().get_str()}},
       poly.to_string());
}

void cmd_basis(const Options& opt) {
  const auto words = basis(opt.n, opt.d);
  json listed = json::array();
  std::string text;
  for (const auto& b : words) {
    listed.push_back(b.to_string());
    if (!text.empty()) text += "\n";
    text += b.to_string();
  }
  emit(opt,
       json{{"n", opt.n},
            {"d", opt.d},
            {"count", words.size()},
            {"words", listed}},
       text);
}

void cmd_nf(const Options& opt) {
  const NcaContext ctx(opt.n, opt.d);
  const auto result = normal_form(ctx, parse_word(opt.word));
  emit(opt,
       json{{"normal_form", result.to_string()},
            {"is_zero", result.is_zero()}},
       result.to_string());
}

void cmd_mul(const Options& opt) {
  const NcaContext ctx(opt.n, opt.d);
  const auto product =
      multiply(parse_element(ctx, opt.lhs), parse_element(ctx, opt.rhs));
  emit(opt,
       json{{"product", product.to_string()}, {"is_zero", product.is_zero()}},
       product.to_string());
}

void cmd_length(const Options& opt) {
  const NcaContext ctx(opt.n, opt.d);
  const auto result = normal_form(ctx, parse_word(opt.word));
  if (result.is_zero()) {
    emit(opt, json{{"zero", true}}, "zero");
    return;
  }
  const int length = result.terms().begin()->first.word_length();
  emit(opt, json{{"zero", false}, {"length", length}},
       std::to_string(length));
}

void cmd_theta(const Options& opt) {
  const NcaContext ctx(opt.n, opt.d);
  const auto image = theta(normal_form(ctx, parse_word(opt.word)));
  emit(opt, json{{"theta", image.to_string()}}, image.to_string());
}

void cmd_primitives(const Options& opt) {
  const auto left = left_primitives(opt.n, opt.d);
  const auto both = two_sided_primitives(opt.n, opt.d);
  json jleft = json::array(), jboth = json::array();
  std::string left_text = "left:", both_text = "two-sided:";
  for (const auto& b : left) {
    jleft.push_back(b.to_string());
    left_text += " " + b.to_string();
  }
  for (const auto& b : both) {
    jboth.push_back(b.to_string());
    both_text += " " + b.to_string();
  }
  emit(opt, json{{"left", jleft}, {"two_sided", jboth}},
       left_text + "\n" + both_text);
}

void cmd_frobenius(const Options& opt) {
  const bool value = is_frobenius(opt.n, opt.d);
  emit(opt, json{{"frobenius", value}}, value ? "true" : "false");
}

void cmd_khovanov(const Options& opt) {
  const auto report = khovanov_decomposition_check(opt.n, opt.d);
  json ranks = json::array();
  std::string ranks_text;
  for (long long r : report.module_ranks) {
    ranks.push_back(r);
    if (!ranks_text.empty()) ranks_text += " ";
    ranks_text += std::to_string(r);
  }
  std::string text = "plain rank " + std::to_string(report.plain_rank) +
                     "\nmodule ranks " + ranks_text + "\ntotal " +
                     std::to_string(report.total_rank) + "\n" +
                     (report.ok() ? "ok" : "mismatch");
  emit(opt,
       json{{"plain_rank", report.plain_rank},
            {"module_ranks", ranks},
            {"total", report.total_rank},
            {"ok", report.ok()}},
       text);
}

void cmd_classify(const Options& opt) {
  const auto result = classify(resolve_matrix(opt));
  const json j = classification_to_json(result);
  // The verdict is structured output either way.
  std::cout << j.dump(2) << std::endl;
}

void cmd_witness(const Options& opt) {
  const CoxeterMatrix M = resolve_matrix(opt);
  const auto result = classify(M);
  if (result.finite)
    throw DomainError("diagram is finite; no witness module exists");
  if (!result.witness_recipe)
    throw DomainError("no witness module catalogued for this diagram");
  if (!opt.case_tag.empty() && opt.case_tag != result.case_tag)
    throw DomainError("classified case " + result.case_tag +
                      " does not match --case " + opt.case_tag);
  const WitnessModule module(*result.witness_recipe, opt.depth);
  const auto report = verify_witness(M, module);

  json families = json::array();
  std::string families_text;
  for (const auto& f : module.families()) {
    families.push_back(f);
    if (!families_text.empty()) families_text += " ";
    families_text += f;
  }
  json edges = json::array();
  for (const auto& e : result.witness_recipe->edges)
    edges.push_back(json{{"from", e.from},
                         {"generator", e.generator},
                         {"to", e.to},
                         {"increment", e.increment}});
  json reach = json::array();
  for (const auto& word : report.reach_words) {
    json w = json::array();
    for (int l : word) w.push_back(l);
    reach.push_back(w);
  }
  const auto& top = report.reach_words.back();
  std::string top_text;
  for (int l : top) top_text += (top_text.empty() ? "" : ",") +
                                std::to_string(l);

  std::string text = "case " + result.case_tag + "\nfamilies " +
                     families_text + "\ndepth " +
                     std::to_string(module.truncation_depth()) + "\nlabels " +
                     std::to_string(module.basis_labels().size()) +
                     "\nverification " + (report.ok() ? "ok" : "failed") +
                     "\ntop reach word [" + top_text + "]";
  emit(opt,
       json{{"case", result.case_tag},
            {"families", families},
            {"edges", edges},
            {"depth", module.truncation_depth()},
            {"labels", module.basis_labels().size()},
            {"verification_ok", report.ok()},
            {"reach_words", reach}},
       text);
  if (!report.ok()) std::exit(1);
}

void cmd_verify(const Options& opt) {
  const CoxeterMatrix M = resolve_matrix(opt);
  const auto result = classify(M);
  if (result.finite)
    throw DomainError("diagram is finite; nothing to verify");
  if (!result.witness_recipe)
    throw DomainError("no witness module catalogued for this diagram");
  const WitnessModule module(*result.witness_recipe, opt.depth);
  const auto report = verify_witness(M, module);
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back(v);
  std::string text = std::string("relations ") +
                     (report.relations_ok ? "ok" : "violated") +
                     "\nreplicas " +
                     (report.all_replicas_reached ? "all reached"
                                                  : "not all reached") +
                     "\nchecked " + std::to_string(report.checked_pairs) +
                     " skipped " + std::to_string(report.skipped_pairs);
  emit(opt,
       json{{"case", result.case_tag},
            {"relations_ok", report.relations_ok},
            {"all_replicas_reached", report.all_replicas_reached},
            {"checked_pairs", report.checked_pairs},
            {"skipped_pairs", report.skipped_pairs},
            {"violations", violations}},
       text);
  if (!report.ok()) std::exit(1);
}

void cmd_oracle_dim(const Options& opt) {
  const CoxeterMatrix M = resolve_matrix(opt);
  const auto report = graded_quotient_report(M, opt.max_degree);
  json dims = json::array();
  std::string text;
  long long total = 0;
  for (std::size_t t = 0; t < report.graded_dims.size(); ++t) {
    dims.push_back(report.graded_dims[t]);
    total += report.graded_dims[t];
    text += "degree " + std::to_string(t) + ": " +
            std::to_string(report.graded_dims[t]) + "\n";
  }
  json j{{"graded_dims", dims}, {"truncated", report.truncated}};
  if (report.truncated) {
    text += "still growing";
  } else {
    text += "total " + std::to_string(total);
    j["total"] = total;
  }
  emit(opt, j, text);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized nil-Coxeter algebra toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_context = [&](CLI::App* cmd, bool required) {
    auto* n = cmd->add_option("--n", opt.n, "number of generators");
    auto* d = cmd->add_option("--d", opt.d, "order of the last generator");
    if (required) {
      n->required();
      d->required();
    }
    cmd->add_option("--format", opt.format, "output format: text or json");
    return cmd;
  };
  auto add_matrix = [&](CLI::App* cmd) {
    cmd->add_option("--matrix", opt.matrix,
                    "diagram as inline JSON or a path to a JSON file");
    return cmd;
  };

  auto* dim = add_context(app.add_subcommand("dim", "basis size"), true);
  auto* hil = add_context(
      app.add_subcommand("hilbert", "graded dimension polynomial"), true);
  auto* bas = add_context(app.add_subcommand("basis", "list basis words"),
                          true);
  auto* nf = add_context(
      app.add_subcommand("nf", "normal form of a generator word"), true);
  nf->add_option("--word", opt.word, "comma-separated letters")->required();
  auto* mul =
      add_context(app.add_subcommand("mul", "product of two elements"), true);
  mul->add_option("--lhs", opt.lhs, "left factor")->required();
  mul->add_option("--rhs", opt.rhs, "right factor")->required();
  auto* len = add_context(
      app.add_subcommand("length", "length of a nonzero word"), true);
  len->add_option("--word", opt.word, "comma-separated letters")->required();
  auto* the = add_context(
      app.add_subcommand("theta", "reversal anti-involution"), true);
  the->add_option("--word", opt.word, "comma-separated letters")->required();
  add_context(app.add_subcommand("primitives", "primitive basis words"),
              true);
  add_context(app.add_subcommand("frobenius", "Frobenius predicate"), true);
  add_context(app.add_subcommand("khovanov", "bimodule decomposition ranks"),
              true);

  auto* cls = add_matrix(add_context(
      app.add_subcommand("classify", "finite or infinite verdict"), false));
  auto* wit = add_matrix(add_context(
      app.add_subcommand("witness", "materialize a witness module"), false));
  wit->add_option("--depth", opt.depth, "truncation depth");
  wit->add_option("--case", opt.case_tag, "expected case tag");
  auto* ver = add_matrix(add_context(
      app.add_subcommand("verify", "check a witness module's relations"),
      false));
  ver->add_option("--depth", opt.depth, "truncation depth");
  auto* odim = add_matrix(add_context(
      app.add_subcommand("oracle-dim", "graded dimensions from the quotient"),
      false));
  odim->add_option("--max-degree", opt.max_degree, "highest degree to try");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    if (dim->parsed()) cmd_dim(opt);
    else if (hil->parsed()) cmd_hilbert(opt);
    else if (bas->parsed()) cmd_basis(opt);
    else if (nf->parsed()) cmd_nf(opt);
    else if (mul->parsed()) cmd_mul(opt);
    else if (len->parsed()) cmd_length(opt);
    else if (the->parsed()) cmd_theta(opt);
    else if (app.get_subcommand("primitives")->parsed()) cmd_primitives(opt);
    else if (app.get_subcommand("frobenius")->parsed()) cmd_frobenius(opt);
    else if (app.get_subcommand("khovanov")->parsed()) cmd_khovanov(opt);
    else if (cls->parsed()) cmd_classify(opt);
    else if (wit->parsed()) cmd_witness(opt);
    else if (ver->parsed()) cmd_verify(opt);
    else if (odim->parsed()) cmd_oracle_dim(opt);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 0;
}
