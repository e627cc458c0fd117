// Command-line front end: every subcommand reads algebra JSON from a file
// argument (or stdin when absent or "-") and writes JSON to stdout.
// Exit codes: 0 success / property holds, 1 property fails (witness emitted),
// 2 input error (machine-readable error object emitted).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zinbiel/catalog.hpp"
#include "zinbiel/graded.hpp"
#include "zinbiel/io.hpp"
#include "zinbiel/maps.hpp"
#include "zinbiel/polysys.hpp"
#include "zinbiel/series.hpp"
#include "zinbiel/spectra.hpp"
#include "zinbiel/structure.hpp"
#include "zinbiel/superalgebra.hpp"

namespace {

using nlohmann::ordered_json;
using namespace zinbiel;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SuperAlgebra load_algebra(const std::string& path) {
  return algebra_from_json_string(read_input(path));
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json element_json(const SuperElement& x) { return element_to_string(x); }

ordered_json subspace_dims_json(const Subspace& s, std::size_t n) {
  std::size_t ev = 0, od = 0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto row = s.basis().row(i);
    bool has_even = false, has_odd = false;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) (j < n ? has_even : has_odd) = true;
    if (has_even && !has_odd) ++ev;
    if (has_odd && !has_even) ++od;
  }
  ordered_json j;
  j["dim"] = s.dim();
  j["dim_even"] = ev;
  j["dim_odd"] = od;
  return j;
}

int cmd_check(const std::string& path) {
  SuperAlgebra alg = load_algebra(path);
  auto violation = zinbiel_violation(alg);
  ordered_json out;
  out["zinbiel"] = !violation.has_value();
  if (violation) {
    ordered_json w;
    w["triple"] = {violation->x.str(), violation->y.str(), violation->z.str()};
    ordered_json residual = ordered_json::object();
    for (std::size_t k = 0; k < alg.dim(); ++k) {
      Rational c = violation->residual.coeff(alg.label(k));
      if (!c.is_zero()) residual[alg.label(k).str()] = c.str();
    }
    w["residual"] = residual;
    out["witness"] = w;
  }
  emit(out);
  return violation ? 1 : 0;
}

int cmd_series(const std::string& path) {
  SuperAlgebra alg = load_algebra(path);
  PowerSequence seq = power_sequence(alg);
  ordered_json out;
  out["full"] = chain_dims(seq.full);
  out["even"] = chain_dims(seq.even_chain);
  out["odd"] = chain_dims(seq.odd_chain);
  auto idx = nilpotency_index(alg);
  if (idx)
    out["nilpotency_index"] = *idx;
  else
    out["nilpotency_index"] = nullptr;
  out["solvable"] = is_solvable(alg);
  out["null_filiform"] = is_null_filiform(alg);
  emit(out);
  return 0;
}

int cmd_charseq(const std::string& path, const std::string& element, std::uint64_t seed) {
  SuperAlgebra alg = load_algebra(path);
  ordered_json out;
  if (!element.empty()) {
    SuperElement x = parse_element(element, alg.dim_even(), alg.dim_odd());
    CharSequence cs = char_sequence_at(alg, x);
    out["c0"] = cs.c0;
    out["c1"] = cs.c1;
    out["element"] = element_json(x);
  } else {
    CharSequenceScan scan = characteristic_sequence(alg, seed);
    out["c0"] = scan.seq.c0;
    out["c1"] = scan.seq.c1;
    out["witness"] = element_json(scan.witness);
    out["simultaneous"] = scan.simultaneous;
  }
  emit(out);
  return 0;
}

int cmd_gr(const std::string& path) {
  SuperAlgebra alg = load_algebra(path);
  auto result = associated_graded(alg);
  if (std::holds_alternative<GradedViolation>(result)) {
    const auto& v = std::get<GradedViolation>(result);
    ordered_json out;
    out["violation"] = {{"layer_left", v.layer_left},
                        {"layer_right", v.layer_right},
                        {"product", element_json(v.product)}};
    emit(out);
    return 1;
  }
  const auto& ag = std::get<AssociatedGraded>(result);
  ordered_json out;
  ordered_json layers = ordered_json::array();
  for (const auto& [ev, od] : ag.layers.dims) layers.push_back({ev, od});
  out["layers"] = layers;
  GradingReport report = natural_grading_verdict(alg);
  out["verdict"] = report.verdict == GradingVerdict::yes   ? "yes"
                   : report.verdict == GradingVerdict::no ? "no"
                                                          : "unknown";
  out["gr"] = algebra_to_json(ag.algebra);
  emit(out);
  return 0;
}

int cmd_structure(const std::string& path) {
  SuperAlgebra alg = load_algebra(path);
  AnnihilatorReport ann = annihilators(alg);
  ordered_json out;
  out["left_annihilator"] = subspace_dims_json(ann.left, alg.dim_even());
  out["right_annihilator"] = subspace_dims_json(ann.right, alg.dim_even());
  out["two_sided_annihilator"] = subspace_dims_json(ann.two_sided, alg.dim_even());
  SuperElement e = find_left_annihilating_homogeneous(alg);
  out["left_annihilating_element"] = element_json(e);
  MinimalIdealCertificate cert = minimal_graded_ideal(alg);
  out["minimal_graded_ideal"] = {{"generator", element_json(cert.generator)},
                                 {"parity", cert.parity == Parity::even ? "even" : "odd"},
                                 {"left_product_zero", cert.left_product_zero},
                                 {"right_product_zero", cert.right_product_zero}};
  emit(out);
  return 0;
}

int cmd_catalog_build(const std::string& family, std::size_t n, std::size_t m, std::size_t dim,
                      const std::string& alpha, const std::string& beta) {
  FamilySpec spec;
  spec.family = family_from_id(family);
  if (dim > 0) {
    if (spec.family != Family::NullFiliformSuper)
      throw std::invalid_argument("--dim applies to NullFiliformSuper only");
    spec.n = dim / 2;
    spec.m = dim - dim / 2;
  } else {
    spec.n = n;
    spec.m = m;
  }
  if (!alpha.empty()) spec.params["alpha"] = Rational::parse(alpha);
  if (!beta.empty()) spec.params["beta"] = Rational::parse(beta);
  emit(algebra_to_json(build(spec)));
  return 0;
}

int cmd_catalog_list() {
  ordered_json out = ordered_json::array();
  for (const auto& entry : catalog_index()) {
    ordered_json e;
    e["id"] = entry.id;
    e["table"] = entry.table;
    e["constraints"] = entry.constraints;
    out.push_back(std::move(e));
  }
  emit(out);
  return 0;
}

int cmd_iso_verify(const std::string& a_path, const std::string& b_path,
                   const std::string& map_path) {
  SuperAlgebra a = load_algebra(a_path);
  SuperAlgebra b = load_algebra(b_path);
  nlohmann::json mj = nlohmann::json::parse(read_input(map_path), nullptr, false);
  if (mj.is_discarded()) throw std::invalid_argument("malformed map JSON");
  GradedLinearMap p = map_from_json(mj);
  IsomorphismCheck check = is_isomorphism(a, b, p);
  ordered_json out;
  out["isomorphism"] = check.ok;
  if (!check.ok)
    out["failing_pair"] = {check.failing_pair->first.str(), check.failing_pair->second.str()};
  emit(out);
  return check.ok ? 0 : 1;
}

int cmd_classify_system(const std::string& pattern) {
  std::size_t comma = pattern.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--pattern expects \"n0,n1\"");
  std::size_t n0 = std::stoul(pattern.substr(0, comma));
  std::size_t n1 = std::stoul(pattern.substr(comma + 1));
  GenericSystem sys = generic_superidentity_system(n0, n1);
  ordered_json out;
  out["pattern"] = {n0, n1};
  ordered_json polys = ordered_json::array();
  for (const auto& p : sys.polynomials) polys.push_back(p.str());
  out["polynomials"] = polys;
  emit(out);
  return 0;
}

int cmd_classify_verify(const std::string& family, std::size_t samples, std::uint64_t seed) {
  SolutionFamily fam = solution_family_from_name(family);
  auto params = seeded_family_samples(fam, samples, seed);
  FamilyVerification result = verify_family(fam, params);
  ordered_json out;
  out["family"] = family;
  out["samples"] = samples;
  out["ok"] = result.ok;
  if (!result.ok) {
    out["failing_sample"] = result.failing_sample;
    out["failing_polynomial"] = result.failing_poly.str();
  }
  emit(out);
  return result.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant toolkit for Z2-graded Zinbiel algebras"};
  app.require_subcommand(1);

  std::string input_path, element, alpha, beta, pattern = "1,2", family, map_path, b_path;
  std::size_t n = 0, m = 0, dim = 0, samples = 5;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "verify the Zinbiel superidentity on basis triples");
  check->add_option("input", input_path, "algebra JSON file (default stdin)");

  auto* series = app.add_subcommand("series", "power sequence dims of all three chains");
  series->add_option("input", input_path, "algebra JSON file (default stdin)");

  auto* charseq = app.add_subcommand("charseq", "characteristic sequence");
  charseq->add_option("input", input_path, "algebra JSON file (default stdin)");
  charseq->add_option("--element", element, "evaluate at this even element, e.g. \"e1+1/2e3\"");
  charseq->add_option("--seed", seed, "seed for the candidate scan");

  auto* gr = app.add_subcommand("gr", "associated graded algebra and layer dims");
  gr->add_option("input", input_path, "algebra JSON file (default stdin)");

  auto* structure = app.add_subcommand("structure", "annihilators and minimal graded ideal");
  structure->add_option("input", input_path, "algebra JSON file (default stdin)");

  auto* catalog = app.add_subcommand("catalog", "catalog of classified algebras");
  catalog->require_subcommand(1);
  auto* build_cmd = catalog->add_subcommand("build", "emit a family instance as JSON");
  build_cmd->add_option("family", family, "family id, e.g. NF2 or z34")->required();
  build_cmd->add_option("--n", n, "even dimension");
  build_cmd->add_option("--m", m, "odd dimension");
  build_cmd->add_option("--dim", dim, "total dimension (NullFiliformSuper)");
  build_cmd->add_option("--alpha", alpha, "rational parameter alpha, e.g. 3/7");
  build_cmd->add_option("--beta", beta, "rational parameter beta");
  auto* list_cmd = catalog->add_subcommand("list", "list all families");

  auto* iso = app.add_subcommand("iso-verify", "verify an explicit graded isomorphism");
  iso->add_option("A", input_path, "source algebra JSON file")->required();
  iso->add_option("B", b_path, "target algebra JSON file")->required();
  iso->add_option("map", map_path, "graded map JSON file")->required();

  auto* csys = app.add_subcommand("classify-system", "generic superidentity polynomial system");
  csys->add_option("--pattern", pattern, "graded dimension pattern n0,n1 (default 1,2)");

  auto* cver = app.add_subcommand("classify-verify", "verify a (1,2) solution family");
  cver->add_option("--family", family, "family letter a..h")->required();
  cver->add_option("--samples", samples, "number of parameter samples (default 5)");
  cver->add_option("--seed", seed, "sample seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(check)) return cmd_check(input_path);
    if (app.got_subcommand(series)) return cmd_series(input_path);
    if (app.got_subcommand(charseq)) return cmd_charseq(input_path, element, seed);
    if (app.got_subcommand(gr)) return cmd_gr(input_path);
    if (app.got_subcommand(structure)) return cmd_structure(input_path);
    if (app.got_subcommand(catalog)) {
      if (catalog->got_subcommand(build_cmd))
        return cmd_catalog_build(family, n, m, dim, alpha, beta);
      if (catalog->got_subcommand(list_cmd)) return cmd_catalog_list();
    }
    if (app.got_subcommand(iso)) return cmd_iso_verify(input_path, b_path, map_path);
    if (app.got_subcommand(csys)) return cmd_classify_system(pattern);
    if (app.got_subcommand(cver)) return cmd_classify_verify(family, samples, seed);
  } catch (const std::exception& err) {
    nlohmann::ordered_json out;
    out["error"] = err.what();
    std::cout << out.dump(2) << "\n";
    return 2;
  }
  return 2;
}
