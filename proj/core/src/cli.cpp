#include "wreathcert/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "wreathcert/error.hpp"
#include "wreathcert/fingrp/catalog.hpp"
#include "wreathcert/fingrp/perm.hpp"
#include "wreathcert/galg/element.hpp"
#include "wreathcert/galg/scalar.hpp"
#include "wreathcert/oracle/dense.hpp"
#include "wreathcert/tower/element.hpp"
#include "wreathcert/tower/normal.hpp"
#include "wreathcert/tower/order_expr.hpp"
#include "wreathcert/tower/spec.hpp"
#include "wreathcert/util.hpp"
#include "wreathcert/witness/certificate.hpp"
#include "wreathcert/witness/config.hpp"
#include "wreathcert/witness/pipeline.hpp"
#include "wreathcert/witness/suites.hpp"
#include "wreathcert/witness/verify.hpp"

namespace wreathcert::cli {
namespace {

// Input-shaped failures exit 2; failed checks and constructions exit 1.
bool usage_failure(const std::string& code) {
  static const std::set<std::string> codes{
      "ParseError",   "UnknownGroup",       "UnknownElement", "BadLevel",
      "BadCharacteristic", "BadSpec",       "IoError",        "UnsupportedVersion",
      "BadElementList",    "ZeroElement",   "IdentityElement", "Unsupported",
      "SpecMismatch",      "Usage",         "UsageError"};
  return codes.count(code) > 0;
}

tower::TowerSpec load_spec(const std::string& path) {
  tower::TowerSpec spec = tower::TowerSpec::load_file(path);
  tower::validate_spec(spec);
  return spec;
}

// Element and algebra arguments may be given inline or as @path to a file
// holding the canonical text form.
std::string read_text_arg(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream file(arg.substr(1), std::ios::binary);
  if (!file) fail("IoError", "cannot open element file " + arg.substr(1));
  std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.pop_back();
  return text;
}

tower::Element parse_element(const tower::TowerSpec& spec, const std::string& text) {
  tower::Element x = tower::Element::parse(read_text_arg(text));
  tower::validate_element(spec, x);
  return x;
}

std::string join_ids(const std::vector<std::string>& ids) {
  if (ids.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += ids[i];
  }
  return out;
}

int cmd_catalog_list(std::ostream& out) {
  out << "catalog groups:\n";
  for (const auto& desc : fingrp::catalog()) {
    out << "  " << desc.id << "  degree " << desc.degree << ", order " << desc.order
        << ", primes {";
    for (std::size_t i = 0; i < desc.prime_spectrum.size(); ++i) {
      if (i) out << ", ";
      out << desc.prime_spectrum[i];
    }
    out << "}";
    if (desc.metadata_only) out << "  (order data only)";
    out << "\n";
  }
  out << "helper groups:\n";
  for (const auto& g : fingrp::test_groups())
    out << "  " << g.id << "  degree " << g.degree << ", order " << g.element_list.size()
        << "\n";
  return 0;
}

int cmd_catalog_verify(const std::string& id, std::ostream& out) {
  const auto* desc = fingrp::find_catalog_group(id);
  if (desc == nullptr) fail("UnknownGroup", "no catalog group named " + id);
  if (desc->metadata_only)
    fail("Unsupported", id + " carries order data only; simplicity cannot be rechecked here");
  auto report = fingrp::verify_simplicity(*desc);
  for (const auto& check : report.checks)
    out << "class of " << check.representative.to_string() << ": size " << check.class_size
        << ", normal closure order " << check.closure_size << "\n";
  if (report.simple) {
    out << id << ": every nontrivial class generates the whole group; simple\n";
    return 0;
  }
  out << id << ": found a proper nontrivial normal closure; NOT simple\n";
  return 1;
}

int cmd_tower_info(const std::string& path, int stages, std::ostream& out) {
  tower::TowerSpec spec = load_spec(path);
  out << "tower " << spec.name << "\n";
  out << "preamble: " << join_ids(spec.preamble) << "\n";
  out << "cycle: " << join_ids(spec.cycle) << "\n";
  for (int k = 1; k <= stages; ++k) {
    const auto& d = spec.group_at(k);
    out << "stage " << k << ": " << d.id << ", degree " << d.degree << ", order " << d.order
        << ", |G_" << k << "| = " << tower::group_order(spec, k)->to_string() << "\n";
  }
  return 0;
}

int cmd_tower_order(const std::string& path, int level, bool evaluate,
                    unsigned long digit_cap, std::ostream& out) {
  tower::TowerSpec spec = load_spec(path);
  auto expr = tower::group_order(spec, level);
  out << expr->to_string() << "\n";
  if (evaluate) out << tower::oe_evaluate(expr, digit_cap) << "\n";
  return 0;
}

int cmd_tower_mul(const std::string& path, const std::string& xs, const std::string& ys,
                  std::ostream& out) {
  tower::TowerSpec spec = load_spec(path);
  out << tower::mul(parse_element(spec, xs), parse_element(spec, ys)).to_string() << "\n";
  return 0;
}

int cmd_tower_inv(const std::string& path, const std::string& xs, std::ostream& out) {
  tower::TowerSpec spec = load_spec(path);
  out << tower::inv(parse_element(spec, xs)).to_string() << "\n";
  return 0;
}

int cmd_tower_conj(const std::string& path, const std::string& xs, const std::string& gs,
                   std::ostream& out) {
  tower::TowerSpec spec = load_spec(path);
  out << tower::conj(parse_element(spec, xs), parse_element(spec, gs)).to_string() << "\n";
  return 0;
}

int cmd_tower_project(const std::string& path, const std::string& xs, int level,
                      std::ostream& out) {
  tower::TowerSpec spec = load_spec(path);
  out << tower::project(parse_element(spec, xs), level).to_string() << "\n";
  return 0;
}

int cmd_tower_closure(const std::string& path, const std::string& xs, int horizon,
                      std::ostream& out) {
  tower::TowerSpec spec = load_spec(path);
  tower::Element x = parse_element(spec, xs);
  auto res = tower::normal_closure_symbolic(spec, x, horizon);
  const auto& cert = res.certificate;
  out << "closure = " << res.closure.to_string() << "\n";
  out << "element level = " << cert.element_level << "\n";
  out << "max T stage = " << cert.max_t_level << "\n";
  out << "checked horizon = " << cert.horizon << "\n";
  out << "boundary: inside T(" << cert.max_t_level << ") "
      << (cert.boundary_in ? "yes" : "NO") << ", outside T(" << cert.max_t_level + 1 << ") "
      << (cert.boundary_out ? "yes" : "NO") << "\n";
  out << (cert.ok() ? "certificate ok" : "certificate FAILED") << "\n";
  return cert.ok() ? 0 : 1;
}

int cmd_tower_lattice(const std::string& path, int stage, std::ostream& out) {
  tower::TowerSpec spec = load_spec(path);
  if (stage < 2) {
    out << "stage 1 is simple; no proper nontrivial normal subgroups\n";
    return 0;
  }
  auto subs = tower::lattice(spec, stage - 1);
  out << "G_" << stage << " proper nontrivial normal subgroups (" << subs.size() << "):\n";
  for (const auto& s : subs) out << "  " << s.to_string() << "\n";
  return 0;
}

int cmd_algebra_mul(const std::string& path, long ch, const std::string& as,
                    const std::string& bs, std::ostream& out) {
  tower::TowerSpec spec = load_spec(path);
  galg::check_characteristic(ch);
  auto a = galg::AlgebraElement::parse(read_text_arg(as), spec, ch);
  auto b = galg::AlgebraElement::parse(read_text_arg(bs), spec, ch);
  out << (a * b).to_string() << "\n";
  return 0;
}

int cmd_algebra_conj(const std::string& path, long ch, const std::string& as,
                     const std::string& gs, std::ostream& out) {
  tower::TowerSpec spec = load_spec(path);
  galg::check_characteristic(ch);
  auto a = galg::AlgebraElement::parse(read_text_arg(as), spec, ch);
  tower::Element g = parse_element(spec, gs);
  out << galg::ga_conjugate(a, g).to_string() << "\n";
  return 0;
}

int cmd_algebra_normalize(const std::string& path, long ch, const std::string& as,
                          std::ostream& out) {
  tower::TowerSpec spec = load_spec(path);
  galg::check_characteristic(ch);
  auto a = galg::AlgebraElement::parse(read_text_arg(as), spec, ch);
  auto norm = galg::normalize_input(a);
  out << "translator = " << norm.translator.to_string() << "\n";
  out << "normalized = " << norm.alpha.to_string() << "\n";
  out << "support level = " << norm.support_level << "\n";
  for (std::size_t i = 0; i < norm.xs.size(); ++i)
    out << "x_" << i << " = " << norm.xs[i].to_string() << ", k_" << i << " = "
        << norm.ks[i].to_string() << "\n";
  return 0;
}

witness::FrameMode parse_mode(const std::string& text) {
  if (text == "auto") return witness::FrameMode::Auto;
  if (text == "enumerative") return witness::FrameMode::Enumerative;
  if (text == "structural") return witness::FrameMode::Structural;
  fail("Usage", "unknown frame mode " + text);
}

int cmd_witness_extract(const std::string& path, long ch, const std::string& alpha_text,
                        const std::string& out_path, std::uint64_t seed,
                        const std::string& mode, std::ostream& out) {
  tower::TowerSpec spec = load_spec(path);
  galg::check_characteristic(ch);
  auto alpha = galg::AlgebraElement::parse(read_text_arg(alpha_text), spec, ch);
  witness::RunConfig config;
  config.seed = seed;
  config.mode = parse_mode(mode);
  auto cert = witness::extract_witness(alpha, config);
  std::string json = cert.to_json();
  if (out_path.empty()) {
    out << json;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  file << json;
  if (!file) fail("IoError", "cannot write " + out_path);
  out << "wrote " << out_path << "\n";
  out << "mode = " << cert.mode << ", q = " << cert.q << ", levels u/t/v = " << cert.u << "/"
      << cert.t << "/" << cert.v << "\n";
  out << "frame order |A| = " << cert.a_order << ", |B| = " << cert.b_order << "\n";
  out << "witness element: " << cert.entries.size() << " commutator entries, z in "
      << cert.closure << "\n";
  out << "quotient order bound = " << cert.codim_bound << "\n";
  return 0;
}

int cmd_witness_verify(const std::string& cert_path, bool quiet, std::ostream& out) {
  auto cert = witness::WitnessCertificate::load_file(cert_path);
  witness::RunConfig config;
  auto report = witness::verify_certificate(cert, config);
  if (!quiet)
    for (const auto& line : report.checks) out << line << "\n";
  for (const auto& line : report.failures) out << line << "\n";
  out << (report.ok ? "certificate verified" : "certificate REJECTED") << "\n";
  return report.ok ? 0 : 1;
}

std::vector<std::pair<fingrp::Perm, galg::Scalar>> parse_perm_terms(
    const std::vector<std::string>& texts, long ch) {
  std::vector<std::pair<fingrp::Perm, galg::Scalar>> terms;
  for (const auto& text : texts) {
    // Each argument may itself be a " + "-joined sum.
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(" + ", pos);
      std::string part =
          next == std::string::npos ? text.substr(pos) : text.substr(pos, next - pos);
      auto star = part.find('*');
      if (star == std::string::npos)
        fail("ParseError", "term must look like coeff*p[...], got " + part);
      galg::Scalar coeff = galg::Scalar::parse(part.substr(0, star), ch);
      fingrp::Perm g = fingrp::Perm::parse(part.substr(star + 1));
      terms.emplace_back(std::move(g), std::move(coeff));
      if (next == std::string::npos) break;
      pos = next + 3;
    }
  }
  return terms;
}

int cmd_oracle_ideal(const std::string& group_id, long ch,
                     const std::vector<std::string>& term_texts, std::ostream& out) {
  auto grp = fingrp::resolve_group(group_id);
  oracle::DenseAlgebra<fingrp::Perm> algebra(grp.element_list, ch);
  std::vector<oracle::Subspace::Vec> seeds;
  for (const auto& text : term_texts) {
    // aug(N) expands to the generators {n - 1 : n in N} of the relative
    // augmentation ideal of the named subgroup.
    if (text.size() > 5 && text.rfind("aug(", 0) == 0 && text.back() == ')') {
      auto sub = fingrp::resolve_group(text.substr(4, text.size() - 5));
      const galg::Scalar one = galg::Scalar::one(ch);
      for (const auto& n : sub.element_list) {
        if (n.is_identity()) continue;
        if (!std::binary_search(grp.element_list.begin(), grp.element_list.end(), n))
          fail("BadElementList", text + " is not a subgroup of " + grp.id);
        seeds.push_back(algebra.from_terms(
            {{n, one}, {fingrp::Perm::identity(grp.degree), -one}}));
      }
    } else {
      seeds.push_back(algebra.from_terms(parse_perm_terms({text}, ch)));
    }
  }
  auto span = oracle::ideal_span(algebra, grp.generators, seeds);
  out << "group order = " << algebra.order() << "\n";
  out << "ideal dimension = " << span.dimension() << "\n";
  out << "codimension = " << oracle::codimension(algebra.order(), span) << "\n";
  return 0;
}

int cmd_oracle_augmentation(const std::string& group_id, long ch, const std::string& sub_id,
                            std::ostream& out) {
  auto grp = fingrp::resolve_group(group_id);
  oracle::DenseAlgebra<fingrp::Perm> algebra(grp.element_list, ch);
  int expected = 1;
  oracle::Subspace span(algebra.order(), ch);
  if (sub_id.empty()) {
    span = oracle::augmentation_ideal(algebra);
  } else {
    auto sub = fingrp::resolve_group(sub_id);
    const galg::Scalar one = galg::Scalar::one(ch);
    std::vector<oracle::Subspace::Vec> seeds;
    for (const auto& n : sub.element_list) {
      if (n.is_identity()) continue;
      if (!std::binary_search(grp.element_list.begin(), grp.element_list.end(), n))
        fail("BadElementList", sub_id + " is not a subgroup of " + grp.id);
      seeds.push_back(
          algebra.from_terms({{n, one}, {fingrp::Perm::identity(grp.degree), -one}}));
    }
    span = oracle::ideal_span(algebra, grp.generators, seeds);
    expected = static_cast<int>(grp.element_list.size() / sub.element_list.size());
  }
  int codim = oracle::codimension(algebra.order(), span);
  out << "group order = " << algebra.order() << "\n";
  out << "augmentation ideal dimension = " << span.dimension() << "\n";
  out << "codimension = " << codim << " (index " << expected << ")\n";
  return codim == expected ? 0 : 1;
}

int cmd_oracle_crosscheck(const std::string& group_id, long ch, std::uint64_t seed, int rounds,
                          std::ostream& out) {
  auto grp = fingrp::resolve_group(group_id);
  oracle::DenseAlgebra<fingrp::Perm> algebra(grp.element_list, ch);
  Rng rng(seed);
  const int order = algebra.order();
  auto random_vec = [&] {
    auto v = algebra.zero_vec();
    for (int k = 0; k < 3; ++k) {
      long c = ch == 0 ? static_cast<long>(rng.below(19)) - 9
                       : static_cast<long>(1 + rng.below(static_cast<std::size_t>(ch - 1)));
      if (c == 0) c = 1;
      int i = static_cast<int>(rng.below(static_cast<std::size_t>(order)));
      v[static_cast<std::size_t>(i)] =
          v[static_cast<std::size_t>(i)] + galg::Scalar::from_integer(c, ch);
    }
    return v;
  };
  int bad = 0;
  for (int round = 0; round < rounds; ++round) {
    auto va = random_vec();
    auto vb = random_vec();
    auto table = algebra.mul_vec(va, vb);
    // Independent path: convolve through element composition, not the table.
    auto direct = algebra.zero_vec();
    for (int i = 0; i < order; ++i) {
      if (va[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; j < order; ++j) {
        if (vb[static_cast<std::size_t>(j)].is_zero()) continue;
        int k = algebra.index_of(
            fingrp::GroupOps<fingrp::Perm>::mul(algebra.element(i), algebra.element(j)));
        direct[static_cast<std::size_t>(k)] =
            direct[static_cast<std::size_t>(k)] +
            va[static_cast<std::size_t>(i)] * vb[static_cast<std::size_t>(j)];
      }
    }
    if (!(table == direct)) ++bad;
  }
  out << "group order = " << order << ", rounds = " << rounds << ", seed = " << seed << "\n";
  out << (bad == 0 ? "table and direct convolution agree"
                   : "DISAGREEMENT in " + std::to_string(bad) + " rounds")
      << "\n";
  return bad == 0 ? 0 : 1;
}

int cmd_suite(const std::string& which, std::uint64_t seed, int rounds, std::ostream& out) {
  witness::SuiteResult result;
  if (which == "lemmas") {
    result = witness::suite_lemmas(seed, rounds < 0 ? 5 : rounds);
  } else if (which == "tower") {
    result = witness::suite_tower(seed, rounds < 0 ? 200 : rounds);
  } else if (which == "witness") {
    result = witness::suite_witness(seed, rounds < 0 ? 3 : rounds);
  } else {
    fail("Usage", "unknown suite " + which);
  }
  for (const auto& line : result.log) out << line << "\n";
  out << "suite " << result.name << ": " << result.checks << " checks, " << result.failures
      << " failures\n";
  return result.ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact wreath tower algebra and ideal witness toolkit"};
  app.name("wreathcert");
  app.require_subcommand(1);
  int result = 0;

  auto* catalog_cmd = app.add_subcommand("catalog", "inspect the built-in group catalog");
  catalog_cmd->require_subcommand(1);
  auto* cat_list = catalog_cmd->add_subcommand("list", "list catalog and helper groups");
  cat_list->callback([&] { result = cmd_catalog_list(out); });
  std::string cat_id;
  auto* cat_verify = catalog_cmd->add_subcommand("verify", "recheck a simplicity certificate");
  cat_verify->add_option("--group", cat_id, "catalog group id")->required();
  cat_verify->callback([&] { result = cmd_catalog_verify(cat_id, out); });

  auto* tower_cmd = app.add_subcommand("tower", "work with tower elements");
  tower_cmd->require_subcommand(1);
  std::string tw_spec, tw_x, tw_y;
  int tw_level = 0, tw_stages = 4, tw_horizon = 3;
  bool tw_eval = false;
  unsigned long tw_digit_cap = tower::kDefaultOrderDigitCap;
  const std::string elem_help = "canonical element text, or @file";

  auto* tw_info = tower_cmd->add_subcommand("info", "describe a tower");
  tw_info->add_option("--spec", tw_spec, "tower spec JSON file")->required();
  tw_info->add_option("--stages", tw_stages, "stages to describe (default 4)");
  tw_info->callback([&] { result = cmd_tower_info(tw_spec, tw_stages, out); });

  auto* tw_order = tower_cmd->add_subcommand("order", "symbolic order of one stage");
  tw_order->add_option("--spec", tw_spec, "tower spec JSON file")->required();
  tw_order->add_option("--level", tw_level, "stage index (1-based)")->required();
  tw_order->add_flag("--evaluate", tw_eval, "also print the exact integer");
  tw_order->add_option("--digit-cap", tw_digit_cap, "decimal digit cap for evaluation");
  tw_order->callback(
      [&] { result = cmd_tower_order(tw_spec, tw_level, tw_eval, tw_digit_cap, out); });

  auto* tw_mul = tower_cmd->add_subcommand("mul", "multiply two elements");
  tw_mul->add_option("--spec", tw_spec, "tower spec JSON file")->required();
  tw_mul->add_option("--x", tw_x, elem_help)->required();
  tw_mul->add_option("--y", tw_y, elem_help)->required();
  tw_mul->callback([&] { result = cmd_tower_mul(tw_spec, tw_x, tw_y, out); });

  auto* tw_inv = tower_cmd->add_subcommand("inv", "invert an element");
  tw_inv->add_option("--spec", tw_spec, "tower spec JSON file")->required();
  tw_inv->add_option("--x", tw_x, elem_help)->required();
  tw_inv->callback([&] { result = cmd_tower_inv(tw_spec, tw_x, out); });

  auto* tw_conj = tower_cmd->add_subcommand("conj", "conjugate x by g");
  tw_conj->add_option("--spec", tw_spec, "tower spec JSON file")->required();
  tw_conj->add_option("--x", tw_x, elem_help)->required();
  tw_conj->add_option("--g", tw_y, "conjugator, " + elem_help)->required();
  tw_conj->callback([&] { result = cmd_tower_conj(tw_spec, tw_x, tw_y, out); });

  auto* tw_project = tower_cmd->add_subcommand("project", "project onto a lower stage");
  tw_project->add_option("--spec", tw_spec, "tower spec JSON file")->required();
  tw_project->add_option("--x", tw_x, elem_help)->required();
  tw_project->add_option("--level", tw_level, "target stage")->required();
  tw_project->callback([&] { result = cmd_tower_project(tw_spec, tw_x, tw_level, out); });

  auto* tw_closure = tower_cmd->add_subcommand("closure", "symbolic normal closure");
  tw_closure->add_option("--spec", tw_spec, "tower spec JSON file")->required();
  tw_closure->add_option("--x", tw_x, elem_help)->required();
  tw_closure->add_option("--horizon", tw_horizon, "extra stages to check (default 3)");
  tw_closure->callback([&] { result = cmd_tower_closure(tw_spec, tw_x, tw_horizon, out); });

  auto* tw_lattice = tower_cmd->add_subcommand("lattice", "normal subgroups of one stage");
  tw_lattice->add_option("--spec", tw_spec, "tower spec JSON file")->required();
  tw_lattice->add_option("--level", tw_level, "group stage (G_level)")->required();
  tw_lattice->callback([&] { result = cmd_tower_lattice(tw_spec, tw_level, out); });

  auto* algebra_cmd = app.add_subcommand("algebra", "exact group algebra arithmetic");
  algebra_cmd->require_subcommand(1);
  std::string al_spec, al_a, al_b;
  long al_char = 0;

  auto* al_mul = algebra_cmd->add_subcommand("mul", "multiply two algebra elements");
  al_mul->add_option("--spec", al_spec, "tower spec JSON file")->required();
  al_mul->add_option("--char", al_char, "field characteristic (0 or prime, default 0)");
  al_mul->add_option("--a", al_a, "left element, text or @file")->required();
  al_mul->add_option("--b", al_b, "right element, text or @file")->required();
  al_mul->callback([&] { result = cmd_algebra_mul(al_spec, al_char, al_a, al_b, out); });

  auto* al_conj = algebra_cmd->add_subcommand("conj", "conjugate an algebra element");
  al_conj->add_option("--spec", al_spec, "tower spec JSON file")->required();
  al_conj->add_option("--char", al_char, "field characteristic (0 or prime, default 0)");
  al_conj->add_option("--a", al_a, "algebra element, text or @file")->required();
  al_conj->add_option("--g", al_b, "group element conjugator, " + elem_help)->required();
  al_conj->callback([&] { result = cmd_algebra_conj(al_spec, al_char, al_a, al_b, out); });

  auto* al_norm = algebra_cmd->add_subcommand("normalize", "translate so the identity carries "
                                                           "a nonzero coefficient");
  al_norm->add_option("--spec", al_spec, "tower spec JSON file")->required();
  al_norm->add_option("--char", al_char, "field characteristic (0 or prime, default 0)");
  al_norm->add_option("--a", al_a, "algebra element, text or @file")->required();
  al_norm->callback([&] { result = cmd_algebra_normalize(al_spec, al_char, al_a, out); });

  auto* witness_cmd = app.add_subcommand("witness", "extract and verify ideal witnesses");
  witness_cmd->require_subcommand(1);
  std::string wt_spec, wt_alpha, wt_out, wt_mode = "auto", wt_cert;
  long wt_char = 0;
  std::uint64_t wt_seed = 0;
  bool wt_quiet = false;

  auto* wt_extract = witness_cmd->add_subcommand(
      "extract", "derive a group element witness from a nonzero algebra element");
  wt_extract->add_option("--spec", wt_spec, "tower spec JSON file")->required();
  wt_extract->add_option("--char", wt_char, "field characteristic (0 or prime, default 0)");
  wt_extract->add_option("--alpha", wt_alpha, "nonzero algebra element, text or @file")
      ->required();
  wt_extract->add_option("--out", wt_out, "write the certificate JSON here");
  wt_extract->add_option("--seed", wt_seed, "seed for recorded spot samples");
  wt_extract->add_option("--mode", wt_mode, "frame mode")
      ->check(CLI::IsMember({"auto", "enumerative", "structural"}));
  wt_extract->callback([&] {
    result = cmd_witness_extract(wt_spec, wt_char, wt_alpha, wt_out, wt_seed, wt_mode, out);
  });

  auto* wt_verify = witness_cmd->add_subcommand("verify", "replay a certificate");
  wt_verify->add_option("--cert", wt_cert, "certificate JSON file")->required();
  wt_verify->add_flag("--quiet", wt_quiet, "print failures and the verdict only");
  wt_verify->callback([&] { result = cmd_witness_verify(wt_cert, wt_quiet, out); });

  auto* oracle_cmd = app.add_subcommand("oracle", "dense small-group ground truth");
  oracle_cmd->require_subcommand(1);
  std::string or_group, or_sub;
  long or_char = 0;
  std::vector<std::string> or_terms;
  std::uint64_t or_seed = 0;
  int or_rounds = 50;

  auto* or_ideal = oracle_cmd->add_subcommand("ideal", "two-sided ideal span of an element");
  or_ideal->add_option("--group", or_group, "catalog or helper group id")->required();
  or_ideal->add_option("--char", or_char, "field characteristic (0 or prime, default 0)");
  or_ideal
      ->add_option("--gens", or_terms,
                   "seed: terms like '1*p[1,0,2] + -1*p[0,1,2]', or aug(N) (repeatable)")
      ->required();
  or_ideal->callback([&] { result = cmd_oracle_ideal(or_group, or_char, or_terms, out); });

  auto* or_aug = oracle_cmd->add_subcommand("augmentation", "augmentation ideal dimensions");
  or_aug->add_option("--group", or_group, "catalog or helper group id")->required();
  or_aug->add_option("--char", or_char, "field characteristic (0 or prime, default 0)");
  or_aug->add_option("--subgroup", or_sub,
                     "normal subgroup id; codimension must equal the index");
  or_aug->callback([&] { result = cmd_oracle_augmentation(or_group, or_char, or_sub, out); });

  auto* or_cross = oracle_cmd->add_subcommand(
      "crosscheck", "multiplication table against direct convolution");
  or_cross->add_option("--group", or_group, "catalog or helper group id")->required();
  or_cross->add_option("--char", or_char, "field characteristic (0 or prime, default 0)");
  or_cross->add_option("--seed", or_seed, "random seed");
  or_cross->add_option("--rounds", or_rounds, "rounds (default 50)");
  or_cross->callback(
      [&] { result = cmd_oracle_crosscheck(or_group, or_char, or_seed, or_rounds, out); });

  auto* suite_cmd = app.add_subcommand("suite", "seeded property suites");
  suite_cmd->require_subcommand(1);
  std::uint64_t su_seed = 0;
  int su_rounds = -1;
  for (const std::string which : {"lemmas", "tower", "witness"}) {
    auto* sub = suite_cmd->add_subcommand(which, "run the " + which + " suite");
    sub->add_option("--seed", su_seed, "random seed");
    sub->add_option("--rounds", su_rounds, "randomized rounds (suite default if omitted)");
    sub->callback([&, which] { result = cmd_suite(which, su_seed, su_rounds, out); });
  }

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("wreathcert");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_failure(e.code()) ? 2 : 1;
  }
  return result;
}

}  // namespace wreathcert::cli
