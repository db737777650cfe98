// Acceptance gate: ten end-to-end checks against exact oracles, one line of
// output per criterion. Every check is exact; no tolerances anywhere.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wreathcert/error.hpp"
#include "wreathcert/fingrp/catalog.hpp"
#include "wreathcert/fingrp/lemmas.hpp"
#include "wreathcert/fingrp/perm.hpp"
#include "wreathcert/fingrp/subgroup.hpp"
#include "wreathcert/galg/element.hpp"
#include "wreathcert/galg/scalar.hpp"
#include "wreathcert/oracle/dense.hpp"
#include "wreathcert/tower/element.hpp"
#include "wreathcert/tower/imprimitive.hpp"
#include "wreathcert/tower/normal.hpp"
#include "wreathcert/tower/order_expr.hpp"
#include "wreathcert/tower/spec.hpp"
#include "wreathcert/util.hpp"
#include "wreathcert/witness/beta.hpp"
#include "wreathcert/witness/frames.hpp"
#include "wreathcert/witness/pipeline.hpp"
#include "wreathcert/witness/verify.hpp"

using namespace wreathcert;
using fingrp::Perm;
using galg::AlgebraElement;
using galg::Scalar;
using tower::Element;

namespace {

struct CheckFailure {
  std::string message;
};

#define REQUIRE(cond, msg)                                              \
  do {                                                                  \
    if (!(cond)) {                                                      \
      std::ostringstream os_;                                           \
      os_ << msg << " [acceptance.cpp:" << __LINE__ << "]";             \
      throw CheckFailure{os_.str()};                                    \
    }                                                                   \
  } while (0)

int g_failures = 0;

void criterion(int number, const std::string& title, double limit_seconds,
               const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    body();
  } catch (const CheckFailure& f) {
    failure = f.message;
  } catch (const std::exception& e) {
    failure = e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (failure.empty() && limit_seconds > 0 && elapsed > limit_seconds) {
    std::ostringstream os;
    os << "runtime " << elapsed << "s exceeds the " << limit_seconds << "s limit";
    failure = os.str();
  }
  char line[512];
  if (failure.empty()) {
    std::snprintf(line, sizeof(line), "[PASS] %2d %s (%.2fs)", number, title.c_str(),
                  elapsed);
    std::cout << line << "\n";
  } else {
    std::snprintf(line, sizeof(line), "[FAIL] %2d %s: %s", number, title.c_str(),
                  failure.c_str());
    std::cout << line << "\n";
    ++g_failures;
  }
  std::cout.flush();
}

tower::TowerSpec a5_spec() {
  tower::TowerSpec spec;
  spec.name = "a5";
  spec.cycle = {"A5"};
  tower::validate_spec(spec);
  return spec;
}

Element leaf(const std::string& text) { return Element::leaf(Perm::parse(text)); }

AlgebraElement parse_a5(const tower::TowerSpec& spec, const std::string& text) {
  return AlgebraElement::parse(text, spec, 0);
}

// Criterion 1 worker, reused by criterion 10: returns certificate text plus a
// replay log so byte-identity can be compared across runs.
std::pair<std::string, std::string> run_end_to_end(const tower::TowerSpec& spec,
                                                   std::uint64_t seed) {
  witness::RunConfig config;
  config.seed = seed;
  auto alpha = parse_a5(spec, "1*p[0,1,2,3,4] + -1*p[1,2,0,3,4]");
  auto cert = witness::extract_witness(alpha, config);

  REQUIRE(cert.q == 2, "expected q = 2, got " << cert.q);
  REQUIRE(cert.u == 1 && cert.t == 2 && cert.v == 3,
          "expected levels u,t,v = 1,2,3, got " << cert.u << "," << cert.t << ","
                                                << cert.v);
  REQUIRE(cert.a_order == 8, "expected |A| = 8, got " << cert.a_order);
  REQUIRE(cert.b_order == "2^8", "expected |B| = 256 = 2^8, got " << cert.b_order);
  REQUIRE(cert.closure == "T(3)", "expected closure T(3), got " << cert.closure);
  REQUIRE(cert.bound_level == 3, "expected bound level 3");
  auto g3 = tower::group_order(spec, 3)->to_string();
  REQUIRE(cert.codim_bound == g3,
          "codim bound " << cert.codim_bound << " != symbolic |G_3| = " << g3);

  auto report = witness::verify_certificate(cert, config);
  std::ostringstream log;
  for (const auto& line : report.checks) log << line << "\n";
  for (const auto& line : report.failures) log << "failure: " << line << "\n";
  REQUIRE(report.ok, "certificate replay failed: "
                         << (report.failures.empty() ? "?" : report.failures[0]));
  REQUIRE(report.failures.empty(), "replay reported failures");
  return {cert.to_json(), log.str()};
}

// Criterion 7 worker, reused by criterion 10: returns the log of both seeded
// equivalence sweeps.
std::string run_equivalence_sweeps(const tower::TowerSpec& spec, std::uint64_t seed) {
  std::ostringstream log;
  const auto& g1 = spec.group_at(1).element_list;
  Rng rng(seed);

  auto random_leaf = [&] { return Element::leaf(g1[rng.below(g1.size())]); };
  auto random_level2 = [&] {
    Element act = random_leaf();
    std::vector<Element::BaseEntry> base;
    std::set<Element> used;
    std::size_t entries = rng.below(3);
    for (std::size_t k = 0; k < entries; ++k) {
      Element key = random_leaf();
      if (!used.insert(key).second) continue;
      base.emplace_back(std::move(key), g1[rng.below(g1.size())]);
    }
    return Element::wreath(2, act, std::move(base));
  };

  for (int round = 0; round < 1000; ++round) {
    Element x = random_level2();
    Element y = random_level2();
    Element xy = tower::mul(x, y);
    Perm image = fingrp::compose(tower::to_imprimitive_perm(x, spec),
                                 tower::to_imprimitive_perm(y, spec));
    REQUIRE(tower::to_imprimitive_perm(xy, spec) == image,
            "imprimitive image mismatch at round " << round);
    if (round % 100 == 0) log << round << " " << xy.to_string() << "\n";
  }

  oracle::DenseAlgebra<Perm> dense(g1, 0);
  auto random_sparse = [&] {
    AlgebraElement a(spec, 0);
    for (int k = 0; k < 3; ++k) {
      long coeff = static_cast<long>(rng.below(19)) - 9;
      a.add_term(Element::leaf(g1[rng.below(g1.size())]), Scalar::from_integer(coeff, 0));
    }
    return a;
  };
  auto to_vec = [&](const AlgebraElement& a) {
    auto v = dense.zero_vec();
    for (const auto& [g, c] : a.terms())
      v[static_cast<std::size_t>(dense.index_of(g.leaf_perm()))] =
          v[static_cast<std::size_t>(dense.index_of(g.leaf_perm()))] + c;
    return v;
  };
  for (int round = 0; round < 500; ++round) {
    AlgebraElement a = random_sparse();
    AlgebraElement b = random_sparse();
    AlgebraElement ab = a * b;
    auto expected = dense.mul_vec(to_vec(a), to_vec(b));
    auto got = to_vec(ab);
    REQUIRE(got == expected, "sparse/dense product mismatch at round " << round);
    if (round % 100 == 0) log << round << " " << ab.to_string() << "\n";
  }
  return log.str();
}

void check_beta_chain_for(const tower::TowerSpec& spec, const std::string& alpha_text) {
  witness::RunConfig config;
  auto alpha = parse_a5(spec, alpha_text);
  auto norm = galg::normalize_input(alpha);
  auto plan = witness::pick_levels(spec, 0, norm.support_level);
  auto fa = witness::build_frame_a(spec, norm, plan, config);
  auto chain = witness::run_beta_chain(norm, fa);

  std::size_t n = norm.xs.size() - 1;
  REQUIRE(chain.betas.size() == n + 1, "chain length != n+1");
  REQUIRE(chain.betas[n] == norm.alpha, "beta_n must be the normalized input");
  auto unit = AlgebraElement::unit(spec, 0);
  auto term_of = [&](const Element& g) {
    return AlgebraElement::term(spec, 0, Scalar::one(0), g);
  };

  for (std::size_t s = n; s >= 1; --s) {
    const auto& beta_s = chain.betas[s];
    // Defining combination for the step.
    auto lhs = term_of(fa.zs[s]) * beta_s -
               term_of(tower::inv(fa.ys[s])) * beta_s * term_of(fa.ys[s]);
    REQUIRE(lhs == chain.betas[s - 1], "step " << s << " disagrees with the chain");

    // Coset split: every term lies in exactly one A * xs[i]^-1.
    auto in_frame = [&](const Element& x) {
      const auto& key = x.to_string();
      auto it = std::lower_bound(
          fa.ser_index.begin(), fa.ser_index.end(), key,
          [](const auto& entry, const std::string& s) { return entry.first < s; });
      return it != fa.ser_index.end() && it->first == key;
    };
    std::vector<AlgebraElement> parts(n + 1, AlgebraElement(spec, 0));
    for (const auto& [g, c] : beta_s.terms()) {
      int home = -1;
      for (std::size_t i = 0; i <= n; ++i) {
        if (in_frame(tower::mul(g, norm.xs[i]))) {
          REQUIRE(home < 0, "support term lies in two cosets");
          home = static_cast<int>(i);
        }
      }
      REQUIRE(home >= 0, "support term outside every frame coset");
      parts[static_cast<std::size_t>(home)].add_term(
          tower::mul(g, norm.xs[static_cast<std::size_t>(home)]), c);
    }

    // Closed form of the step: sum over cosets of beta_si (z_s - [y_s, x_i]) x_i^-1.
    AlgebraElement rhs(spec, 0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (parts[i].is_zero()) continue;
      auto bracket = term_of(fa.zs[s]) - term_of(tower::commutator(fa.ys[s], norm.xs[i]));
      rhs = rhs + parts[i] * bracket * term_of(tower::inv(norm.xs[i]));
    }
    REQUIRE(lhs == rhs, "closed form of step " << s << " disagrees");
  }

  // beta_0 = k_0 (z_n - 1) ... (z_1 - 1), identity coefficient (-1)^n k_0.
  REQUIRE(chain.matches_closed, "chain does not match its closed form");
  REQUIRE(!chain.betas[0].is_zero(), "beta_0 vanished");
  auto closed = AlgebraElement::term(spec, 0, norm.ks[0], tower::identity(spec));
  for (std::size_t s = n; s >= 1; --s) closed = closed * (term_of(fa.zs[s]) - unit);
  REQUIRE(chain.betas[0] == closed, "beta_0 != k_0 (z_n - 1) ... (z_1 - 1)");
  Scalar want = norm.ks[0];
  if (n % 2 == 1) want = Scalar::zero(0) - want;
  REQUIRE(chain.betas[0].coefficient(tower::identity(spec)) == want,
          "identity coefficient of beta_0 is not (-1)^n k_0");
}

void check_b_sum_for(const tower::TowerSpec& spec, const std::string& alpha_text,
                     std::size_t expected_a_order) {
  witness::RunConfig config;
  config.mode = witness::FrameMode::Enumerative;
  auto norm = galg::normalize_input(parse_a5(spec, alpha_text));
  auto plan = witness::pick_levels(spec, 0, norm.support_level);
  auto fa = witness::build_frame_a(spec, norm, plan, config);
  REQUIRE(fa.q == 2, "expected q = 2");
  REQUIRE(fa.a_elements.size() == expected_a_order,
          "expected |A| = " << expected_a_order << ", got " << fa.a_elements.size());

  std::vector<Element> conjugators(fa.a_elements.begin() + 1, fa.a_elements.end());
  auto fb = witness::build_frame_b(spec, fa, conjugators, 0, plan, config);
  REQUIRE(fb.enumerative, "frame B must be enumerated");
  std::size_t b_size = std::size_t{1} << fa.a_elements.size();
  REQUIRE(fb.b_elements.size() == b_size, "expected |B| = 2^|A|");
  REQUIRE(fb.entries.size() == conjugators.size(), "one entry per conjugator");

  for (std::size_t idx = 0; idx < conjugators.size(); ++idx) {
    const auto& entry = fb.entries[idx];
    const Element& a = entry.a;
    REQUIRE(a == conjugators[idx], "entry order must follow the conjugators");
    REQUIRE(entry.enumerative_ok, "library sum identity failed");
    REQUIRE(entry.witness_ok, "witness element failed its exact check");

    // Exhaustive centralizer count vs the orbit formula.
    std::size_t fixed = 0;
    for (const auto& b : fb.b_elements)
      if (tower::conj(b, a) == b) ++fixed;
    // Orbits of right translation by a on the coordinates A.
    std::vector<bool> seen(fa.a_elements.size(), false);
    int orbits = 0;
    for (std::size_t i = 0; i < fa.a_elements.size(); ++i) {
      if (seen[i]) continue;
      ++orbits;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = static_cast<std::size_t>(fa.index_of(tower::mul(fa.a_elements[j], a)));
      }
    }
    REQUIRE(orbits == entry.orbit_count, "orbit count disagrees with the frame");
    REQUIRE(fixed == (std::size_t{1} << orbits),
            "|C_B(a)| = " << fixed << " but q^orbits = " << (std::size_t{1} << orbits));
    REQUIRE(entry.centralizer_order == "2^" + std::to_string(orbits),
            "centralizer order text disagrees");

    // Enumerated sum identity: sum over B of (a^-1)^b equals
    // |C_B(a)| * (sum of the subgroup {b^-1 b^(a^-1)}) * a^-1.
    Element a_inv = tower::inv(a);
    AlgebraElement lhs(spec, 0);
    for (const auto& b : fb.b_elements)
      lhs.add_term(tower::conj(a_inv, b), Scalar::one(0));
    std::set<Element> image;
    for (const auto& b : fb.b_elements)
      image.insert(tower::mul(tower::inv(b), tower::conj(b, a_inv)));
    REQUIRE(image.size() * fixed == fb.b_elements.size(),
            "image subgroup size times centralizer must be |B|");
    AlgebraElement hb(spec, 0);
    for (const auto& h : image) hb.add_term(h, Scalar::one(0));
    auto rhs = Scalar::from_integer(static_cast<long>(fixed), 0) *
               (hb * AlgebraElement::term(spec, 0, Scalar::one(0), a_inv));
    REQUIRE(lhs == rhs, "B-sum identity failed for a conjugator");
  }
}

}  // namespace

int main() {
  auto spec = a5_spec();

  criterion(1, "end-to-end witness on 1 - (1 2 3) in characteristic 0", 60.0,
            [&] { run_end_to_end(spec, 0); });

  criterion(2, "elimination chain: step identity and closed form", 0.0, [&] {
    check_beta_chain_for(spec, "1*p[0,1,2,3,4] + -1*p[1,2,0,3,4]");
    check_beta_chain_for(spec, "1*p[0,1,2,3,4] + 2*p[1,2,0,3,4] + 3*p[3,1,2,4,0]");
  });

  criterion(3, "enumerated B-sum identity for |A| = 2, 4, 8", 10.0, [&] {
    check_b_sum_for(spec, "5*p[0,1,2,3,4]", 2);
    check_b_sum_for(spec, "1*p[0,1,2,3,4] + -1*p[1,0,3,2,4]", 4);
    check_b_sum_for(spec, "1*p[0,1,2,3,4] + -1*p[1,2,0,3,4]", 8);
  });

  criterion(4, "simplicity audit of the catalog plus a non-simple control", 10.0, [&] {
    int audited = 0;
    for (const auto& desc : fingrp::catalog()) {
      if (desc.metadata_only) continue;
      auto report = fingrp::verify_simplicity(desc);
      REQUIRE(report.simple, desc.id << " failed its simplicity audit");
      REQUIRE(!report.witness.has_value(), desc.id << " produced a witness");
      REQUIRE(!report.checks.empty(), desc.id << " ran no class checks");
      for (const auto& check : report.checks)
        REQUIRE(check.closure_size == desc.order,
                desc.id << " class closure is proper");
      ++audited;
    }
    REQUIRE(audited == 4, "expected 4 materialized catalog groups");

    auto s3 = fingrp::resolve_group("S3");
    auto control =
        fingrp::verify_simplicity("S3", s3.degree, s3.generators, s3.element_list);
    REQUIRE(!control.simple, "control group passed the audit");
    REQUIRE(control.witness.has_value(), "control produced no witness");
    REQUIRE(control.witness->size() == 3, "control witness should be the 3-element core");
  });

  criterion(5, "commutator with an automorphism on a product of two factors", 30.0, [&] {
    auto h = fingrp::resolve_group("A5xA5");
    Perm id10 = Perm::identity(10);

    Perm swap = Perm::parse("p[5,6,7,8,9,0,1,2,3,4]");
    auto full = fingrp::commutator_with_aut(h.element_list, swap, id10);
    REQUIRE(full == h.element_list, "factor swap must regenerate the whole product");
    auto swap_report = fingrp::check_product_lemma(h.element_list, swap, id10);
    REQUIRE(swap_report.holds && swap_report.group_order == 3600 &&
                swap_report.commutator_order == 3600,
            "product lemma report disagrees for the swap");

    Perm inner = Perm::parse("p[1,2,0,3,4,5,6,7,8,9]");
    auto part = fingrp::commutator_with_aut(h.element_list, inner, id10);
    auto a5 = fingrp::find_catalog_group("A5");
    REQUIRE(a5 != nullptr, "catalog lost A5");
    std::vector<Perm> embedded;
    for (const auto& gen : a5->generators) {
      std::vector<int> images(10);
      for (int i = 0; i < 10; ++i) images[static_cast<std::size_t>(i)] = i;
      for (int i = 0; i < 5; ++i) images[static_cast<std::size_t>(i)] = gen[i];
      embedded.push_back(Perm(std::move(images)));
    }
    auto first_factor = fingrp::generated_subgroup(embedded, id10);
    REQUIRE(part == first_factor, "inner automorphism must give exactly A5 x 1");
    REQUIRE(part.size() == 60, "expected |A5 x 1| = 60");
    auto inner_report = fingrp::check_product_lemma(h.element_list, inner, id10);
    REQUIRE(!inner_report.holds && inner_report.commutator_order == 60,
            "product lemma report disagrees for the inner case");
  });

  criterion(6, "[B,a] is normal: wreath cube and the frame from criterion 1", 0.0, [&] {
    auto h = fingrp::resolve_group("C3wrC3");
    Perm id9 = Perm::identity(9);
    std::vector<Perm> b_gens = {Perm::parse("p[1,2,0,3,4,5,6,7,8]"),
                                Perm::parse("p[0,1,2,4,5,3,6,7,8]"),
                                Perm::parse("p[0,1,2,3,4,5,7,8,6]")};
    for (const auto& b : b_gens)
      REQUIRE(fingrp::set_contains(h.element_list, b), "base generator escapes the group");
    auto b_sorted = fingrp::generated_subgroup(b_gens, id9);
    REQUIRE(b_sorted.size() == 27, "base subgroup must have order 27");
    auto report = fingrp::check_metabelian_lemma(h.element_list, h.generators, b_sorted,
                                                 b_gens, id9);
    REQUIRE(report.b_abelian, "base subgroup must be abelian");
    REQUIRE(report.contains_derived, "derived subgroup must land in the base");
    REQUIRE(report.all_normal, "some [B,a] failed normality: " << report.first_failure);
    REQUIRE(report.checked == 81, "every element of the wreath cube must be checked");

    // The frame H = BA arising in the criterion-1 run: |H| = 256 * 8 = 2048.
    witness::RunConfig config;
    auto norm =
        galg::normalize_input(parse_a5(spec, "1*p[0,1,2,3,4] + -1*p[1,2,0,3,4]"));
    auto plan = witness::pick_levels(spec, 0, norm.support_level);
    auto fa = witness::build_frame_a(spec, norm, plan, config);
    std::vector<Element> conjugators(fa.a_elements.begin() + 1, fa.a_elements.end());
    auto fb = witness::build_frame_b(spec, fa, conjugators, 0, plan, config);
    REQUIRE(fb.enumerative && fb.b_elements.size() == 256, "frame B must be enumerated");

    Element id = tower::identity(spec);
    std::vector<Element> h_gens = fa.a_gens;
    h_gens.push_back(fb.b);
    auto frame_h = fingrp::generated_subgroup(h_gens, id);
    REQUIRE(frame_h.size() == 2048, "expected |BA| = 2048, got " << frame_h.size());
    REQUIRE(frame_h.size() <= 10000, "frame exceeds the audit bound");

    for (const auto& a : fa.a_elements) {
      if (a.is_identity()) continue;
      std::set<Element> comm_gens;
      for (const auto& b : fb.b_elements)
        comm_gens.insert(fingrp::commutator_of(b, a));
      auto sub = fingrp::generated_subgroup(
          std::vector<Element>(comm_gens.begin(), comm_gens.end()), id);
      REQUIRE(fingrp::is_normal_under(sub, h_gens),
              "[B,a] is not normal under the frame generators");
    }
  });

  criterion(7, "tower vs imprimitive oracle, sparse vs dense oracle", 30.0,
            [&] { run_equivalence_sweeps(spec, 99); });

  criterion(8, "normal lattice, decompose/recompose, closure consistency", 0.0, [&] {
    auto entries = tower::lattice(spec, 3);
    REQUIRE(entries.size() == 3, "lattice(spec, 3) must have exactly 3 entries");
    REQUIRE(entries[0].to_string() == "M_3" && entries[1].to_string() == "M_2M_3" &&
                entries[2].to_string() == "M_1M_2M_3",
            "lattice entries are off");

    const auto& g1 = spec.group_at(1).element_list;
    Rng rng(2026);
    std::function<Element(int)> random_elem = [&](int level) -> Element {
      if (level <= 1) return Element::leaf(g1[rng.below(g1.size())]);
      Element act = random_elem(level - 1);
      std::vector<Element::BaseEntry> base;
      std::set<Element> used;
      std::size_t entries_n = rng.below(3);
      for (std::size_t k = 0; k < entries_n; ++k) {
        Element key = random_elem(level - 1);
        if (!used.insert(key).second) continue;
        base.emplace_back(std::move(key), g1[rng.below(g1.size())]);
      }
      return Element::wreath(level, act, std::move(base));
    };

    for (int round = 0; round < 200; ++round) {
      Element x = random_elem(3);
      for (int k = 0; k <= 3; ++k) {
        auto [n, g] = tower::decompose(x, k);
        REQUIRE(g == tower::project(x, k), "decompose factor must be the projection");
        REQUIRE(tower::project(n, k).is_identity(), "kernel part must project away");
        REQUIRE(tower::mul(n, g) == x, "decompose must recompose");
      }
      if (x.is_identity()) continue;

      int m = tower::max_T_level(x);
      REQUIRE(tower::in_T(x, m), "x must lie in T(max level)");
      REQUIRE(!tower::in_T(x, m + 1), "x must escape the next layer subgroup");
      auto closure = tower::normal_closure_symbolic(spec, x);
      REQUIRE(closure.closure == tower::SymbolicNormal::T(m),
              "closure disagrees with the membership level");
      REQUIRE(closure.certificate.ok(), "closure certificate incomplete");

      for (int j = 0; j <= 3; ++j) {
        if (x.level() > j + 1) continue;
        if (tower::project(x, j).is_identity()) continue;
        auto report = tower::centralized_factors(x, j);
        REQUIRE(report.verdict == tower::CentralizedFactorsReport::Verdict::Empty,
                "nontrivial projection must centralize no factor");
      }
    }
  });

  criterion(9, "ideal codimensions against the dense oracle", 60.0, [&] {
    auto c5 = fingrp::resolve_group("C5");
    oracle::DenseAlgebra<Perm> qc5(c5.element_list, 0);
    auto one = Scalar::one(0);
    auto seed = qc5.from_terms(
        {{Perm::identity(5), one}, {c5.generators[0], Scalar::zero(0) - one}});
    auto span5 = oracle::principal_ideal(qc5, c5.generators, seed);
    REQUIRE(oracle::codimension(qc5.order(), span5) == 1,
            "principal ideal of 1 - g in the 5-cycle algebra must have codim 1");

    auto s3 = fingrp::resolve_group("S3");
    auto a3 = fingrp::resolve_group("A3");
    oracle::DenseAlgebra<Perm> qs3(s3.element_list, 0);
    std::vector<oracle::Subspace::Vec> seeds;
    for (const auto& n : a3.element_list) {
      if (n.is_identity()) continue;
      seeds.push_back(qs3.from_terms({{n, one}, {Perm::identity(3), Scalar::zero(0) - one}}));
    }
    auto span3 = oracle::ideal_span(qs3, s3.generators, seeds);
    REQUIRE(oracle::codimension(qs3.order(), span3) == 2,
            "augmentation ideal of the 3-core in S3 must have codim 2");

    for (const auto& desc : fingrp::catalog()) {
      if (desc.metadata_only || desc.order > 2000) continue;
      Perm id = Perm::identity(desc.degree);
      oracle::DenseAlgebra<Perm> algebra(desc.element_list, 0);
      auto normals =
          oracle::all_normal_subgroups(desc.element_list, desc.generators, id);
      REQUIRE(normals.size() == 2, desc.id << " must have exactly 2 normal subgroups");
      for (const auto& sub : normals) {
        std::vector<oracle::Subspace::Vec> sub_seeds;
        for (const auto& n : sub) {
          if (n.is_identity()) continue;
          sub_seeds.push_back(
              algebra.from_terms({{n, one}, {id, Scalar::zero(0) - one}}));
        }
        auto span = oracle::ideal_span(algebra, desc.generators, sub_seeds);
        auto expected = static_cast<int>(desc.order / sub.size());
        REQUIRE(oracle::codimension(algebra.order(), span) == expected,
                desc.id << " subgroup of order " << sub.size()
                        << " gave the wrong codimension");
      }
    }
  });

  criterion(10, "byte-identical artifacts on repeated runs", 0.0, [&] {
    auto first = run_end_to_end(spec, 7);
    auto second = run_end_to_end(spec, 7);
    REQUIRE(first.first == second.first, "certificates differ between runs");
    REQUIRE(first.second == second.second, "replay logs differ between runs");
    auto log1 = run_equivalence_sweeps(spec, 99);
    auto log2 = run_equivalence_sweeps(spec, 99);
    REQUIRE(log1 == log2, "equivalence sweep logs differ between runs");
  });

  if (g_failures == 0) {
    std::cout << "acceptance: all 10 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria failed\n";
  return 1;
}
