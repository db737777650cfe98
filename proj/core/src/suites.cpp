#include "wreathcert/witness/suites.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wreathcert/error.hpp"
#include "wreathcert/fingrp/catalog.hpp"
#include "wreathcert/fingrp/lemmas.hpp"
#include "wreathcert/fingrp/perm.hpp"
#include "wreathcert/fingrp/subgroup.hpp"
#include "wreathcert/galg/element.hpp"
#include "wreathcert/galg/scalar.hpp"
#include "wreathcert/tower/element.hpp"
#include "wreathcert/tower/imprimitive.hpp"
#include "wreathcert/tower/normal.hpp"
#include "wreathcert/tower/order_expr.hpp"
#include "wreathcert/tower/spec.hpp"
#include "wreathcert/util.hpp"
#include "wreathcert/witness/certificate.hpp"
#include "wreathcert/witness/config.hpp"
#include "wreathcert/witness/pipeline.hpp"
#include "wreathcert/witness/verify.hpp"

namespace wreathcert::witness {
namespace {

void record(SuiteResult& r, bool cond, const std::string& what) {
  ++r.checks;
  if (!cond) {
    ++r.failures;
    r.ok = false;
  }
  r.log.push_back((cond ? "ok: " : "FAIL: ") + what);
}

// Aggregates a per-round property so the log stays one line per property.
struct Tally {
  int fails = 0;
  int first = -1;
  void note(bool ok, int round) {
    if (ok) return;
    ++fails;
    if (first < 0) first = round;
  }
};

void record_tally(SuiteResult& r, const Tally& t, int rounds, const std::string& what) {
  std::string msg = what + " over " + std::to_string(rounds) + " rounds";
  if (t.fails > 0)
    msg += " (" + std::to_string(t.fails) + " failures, first at round " +
           std::to_string(t.first) + ")";
  record(r, t.fails == 0, msg);
}

SuiteResult start(const std::string& name, std::uint64_t seed, int rounds) {
  SuiteResult r;
  r.name = name;
  r.seed = seed;
  r.rounds = rounds;
  r.log.push_back("suite " + name + ", seed " + std::to_string(seed) + ", rounds " +
                  std::to_string(rounds));
  return r;
}

tower::TowerSpec constant_a5() {
  tower::TowerSpec spec;
  spec.name = "a5";
  spec.cycle = {"A5"};
  tower::validate_spec(spec);
  return spec;
}

}  // namespace

SuiteResult suite_lemmas(std::uint64_t seed, int rounds) {
  SuiteResult r = start("lemmas", seed, rounds);
  Rng rng(seed);

  for (const auto& desc : fingrp::catalog()) {
    if (desc.metadata_only) {
      r.log.push_back("note: " + desc.id + " carries order data only, simplicity not recheckable");
      continue;
    }
    auto report = fingrp::verify_simplicity(desc);
    record(r, report.simple,
           desc.id + " is simple (" + std::to_string(report.checks.size()) +
               " nontrivial classes, every closure full)");
  }

  {
    auto h = fingrp::resolve_group("A5xA5");
    fingrp::Perm id = fingrp::Perm::identity(10);
    fingrp::Perm swap(std::vector<int>{5, 6, 7, 8, 9, 0, 1, 2, 3, 4});
    auto rep = fingrp::check_product_lemma(h.element_list, swap, id);
    record(r, rep.holds && rep.commutator_order == 3600,
           "A5xA5: factor-swapping conjugator yields [H,a] = H");

    fingrp::Perm inner(std::vector<int>{1, 2, 0, 3, 4, 5, 6, 7, 8, 9});
    auto rep2 = fingrp::check_product_lemma(h.element_list, inner, id);
    record(r, !rep2.holds && rep2.commutator_order == 60,
           "A5xA5: conjugator centralizing the second factor yields [H,a] = A5 x 1");

    auto rep3 = fingrp::check_product_lemma(h.element_list, id, id);
    record(r, !rep3.holds && rep3.commutator_order == 1,
           "A5xA5: trivial conjugator yields trivial commutator");
  }

  {
    auto h = fingrp::resolve_group("C2wrC2");
    fingrp::Perm id = fingrp::Perm::identity(4);
    std::vector<fingrp::Perm> bgens{fingrp::Perm(std::vector<int>{1, 0, 2, 3}),
                                    fingrp::Perm(std::vector<int>{0, 1, 3, 2})};
    auto b = fingrp::generated_subgroup(bgens, id);
    auto rep = fingrp::check_metabelian_lemma(h.element_list, h.generators, b, bgens, id);
    record(r,
           rep.b_abelian && rep.contains_derived && rep.all_normal && rep.checked == 8,
           "C2wrC2: abelian base above the derived subgroup, every [B,a] normal");
  }

  {
    auto h = fingrp::resolve_group("C3wrC3");
    fingrp::Perm id = fingrp::Perm::identity(9);
    std::vector<fingrp::Perm> bgens{fingrp::Perm(std::vector<int>{1, 2, 0, 3, 4, 5, 6, 7, 8}),
                                    fingrp::Perm(std::vector<int>{0, 1, 2, 4, 5, 3, 6, 7, 8}),
                                    fingrp::Perm(std::vector<int>{0, 1, 2, 3, 4, 5, 7, 8, 6})};
    auto b = fingrp::generated_subgroup(bgens, id);
    auto rep = fingrp::check_metabelian_lemma(h.element_list, h.generators, b, bgens, id);
    record(r,
           rep.b_abelian && rep.contains_derived && rep.all_normal && rep.checked == 81,
           "C3wrC3: abelian base above the derived subgroup, every [B,a] normal");
  }

  {
    auto h = fingrp::resolve_group("S3");
    fingrp::Perm id = fingrp::Perm::identity(3);
    std::vector<fingrp::Perm> bgens{fingrp::Perm(std::vector<int>{1, 2, 0})};
    auto b = fingrp::generated_subgroup(bgens, id);
    auto rep = fingrp::check_metabelian_lemma(h.element_list, h.generators, b, bgens, id);
    record(r,
           rep.b_abelian && rep.contains_derived && rep.all_normal && rep.checked == 6,
           "S3: rotation subgroup above the derived subgroup, every [B,a] normal");
  }

  const auto* a5 = fingrp::find_catalog_group("A5");
  Tally inner_full;
  for (int i = 0; i < rounds; ++i) {
    const auto& elems = a5->element_list;
    fingrp::Perm g = elems[1 + rng.below(elems.size() - 1)];
    auto rep = fingrp::check_product_lemma(elems, g, fingrp::Perm::identity(a5->degree));
    inner_full.note(rep.holds && rep.commutator_order == 60, i);
  }
  record_tally(r, inner_full, rounds,
               "A5: [H,a] = H for random nontrivial inner conjugators");

  return r;
}

SuiteResult suite_tower(std::uint64_t seed, int rounds) {
  SuiteResult r = start("tower", seed, rounds);
  Rng rng(seed);
  tower::TowerSpec spec = constant_a5();
  tower::Element id = tower::identity(spec);

  std::function<tower::Element(int)> random_elem = [&](int level) -> tower::Element {
    const auto& leaf_list = spec.group_at(1).element_list;
    if (level <= 1) return tower::Element::leaf(leaf_list[rng.below(leaf_list.size())]);
    tower::Element acc = random_elem(level - 1);
    int entries = 1 + static_cast<int>(rng.below(2));
    const auto& layer_list = spec.group_at(level).element_list;
    for (int i = 0; i < entries; ++i) {
      tower::Element key = random_elem(level - 1);
      fingrp::Perm val = layer_list[1 + rng.below(layer_list.size() - 1)];
      acc = tower::mul(acc, tower::Element::wreath(level, id, {{key, val}}));
    }
    return acc;
  };

  {
    record(r, tower::imprimitive_degree(spec) == 300,
           "imprimitive action degree for the second stage is 300");
    auto one = tower::oe_evaluate(tower::group_order(spec, 1), tower::kDefaultOrderDigitCap);
    record(r, one == 60, "stage one order evaluates to 60");
    record(r, tower::group_order(spec, 2)->to_string() == "60^61",
           "stage two order prints as 60^61");
  }

  Tally assoc, unit, invt, conj_comp, comm_def, ser, val_ok, proj, dec, imp_hom, imp_inv,
      imp_faithful, mt_level, ordr;
  for (int round = 0; round < rounds; ++round) {
    int level = 1 + static_cast<int>(rng.below(3));
    tower::Element x = random_elem(level);
    tower::Element y = random_elem(level);
    tower::Element z = random_elem(level);

    assoc.note(tower::mul(tower::mul(x, y), z) == tower::mul(x, tower::mul(y, z)), round);
    unit.note(tower::mul(x, id) == x && tower::mul(id, x) == x, round);
    invt.note(tower::mul(x, tower::inv(x)) == id && tower::mul(tower::inv(x), x) == id,
              round);
    conj_comp.note(tower::conj(tower::conj(x, y), z) == tower::conj(x, tower::mul(y, z)),
                   round);
    comm_def.note(tower::commutator(x, y) ==
                      tower::mul(tower::mul(tower::inv(x), tower::inv(y)), tower::mul(x, y)),
                  round);
    try {
      ser.note(tower::Element::parse(x.to_string()) == x, round);
      tower::validate_element(spec, x);
      val_ok.note(true, round);
    } catch (const Error&) {
      ser.note(false, round);
      val_ok.note(false, round);
    }

    tower::Element x3 = random_elem(3);
    tower::Element y3 = random_elem(3);
    bool proj_ok = true;
    for (int j = 1; j <= 2; ++j)
      proj_ok = proj_ok && tower::project(tower::mul(x3, y3), j) ==
                               tower::mul(tower::project(x3, j), tower::project(y3, j));
    proj.note(proj_ok, round);
    auto parts = tower::decompose(x3, 2);
    dec.note(tower::mul(parts.first, parts.second) == x3 &&
                 tower::project(parts.first, 2).is_identity() &&
                 parts.second == tower::project(x3, 2),
             round);

    tower::Element x2 = random_elem(1 + static_cast<int>(rng.below(2)));
    tower::Element y2 = random_elem(1 + static_cast<int>(rng.below(2)));
    fingrp::Perm px = tower::to_imprimitive_perm(x2, spec);
    fingrp::Perm py = tower::to_imprimitive_perm(y2, spec);
    imp_hom.note(tower::to_imprimitive_perm(tower::mul(x2, y2), spec) ==
                     fingrp::compose(px, py),
                 round);
    imp_inv.note(tower::to_imprimitive_perm(tower::inv(x2), spec) == fingrp::inverse(px),
                 round);
    imp_faithful.note((x2 == y2) == (px == py), round);

    int t = 1 + static_cast<int>(rng.below(2));
    const auto& layer_list = spec.group_at(t + 1).element_list;
    tower::Element mt = tower::Element::wreath(
        t + 1, id, {{random_elem(t), layer_list[1 + rng.below(layer_list.size() - 1)]}});
    mt_level.note(tower::max_T_level(mt) == t && tower::in_T(mt, t) && !tower::in_T(mt, t + 1),
                  round);

    if (x2.is_identity()) {
      ordr.note(true, round);
    } else {
      long o = tower::element_order(x2);
      tower::Element p = id;
      for (long i = 0; i < o; ++i) p = tower::mul(p, x2);
      ordr.note(o >= 1 && p.is_identity(), round);
    }
  }
  record_tally(r, assoc, rounds, "associativity on random triples");
  record_tally(r, unit, rounds, "two-sided identity");
  record_tally(r, invt, rounds, "two-sided inverses");
  record_tally(r, conj_comp, rounds, "conjugation composes");
  record_tally(r, comm_def, rounds, "commutator expands to x^-1 y^-1 x y");
  record_tally(r, ser, rounds, "serialization round trip");
  record_tally(r, val_ok, rounds, "random elements validate against the tower");
  record_tally(r, proj, rounds, "projection is a homomorphism");
  record_tally(r, dec, rounds, "decomposition splits into kernel and projection");
  record_tally(r, imp_hom, rounds, "imprimitive embedding preserves products");
  record_tally(r, imp_inv, rounds, "imprimitive embedding preserves inverses");
  record_tally(r, imp_faithful, rounds, "imprimitive embedding is faithful");
  record_tally(r, mt_level, rounds, "base elements sit at their stage in the T chain");
  record_tally(r, ordr, rounds, "element order matches repeated multiplication");

  {
    const auto& layer_list = spec.group_at(2).element_list;
    fingrp::Perm val = layer_list[1];
    tower::Element m1 = tower::Element::wreath(2, id, {{id, val}});
    auto res1 = tower::normal_closure_symbolic(spec, m1);
    record(r, res1.closure == tower::SymbolicNormal::T(1) && res1.certificate.ok(),
           "closure of a first-stage base element is T(1)");
    tower::Element m2 = tower::Element::wreath(3, id, {{id, val}});
    auto res2 = tower::normal_closure_symbolic(spec, m2);
    record(r, res2.closure == tower::SymbolicNormal::T(2) && res2.certificate.ok(),
           "closure of a second-stage base element is T(2)");
    record(r, tower::lattice(spec, 2).size() == 2,
           "the third stage has exactly two proper nontrivial normal subgroups");
  }

  return r;
}

SuiteResult suite_witness(std::uint64_t seed, int rounds) {
  SuiteResult r = start("witness", seed, rounds);
  Rng rng(seed);
  tower::TowerSpec spec = constant_a5();
  RunConfig config;
  config.seed = seed;

  const auto& leaf_list = spec.group_at(1).element_list;
  auto five = fingrp::element_of_order(leaf_list, 5);
  tower::Element g = tower::Element::leaf(*five);

  auto run_case = [&](const std::string& label, const galg::AlgebraElement& alpha,
                      const std::string& want_mode,
                      long want_q) -> std::optional<WitnessCertificate> {
    try {
      WitnessCertificate cert = extract_witness(alpha, config);
      bool mode_ok = want_mode.empty() || cert.mode == want_mode;
      bool q_ok = want_q == 0 || cert.q == want_q;
      VerifyReport direct = verify_certificate(cert, config);
      WitnessCertificate back = WitnessCertificate::from_json(cert.to_json());
      VerifyReport round_trip = verify_certificate(back, config);
      record(r, mode_ok && q_ok && direct.ok && round_trip.ok,
             label + ": mode " + cert.mode + ", q " + std::to_string(cert.q) + ", |A| " +
                 std::to_string(cert.a_order) + ", closure " + cert.closure +
                 ", certificate and JSON round trip verified");
      if (!(mode_ok && q_ok && direct.ok && round_trip.ok)) return std::nullopt;
      return cert;
    } catch (const Error& e) {
      record(r, false, label + ": " + std::string(e.what()));
      return std::nullopt;
    }
  };

  auto one_minus = [&](long ch) {
    return galg::AlgebraElement::unit(spec, ch) -
           galg::AlgebraElement::term(spec, ch, galg::Scalar::one(ch), g);
  };
  auto p1 = run_case("characteristic 0", one_minus(0), "enumerative", 2);
  run_case("characteristic 3", one_minus(3), "enumerative", 2);
  run_case("characteristic 2", one_minus(2), "structural", 3);

  if (p1) {
    WitnessCertificate bad = *p1;
    bad.z_rank += 1;
    record(r, !verify_certificate(bad, config).ok, "tampered exponent rank is rejected");
    WitnessCertificate bad2 = *p1;
    bad2.codim_bound = "60";
    record(r, !verify_certificate(bad2, config).ok, "tampered codimension bound is rejected");
  }

  for (int i = 0; i < rounds; ++i) {
    int n = 2 + static_cast<int>(rng.below(2));
    std::set<tower::Element> support;
    while (static_cast<int>(support.size()) < n)
      support.insert(tower::Element::leaf(leaf_list[rng.below(leaf_list.size())]));
    galg::AlgebraElement alpha(spec, 0);
    for (const auto& e : support) {
      long c = static_cast<long>(rng.below(7)) - 3;
      if (c == 0) c = 1;
      alpha.add_term(e, galg::Scalar::rational(c));
    }
    std::string label = "random input " + std::to_string(i);
    try {
      WitnessCertificate cert = extract_witness(alpha, config);
      VerifyReport rep = verify_certificate(cert, config);
      record(r, rep.ok,
             label + " (" + cert.mode + ", |A| " + std::to_string(cert.a_order) +
                 "): certificate verified");
    } catch (const Error& e) {
      if (e.code() == "BetaZero") {
        record(r, true, label + ": elimination annihilated the input (accepted outcome)");
      } else {
        record(r, false, label + ": " + std::string(e.what()));
      }
    }
  }

  return r;
}

}  // namespace wreathcert::witness
