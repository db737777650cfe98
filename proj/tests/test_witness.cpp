#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wreathcert/error.hpp"
#include "wreathcert/fingrp/catalog.hpp"
#include "wreathcert/fingrp/perm.hpp"
#include "wreathcert/galg/element.hpp"
#include "wreathcert/galg/scalar.hpp"
#include "wreathcert/tower/element.hpp"
#include "wreathcert/tower/order_expr.hpp"
#include "wreathcert/tower/spec.hpp"
#include "wreathcert/witness/beta.hpp"
#include "wreathcert/witness/certificate.hpp"
#include "wreathcert/witness/frames.hpp"
#include "wreathcert/witness/pipeline.hpp"
#include "wreathcert/witness/suites.hpp"
#include "wreathcert/witness/verify.hpp"

using namespace wreathcert;
using galg::AlgebraElement;
using galg::Scalar;
using tower::Element;

namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

tower::TowerSpec a5_spec() {
  tower::TowerSpec spec;
  spec.name = "a5";
  spec.cycle = {"A5"};
  tower::validate_spec(spec);
  return spec;
}

Element leaf(const std::string& p) { return Element::leaf(fingrp::Perm::parse(p)); }

AlgebraElement one_minus_3cycle(const tower::TowerSpec& spec, long ch) {
  return AlgebraElement::unit(spec, ch) -
         AlgebraElement::term(spec, ch, Scalar::one(ch), leaf("p[1,2,0,3,4]"));
}

}  // namespace

TEST_CASE("level planning walks up to the witness frame") {
  auto spec = a5_spec();
  auto plan = witness::pick_levels(spec, 0, 1);
  CHECK(plan.q == 2);
  CHECK(plan.u == 1);
  CHECK(plan.t == 2);
  CHECK(plan.v == 3);
  auto plan2 = witness::pick_levels(spec, 2, 1);
  CHECK(plan2.q == 3);
  auto deep = witness::pick_levels(spec, 0, 3);
  CHECK(deep.t == 4);
  CHECK(deep.v == 5);
}

TEST_CASE("end-to-end panel: one minus a 3-cycle in three characteristics") {
  auto spec = a5_spec();
  witness::RunConfig config;

  struct Expect {
    long ch;
    long q;
    std::string mode;
    std::uint64_t a_order;
    std::string b_order;
  };
  for (const auto& e : {Expect{0, 2, "enumerative", 8, "2^8"},
                        Expect{3, 2, "enumerative", 8, "2^8"},
                        Expect{2, 3, "structural", 27, "3^27"}}) {
    CAPTURE(e.ch);
    auto cert = witness::extract_witness(one_minus_3cycle(spec, e.ch), config);
    CHECK(cert.q == e.q);
    CHECK(cert.u == 1);
    CHECK(cert.t == 2);
    CHECK(cert.v == 3);
    CHECK(cert.a_order == e.a_order);
    CHECK(cert.mode == e.mode);
    CHECK(cert.b_order == e.b_order);
    CHECK(cert.direct);
    CHECK(cert.z_rank == 1);
    CHECK(cert.xs.size() == 2);
    CHECK(cert.closure == "T(3)");
    CHECK(cert.bound_level == 3);
    CHECK(cert.codim_bound == tower::group_order(spec, 3)->to_string());
    CHECK(cert.characteristic == e.ch);
    CHECK(cert.format_version == 1);

    auto report = witness::verify_certificate(cert, config);
    CHECK(report.ok);
    CHECK(report.failures.empty());
    CHECK(report.checks.size() > 20);
  }
}

TEST_CASE("certificate json round trip preserves every replayed field") {
  auto spec = a5_spec();
  witness::RunConfig config;
  auto cert = witness::extract_witness(one_minus_3cycle(spec, 0), config);
  auto text = cert.to_json();
  auto back = witness::WitnessCertificate::from_json(text);
  CHECK(back.to_json() == text);
  auto report = witness::verify_certificate(back, config);
  CHECK(report.ok);

  CHECK(code_of([] { witness::WitnessCertificate::from_json("{}"); }) != "");
  CHECK(code_of([] { witness::WitnessCertificate::from_json("not json"); }) == "ParseError");
}

TEST_CASE("extraction is deterministic byte for byte") {
  auto spec = a5_spec();
  witness::RunConfig config;
  config.seed = 42;
  auto first = witness::extract_witness(one_minus_3cycle(spec, 0), config);
  auto second = witness::extract_witness(one_minus_3cycle(spec, 0), config);
  CHECK(first.to_json() == second.to_json());

  // A different seed may relabel spot samples but never the derived objects.
  witness::RunConfig other;
  other.seed = 43;
  auto third = witness::extract_witness(one_minus_3cycle(spec, 0), other);
  CHECK(third.z == first.z);
  CHECK(third.codim_bound == first.codim_bound);
}

TEST_CASE("support patterns: width, degeneracy, dependence") {
  auto spec = a5_spec();
  witness::RunConfig config;
  auto unit = AlgebraElement::unit(spec, 0);
  auto term = [&](long k, const Element& g) {
    return AlgebraElement::term(spec, 0, Scalar::rational(k), g);
  };

  SUBCASE("two involutions give a direct rank-2 frame") {
    auto alpha = unit + term(1, leaf("p[1,0,3,2,4]")) + term(1, leaf("p[2,3,0,1,4]"));
    auto cert = witness::extract_witness(alpha, config);
    CHECK(cert.a_order == 16);
    CHECK(cert.mode == "structural");  // 2^16 blows the enumeration cap
    CHECK(cert.direct);
    CHECK(cert.z_rank == 2);
    CHECK(cert.xs.size() == 3);
    CHECK(cert.entries.size() == 3);
    CHECK(cert.betas.size() == 3);
    CHECK(witness::verify_certificate(cert, config).ok);
  }

  SUBCASE("scalar multiple of the identity still yields a frame") {
    auto alpha = term(5, tower::identity(spec));
    auto cert = witness::extract_witness(alpha, config);
    CHECK(cert.a_order == 2);
    CHECK(cert.mode == "enumerative");
    CHECK(cert.b_order == "2^2");
    CHECK(cert.xs.size() == 1);
    CHECK(cert.z_rank == 0);
    CHECK(cert.entries.empty());
    CHECK(cert.l0 == "5");
    CHECK(cert.closure == "T(3)");
    CHECK(witness::verify_certificate(cert, config).ok);
  }

  SUBCASE("a 3-cycle with its square defeats directness but not the chain") {
    auto alpha = unit + term(1, leaf("p[1,2,0,3,4]")) + term(1, leaf("p[2,0,1,3,4]"));
    auto cert = witness::extract_witness(alpha, config);
    CHECK(cert.a_order == 8);
    CHECK_FALSE(cert.direct);
    CHECK(cert.z_rank == 1);
    // The dependent subset doubles the surviving identity coefficient.
    CHECK(cert.l0 == "2");
    CHECK(witness::verify_certificate(cert, config).ok);
  }

  SUBCASE("orbit pattern of order seven annihilates the chain") {
    tower::TowerSpec psl;
    psl.name = "psl27";
    psl.cycle = {"PSL(2,7)"};
    tower::validate_spec(psl);
    auto g7 = fingrp::element_of_order(psl.group_at(1).element_list, 7);
    REQUIRE(g7.has_value());
    Element g = Element::leaf(*g7);
    Element g2 = tower::mul(g, g);
    Element g4 = tower::mul(g2, g2);
    auto u = AlgebraElement::unit(psl, 0);
    auto t = [&](const Element& x) {
      return AlgebraElement::term(psl, 0, Scalar::one(0), x);
    };
    auto alpha = u + t(g) + t(g2) + t(g4);
    CHECK(code_of([&] { witness::extract_witness(alpha, config); }) == "BetaZero");
  }
}

TEST_CASE("beta chain closed form on a live run") {
  auto spec = a5_spec();
  auto alpha = AlgebraElement::parse(
      "1*p[0,1,2,3,4] + 2*p[1,2,0,3,4] + 3*p[3,1,2,4,0]", spec, 0);
  auto norm = galg::normalize_input(alpha);
  witness::RunConfig config;
  auto plan = witness::pick_levels(spec, 0, norm.support_level);
  auto fa = witness::build_frame_a(spec, norm, plan, config);
  auto chain = witness::run_beta_chain(norm, fa);
  REQUIRE(chain.betas.size() == norm.xs.size());
  CHECK(chain.matches_closed);
  CHECK(chain.betas[0] == chain.beta0_closed);
  CHECK_FALSE(chain.betas[0].is_zero());

  // beta_0 = k_0 (z_n - 1) ... (z_1 - 1), identity coefficient (-1)^n k_0.
  std::size_t n = norm.xs.size() - 1;
  auto expected = AlgebraElement::term(spec, 0, norm.ks[0], tower::identity(spec));
  for (std::size_t s = n; s >= 1; --s) {
    auto factor = AlgebraElement::term(spec, 0, Scalar::one(0), fa.zs[s]) -
                  AlgebraElement::unit(spec, 0);
    expected = expected * factor;
  }
  CHECK(chain.betas[0] == expected);
  Scalar id_coeff = chain.betas[0].coefficient(tower::identity(spec));
  Scalar want = norm.ks[0];
  if (n % 2 == 1) want = -want;
  CHECK(id_coeff == want);

  auto reduced = witness::reduce_to_frame(chain.betas[0], fa);
  CHECK_FALSE(reduced.l0.is_zero());
  CHECK(reduced.as[0].is_identity());
  // alpha0 is the shifted beta_0 with everything inside the frame.
  auto shift_term = AlgebraElement::term(spec, 0, Scalar::one(0), reduced.shift);
  CHECK(reduced.alpha0 == chain.betas[0] * shift_term);
  for (const auto& a : reduced.as) CHECK(fa.index_of(a) >= 0);
}

TEST_CASE("frame A coordinates and exponents") {
  auto spec = a5_spec();
  auto norm = galg::normalize_input(one_minus_3cycle(spec, 0));
  witness::RunConfig config;
  auto plan = witness::pick_levels(spec, 0, norm.support_level);
  auto fa = witness::build_frame_a(spec, norm, plan, config);

  CHECK(fa.q == 2);
  CHECK(fa.t == 2);
  CHECK(fa.coords.size() == 3);  // 1, g, g^2 as x_i * x_j products
  CHECK(fa.a_gens.size() == 3);
  CHECK(fa.a_elements.size() == 8);
  CHECK(fa.a_elements[0].is_identity());
  CHECK(fingrp::element_order(fa.y_perm) == 2);

  // Every element of A has consistent exponents and index bookkeeping.
  for (std::size_t i = 0; i < fa.a_elements.size(); ++i) {
    const auto& a = fa.a_elements[i];
    CHECK(fa.index_of(a) == static_cast<int>(i));
    CHECK(fa.element_for(fa.exponents_of(a)) == a);
    CHECK((tower::in_T(a, fa.t) || a.is_identity()));
    if (!a.is_identity()) CHECK(tower::element_order(a) == 2);
  }
  // A is elementary abelian.
  for (const auto& a : fa.a_gens)
    for (const auto& b : fa.a_gens)
      CHECK(tower::mul(a, b) == tower::mul(b, a));

  CHECK(code_of([&] { fa.exponents_of(leaf("p[1,2,0,3,4]")); }) == "NotInFrame");

  // zs[s] = [ys[s], xs[s]] with the advertised exponent rows.
  for (std::size_t s = 1; s < norm.xs.size(); ++s) {
    CHECK(fa.zs[s] == tower::commutator(fa.ys[s], norm.xs[s]));
    CHECK(fa.element_for(fa.z_exponents[s - 1]) == fa.zs[s]);
  }
}

TEST_CASE("frame B: orbits, witnesses, diagonal product") {
  auto spec = a5_spec();
  auto norm = galg::normalize_input(one_minus_3cycle(spec, 0));
  witness::RunConfig config;
  auto plan = witness::pick_levels(spec, 0, norm.support_level);
  auto fa = witness::build_frame_a(spec, norm, plan, config);
  auto chain = witness::run_beta_chain(norm, fa);
  auto reduced = witness::reduce_to_frame(chain.betas[0], fa);
  std::vector<Element> conjugators(reduced.as.begin() + 1, reduced.as.end());
  auto fb = witness::build_frame_b(spec, fa, conjugators, 0, plan, config);

  CHECK(fb.q == 2);
  CHECK(fb.v == 3);
  CHECK(fb.enumerative);
  CHECK(fb.b_order == "2^8");
  CHECK(fb.b_elements.size() == 256);
  REQUIRE(fb.entries.size() == conjugators.size());

  // z = prod of b^a over all of A.
  Element z = tower::identity(spec);
  for (const auto& a : fa.a_elements) z = tower::mul(z, tower::conj(fb.b, a));
  CHECK(z == fb.z);

  for (const auto& entry : fb.entries) {
    CHECK(entry.witness_ok);
    CHECK(entry.spot_ok);
    CHECK(entry.enumerative_ok);
    CHECK(entry.verdict == "enumerative");
    // w^-1 w^a = z exactly.
    CHECK(tower::mul(tower::inv(entry.witness), tower::conj(entry.witness, entry.a)) ==
          fb.z);
    // Centralizer order is q^orbits by the orbit walk.
    CHECK(entry.centralizer_order ==
          "2^" + std::to_string(entry.orbit_count));
  }

  CHECK(witness::prime_power_scalar(2, 8, 0).to_string() == "256");
  CHECK(witness::prime_power_scalar(3, 3, 5).to_string() == "2 mod 5");

  // b_exponents_of reads off the A-indexed coordinates of members of B.
  auto exps = witness::b_exponents_of(fb, fa, fb.b);
  REQUIRE(exps.size() == fa.a_elements.size());
  CHECK(exps[0] == 1);
  for (std::size_t i = 1; i < exps.size(); ++i) CHECK(exps[i] == 0);
}

TEST_CASE("mode forcing and caps") {
  auto spec = a5_spec();

  witness::RunConfig forced;
  forced.mode = witness::FrameMode::Structural;
  auto cert = witness::extract_witness(one_minus_3cycle(spec, 0), forced);
  CHECK(cert.mode == "structural");
  CHECK(witness::verify_certificate(cert, forced).ok);

  witness::RunConfig impossible;
  impossible.mode = witness::FrameMode::Enumerative;
  auto big = one_minus_3cycle(spec, 2);  // q = 3, |A| = 27, |B| = 3^27
  CHECK(code_of([&] { witness::extract_witness(big, impossible); }) == "FrameTooLarge");

  witness::RunConfig tiny;
  tiny.hard_a_cap = 4;
  CHECK(code_of([&] { witness::extract_witness(one_minus_3cycle(spec, 0), tiny); }) ==
        "FrameTooLarge");
}

TEST_CASE("zero and malformed inputs are rejected up front") {
  auto spec = a5_spec();
  witness::RunConfig config;
  AlgebraElement zero(spec, 0);
  CHECK(code_of([&] { witness::extract_witness(zero, config); }) == "ZeroElement");
}

TEST_CASE("tampered certificates are rejected") {
  auto spec = a5_spec();
  witness::RunConfig config;
  auto cert = witness::extract_witness(one_minus_3cycle(spec, 0), config);

  SUBCASE("rank") {
    auto bad = cert;
    bad.z_rank += 1;
    CHECK_FALSE(witness::verify_certificate(bad, config).ok);
  }
  SUBCASE("bound") {
    auto bad = cert;
    bad.codim_bound = "60";
    CHECK_FALSE(witness::verify_certificate(bad, config).ok);
  }
  SUBCASE("closure") {
    auto bad = cert;
    bad.closure = "T(1)";
    CHECK_FALSE(witness::verify_certificate(bad, config).ok);
  }
  SUBCASE("witness element") {
    auto bad = cert;
    REQUIRE(!bad.entries.empty());
    bad.entries[0].witness = bad.z;
    CHECK_FALSE(witness::verify_certificate(bad, config).ok);
  }
  SUBCASE("beta chain") {
    auto bad = cert;
    REQUIRE(bad.betas.size() >= 2);
    std::swap(bad.betas[0], bad.betas[1]);
    CHECK_FALSE(witness::verify_certificate(bad, config).ok);
  }
  SUBCASE("chain value") {
    auto bad = cert;
    REQUIRE(!bad.chain.empty());
    bad.chain.back().value = bad.betas[0];
    CHECK_FALSE(witness::verify_certificate(bad, config).ok);
  }
  SUBCASE("input text") {
    auto bad = cert;
    bad.input = "2*p[0,1,2,3,4]";
    CHECK_FALSE(witness::verify_certificate(bad, config).ok);
  }
}

TEST_CASE("property suites pass at reduced rounds") {
  auto lemmas = witness::suite_lemmas(7, 1);
  CHECK(lemmas.ok);
  CHECK(lemmas.failures == 0);
  auto tower_suite = witness::suite_tower(7, 25);
  CHECK(tower_suite.ok);
  auto wit = witness::suite_witness(7, 1);
  CHECK(wit.ok);
  // Logs are deterministic for a fixed seed.
  CHECK(witness::suite_tower(7, 25).log == tower_suite.log);
}
