#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "wreathcert/fingrp/catalog.hpp"
#include "wreathcert/galg/element.hpp"
#include "wreathcert/galg/scalar.hpp"
#include "wreathcert/tower/element.hpp"
#include "wreathcert/tower/imprimitive.hpp"
#include "wreathcert/tower/normal.hpp"
#include "wreathcert/tower/spec.hpp"
#include "wreathcert/util.hpp"
#include "wreathcert/witness/config.hpp"
#include "wreathcert/witness/pipeline.hpp"

namespace {

using namespace wreathcert;

tower::TowerSpec a5_spec() {
  tower::TowerSpec spec;
  spec.name = "a5";
  spec.cycle = {"A5"};
  return spec;
}

// Deterministic mildly dense element at the requested level.
tower::Element sample_element(const tower::TowerSpec& spec, int level, std::uint64_t seed) {
  Rng rng(seed);
  const auto& list = spec.group_at(1).element_list;
  std::vector<tower::Element> atoms;
  atoms.push_back(tower::Element::leaf(list[rng.below(list.size())]));
  for (int k = 2; k <= level; ++k) {
    std::vector<tower::Element> next;
    tower::Element act = atoms.back();
    next.push_back(act);
    for (int e = 0; e < 2; ++e) {
      tower::Element key = atoms[rng.below(atoms.size())];
      fingrp::Perm val = list[1 + rng.below(list.size() - 1)];
      next.push_back(tower::Element::wreath(k, tower::identity(spec), {{key, val}}));
    }
    tower::Element acc = next[0];
    for (std::size_t i = 1; i < next.size(); ++i) acc = tower::mul(acc, next[i]);
    atoms.push_back(acc);
  }
  return atoms.back();
}

void BM_wreath_mul(benchmark::State& state) {
  tower::TowerSpec spec = a5_spec();
  int level = static_cast<int>(state.range(0));
  tower::Element x = sample_element(spec, level, 1);
  tower::Element y = sample_element(spec, level, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tower::mul(x, y));
}
BENCHMARK(BM_wreath_mul)->Arg(2)->Arg(3);

void BM_wreath_inv(benchmark::State& state) {
  tower::TowerSpec spec = a5_spec();
  tower::Element x = sample_element(spec, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(tower::inv(x));
}
BENCHMARK(BM_wreath_inv);

void BM_imprimitive_embedding(benchmark::State& state) {
  tower::TowerSpec spec = a5_spec();
  tower::Element x = sample_element(spec, 2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(tower::to_imprimitive_perm(x, spec));
}
BENCHMARK(BM_imprimitive_embedding);

void BM_algebra_mul(benchmark::State& state) {
  tower::TowerSpec spec = a5_spec();
  galg::AlgebraElement a(spec, 0);
  galg::AlgebraElement b(spec, 0);
  for (int i = 0; i < 6; ++i) {
    a.add_term(sample_element(spec, 2, 10 + static_cast<std::uint64_t>(i)),
               galg::Scalar::rational(i + 1));
    b.add_term(sample_element(spec, 2, 20 + static_cast<std::uint64_t>(i)),
               galg::Scalar::rational(2 * i + 1));
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_algebra_mul);

void BM_symbolic_closure(benchmark::State& state) {
  tower::TowerSpec spec = a5_spec();
  const auto& list = spec.group_at(1).element_list;
  tower::Element m2 =
      tower::Element::wreath(3, tower::identity(spec), {{tower::identity(spec), list[1]}});
  for (auto _ : state) benchmark::DoNotOptimize(tower::normal_closure_symbolic(spec, m2, 3));
}
BENCHMARK(BM_symbolic_closure);

void BM_witness_pipeline(benchmark::State& state) {
  tower::TowerSpec spec = a5_spec();
  const auto& list = spec.group_at(1).element_list;
  auto five = fingrp::element_of_order(list, 5);
  galg::AlgebraElement alpha =
      galg::AlgebraElement::unit(spec, 0) -
      galg::AlgebraElement::term(spec, 0, galg::Scalar::one(0), tower::Element::leaf(*five));
  witness::RunConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(witness::extract_witness(alpha, config));
}
BENCHMARK(BM_witness_pipeline);

}  // namespace

BENCHMARK_MAIN();
