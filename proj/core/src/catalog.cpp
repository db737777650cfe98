#include "wreathcert/fingrp/catalog.hpp"

#include <algorithm>
#include <map>

#include "wreathcert/error.hpp"
#include "wreathcert/fingrp/subgroup.hpp"
#include "wreathcert/util.hpp"

namespace wreathcert::fingrp {

namespace {

Perm cycles(int degree, const std::vector<std::vector<int>>& cyc) {
  std::vector<int> images(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<size_t>(i)] = i;
  for (const auto& c : cyc)
    for (size_t i = 0; i < c.size(); ++i)
      images[static_cast<size_t>(c[i])] = c[(i + 1) % c.size()];
  return Perm(std::move(images));
}

SimpleGroupDesc materialize(std::string id, int degree, std::vector<Perm> gens) {
  SimpleGroupDesc d;
  d.id = std::move(id);
  d.degree = degree;
  d.generators = gens;
  d.element_list = generated_subgroup(gens, Perm::identity(degree));
  d.order = d.element_list.size();
  d.prime_spectrum = prime_factors(d.order);
  return d;
}

std::vector<SimpleGroupDesc> build_catalog() {
  std::vector<SimpleGroupDesc> groups;
  groups.push_back(materialize("A5", 5, {cycles(5, {{0, 1, 2}}), cycles(5, {{0, 1, 2, 3, 4}})}));
  groups.push_back(materialize("A6", 6, {cycles(6, {{0, 1, 2}}), cycles(6, {{1, 2, 3, 4, 5}})}));
  groups.push_back(materialize("A7", 7, {cycles(7, {{0, 1, 2}}), cycles(7, {{0, 1, 2, 3, 4, 5, 6}})}));
  // Projective line over F_7 with the point at infinity as 7:
  // x -> x+1 and x -> -1/x.
  groups.push_back(materialize(
      "PSL(2,7)", 8,
      {cycles(8, {{0, 1, 2, 3, 4, 5, 6}}), cycles(8, {{0, 7}, {1, 6}, {2, 3}, {4, 5}})}));
  SimpleGroupDesc sz;
  sz.id = "Sz(8)";
  sz.degree = 65;
  sz.order = 29120;
  sz.prime_spectrum = prime_factors(sz.order);
  sz.metadata_only = true;
  groups.push_back(std::move(sz));
  return groups;
}

std::string normalize_id(const std::string& id) {
  std::string key;
  for (char c : id)
    if (c != '(' && c != ')' && c != ',' && c != ' ')
      key += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return key;
}

}  // namespace

const std::vector<SimpleGroupDesc>& catalog() {
  static const std::vector<SimpleGroupDesc> groups = build_catalog();
  return groups;
}

const SimpleGroupDesc* find_catalog_group(const std::string& id) {
  const std::string key = normalize_id(id);
  for (const auto& g : catalog())
    if (normalize_id(g.id) == key) return &g;
  return nullptr;
}

const std::vector<NamedGroup>& test_groups() {
  static const std::vector<NamedGroup> groups = [] {
    auto make = [](std::string id, int degree, std::vector<Perm> gens) {
      NamedGroup g;
      g.id = std::move(id);
      g.degree = degree;
      g.generators = gens;
      g.element_list = generated_subgroup(gens, Perm::identity(degree));
      return g;
    };
    std::vector<NamedGroup> out;
    out.push_back(make("C5", 5, {cycles(5, {{0, 1, 2, 3, 4}})}));
    out.push_back(make("C6", 6, {cycles(6, {{0, 1, 2, 3, 4, 5}})}));
    out.push_back(make("S3", 3, {cycles(3, {{0, 1}}), cycles(3, {{0, 1, 2}})}));
    out.push_back(make("A3", 3, {cycles(3, {{0, 1, 2}})}));
    out.push_back(make("V4", 4, {cycles(4, {{0, 1}}), cycles(4, {{2, 3}})}));
    out.push_back(make("C2wrC2", 4, {cycles(4, {{0, 1}}), cycles(4, {{0, 2}, {1, 3}})}));
    out.push_back(make("C3wrC3", 9,
                       {cycles(9, {{0, 1, 2}}), cycles(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}})}));
    out.push_back(make("A5xA5", 10,
                       {cycles(10, {{0, 1, 2}}), cycles(10, {{0, 1, 2, 3, 4}}),
                        cycles(10, {{5, 6, 7}}), cycles(10, {{5, 6, 7, 8, 9}})}));
    return out;
  }();
  return groups;
}

NamedGroup resolve_group(const std::string& id) {
  if (const SimpleGroupDesc* g = find_catalog_group(id)) {
    if (g->metadata_only)
      fail("Unsupported", "group " + g->id + " has no materialized elements");
    NamedGroup out;
    out.id = g->id;
    out.degree = g->degree;
    out.generators = g->generators;
    out.element_list = g->element_list;
    return out;
  }
  const std::string key = normalize_id(id);
  for (const auto& g : test_groups())
    if (normalize_id(g.id) == key) return g;
  fail("UnknownGroup", "no group named " + id);
}

std::optional<Perm> element_of_order(const std::vector<Perm>& sorted_elements, long q) {
  for (const Perm& p : sorted_elements)
    if (element_order(p) == q) return p;
  return std::nullopt;
}

SimplicityReport verify_simplicity(const std::string& id, int degree,
                                   const std::vector<Perm>& generators,
                                   const std::vector<Perm>& sorted_elements) {
  SimplicityReport report;
  report.id = id;
  report.simple = true;
  const Perm id_elt = Perm::identity(degree);
  for (const auto& cls : conjugacy_classes(sorted_elements, generators)) {
    const Perm& rep = cls.front();
    if (rep.is_identity()) continue;
    // The subgroup generated by a whole class is already normal, so it equals
    // the normal closure of the representative. Probe with a few class
    // elements first; only a proper closure needs the full class.
    std::vector<Perm> quick{rep};
    for (const auto& g : generators) quick.push_back(conj_of(rep, g));
    std::vector<Perm> closure = generated_subgroup(quick, id_elt);
    if (closure.size() < sorted_elements.size()) {
      // Absorb the remaining class elements greedily; each accepted one at
      // least doubles the subgroup, so the generator list stays short.
      for (const auto& c : cls) {
        if (set_contains(closure, c)) continue;
        quick.push_back(c);
        closure = generated_subgroup(quick, id_elt);
        if (closure.size() == sorted_elements.size()) break;
      }
    }
    report.checks.push_back({rep, cls.size(), closure.size()});
    if (closure.size() < sorted_elements.size() && report.simple) {
      report.simple = false;
      report.witness = std::move(closure);
    }
  }
  return report;
}

SimplicityReport verify_simplicity(const SimpleGroupDesc& desc) {
  if (desc.metadata_only)
    fail("Unsupported", "cannot audit simplicity of metadata-only group " + desc.id);
  return verify_simplicity(desc.id, desc.degree, desc.generators, desc.element_list);
}

unsigned long choose_q(long characteristic,
                       const std::vector<const SimpleGroupDesc*>& recurring) {
  if (recurring.empty()) fail("UsageError", "choose_q needs at least one recurring group");
  unsigned long q = 0;
  if (characteristic != 2) {
    q = 2;
  } else {
    bool div3 = false;
    for (const auto* g : recurring)
      if (g->order % 3 == 0) div3 = true;
    q = div3 ? 3 : 5;
  }
  bool divides = false;
  for (const auto* g : recurring)
    if (g->order % q == 0) divides = true;
  if (!divides || static_cast<long>(q) == characteristic)
    fail("Unsupported", "no admissible witness prime for this tower");
  return q;
}

}  // namespace wreathcert::fingrp
