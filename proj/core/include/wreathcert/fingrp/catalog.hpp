#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wreathcert/fingrp/perm.hpp"

namespace wreathcert::fingrp {

// Finite simple group with fully materialized elements, or metadata only
// (order and prime spectrum) when the group is too large to enumerate.
struct SimpleGroupDesc {
  std::string id;
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> element_list;  // sorted canonically; empty if metadata_only
  unsigned long order = 0;
  std::vector<unsigned long> prime_spectrum;
  bool metadata_only = false;
};

// Shipped catalog: A5, A6, A7, PSL(2,7) materialized; Sz(8) metadata only.
const std::vector<SimpleGroupDesc>& catalog();
const SimpleGroupDesc* find_catalog_group(const std::string& id);

// Named non-simple helper groups for oracle work and lemma tests.
struct NamedGroup {
  std::string id;
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> element_list;
};
const std::vector<NamedGroup>& test_groups();
// Resolves either a catalog id or a test-group id to (degree, generators,
// elements); fails with UnknownGroup otherwise.
NamedGroup resolve_group(const std::string& id);

// Canonically smallest element of exact order q, if any.
std::optional<Perm> element_of_order(const std::vector<Perm>& sorted_elements, long q);

struct ClassCheck {
  Perm representative;
  size_t class_size = 0;
  size_t closure_size = 0;
};

struct SimplicityReport {
  std::string id;
  bool simple = false;
  std::vector<ClassCheck> checks;              // in canonical representative order
  std::optional<std::vector<Perm>> witness;    // first proper nontrivial closure
};

// Normal closure of every nontrivial conjugacy class must be the whole group.
SimplicityReport verify_simplicity(const std::string& id, int degree,
                                   const std::vector<Perm>& generators,
                                   const std::vector<Perm>& sorted_elements);
SimplicityReport verify_simplicity(const SimpleGroupDesc& desc);

// Witness prime for the ideal argument: 2 unless the coefficient field has
// characteristic 2, in which case 3 when some recurring order allows it and
// 5 otherwise. Never equals the characteristic; always divides a recurring
// order.
unsigned long choose_q(long characteristic,
                       const std::vector<const SimpleGroupDesc*>& recurring);

}  // namespace wreathcert::fingrp
