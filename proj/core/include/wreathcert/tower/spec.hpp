#pragma once

#include <string>
#include <vector>

#include "wreathcert/fingrp/catalog.hpp"

namespace wreathcert::tower {

// Tower description: S_1, S_2, ... runs through the preamble once and then
// repeats the cycle forever. Levels are 1-based.
struct TowerSpec {
  std::string name;
  std::vector<std::string> preamble;
  std::vector<std::string> cycle;

  const fingrp::SimpleGroupDesc& group_at(int level) const;
  // Distinct isomorphism types occurring infinitely often (the cycle).
  std::vector<const fingrp::SimpleGroupDesc*> recurring() const;

  friend bool operator==(const TowerSpec& a, const TowerSpec& b) = default;

  std::string to_json() const;
  static TowerSpec from_json(const std::string& text);
  static TowerSpec load_file(const std::string& path);
};

// Ids must resolve to materialized catalog groups whose simplicity audit
// passes (audits are cached per id).
void validate_spec(const TowerSpec& spec);

}  // namespace wreathcert::tower
