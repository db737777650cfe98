#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wreathcert::witness {

// Seeded, deterministic property suites. Each suite replays a fixed panel of
// structural checks plus a number of randomized rounds drawn from the seed;
// the log records the seed so any failing run can be reproduced exactly.
struct SuiteResult {
  std::string name;
  std::uint64_t seed = 0;
  int rounds = 0;
  bool ok = true;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> log;  // one line per check
};

// Simplicity audits for the catalog plus the two subgroup lemmas used by the
// witness frames, exercised on small concrete groups.
SuiteResult suite_lemmas(std::uint64_t seed, int rounds);

// Group axioms, serialization round trips, projection homomorphism, the
// imprimitive degree-300 embedding and closure bookkeeping on random tower
// elements.
SuiteResult suite_tower(std::uint64_t seed, int rounds);

// End-to-end witness extraction and certificate verification over a fixed
// panel (characteristics 0, 3, 2) plus randomized inputs; an input that the
// elimination chain annihilates counts as an expected outcome, not a failure.
SuiteResult suite_witness(std::uint64_t seed, int rounds);

}  // namespace wreathcert::witness
