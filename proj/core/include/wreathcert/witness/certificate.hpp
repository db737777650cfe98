#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreathcert/tower/spec.hpp"

namespace wreathcert::witness {

// Self-contained record of one witness extraction: every derived object is
// serialized so a verifier can replay the construction from the input alone
// and compare. The membership chain writes the final element difference as an
// explicit combination over the ideal generated by the input.
struct WitnessCertificate {
  int format_version = 1;
  tower::TowerSpec spec;
  long characteristic = 0;
  std::uint64_t seed = 0;
  std::string input;  // algebra text of the original element

  long q = 0;
  int u = 0;
  int t = 0;
  int v = 0;

  // Normalization: alpha = input * translator, support written as xs/ks.
  std::string translator;
  std::vector<std::string> xs;
  std::vector<std::string> ks;

  // Frame A.
  std::string y_perm;
  std::vector<std::string> coords;
  std::vector<std::string> ys;                 // ys[i], i = 0..n
  std::vector<std::string> zs;                 // zs[s], s = 1..n
  std::vector<std::vector<int>> z_exponents;   // rows for zs
  int z_rank = 0;
  bool direct = false;
  std::uint64_t a_order = 0;

  // Elimination chain.
  std::vector<std::string> betas;  // betas[s], s = 0..n
  std::string beta0_closed;

  // Reduction into the frame.
  std::string shift;
  std::string alpha0;
  std::string l0;
  std::vector<std::string> as;
  std::vector<std::string> ls;

  // Frame B.
  std::string b_perm;
  std::string z;
  std::string mode;  // "enumerative" or "structural"
  std::string b_order;
  struct Entry {
    std::string a;
    int orbit_count = 0;
    std::string centralizer_order;
    std::string witness;
    std::string verdict;
  };
  std::vector<Entry> entries;

  // Result.
  std::string closure;      // symbolic normal subgroup generated by z
  std::string codim_bound;  // symbolic order of the quotient
  int bound_level = 0;

  // Membership chain; step 0 is the input itself.
  struct ChainTerm {
    std::string coeff;
    std::string left;
    std::string right;
    int source = 0;
  };
  struct ChainStep {
    std::string label;
    std::string kind;  // "input", "explicit", "structural_average", "structural_final"
    std::vector<ChainTerm> terms;
    std::string value;
    int source = 0;
  };
  std::vector<ChainStep> chain;

  // Caps the run was executed under, echoed for replay.
  std::uint64_t enum_a_max = 0;
  std::uint64_t enum_b_max = 0;
  std::uint64_t hard_a_cap = 0;
  int spot_samples = 0;

  std::string to_json() const;
  static WitnessCertificate from_json(const std::string& text);
  static WitnessCertificate load_file(const std::string& path);
};

}  // namespace wreathcert::witness
