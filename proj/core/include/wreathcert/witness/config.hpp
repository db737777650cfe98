#pragma once

#include <cstddef>
#include <cstdint>

namespace wreathcert::witness {

// Frame verification strategy: enumerative mode materializes the abelian
// frame B and checks every identity by brute force; structural mode relies on
// exact element-level witness checks plus exponent-vector linear algebra and
// seeded spot samples. Auto picks enumerative whenever the caps allow.
enum class FrameMode { Auto, Enumerative, Structural };

struct RunConfig {
  std::size_t closure_cap = 100000;   // BFS subgroup closure cap
  std::size_t enum_a_max = 12;        // enumerative mode requires |A| <= this
  std::size_t enum_b_max = 1u << 16;  // ... and |B| = q^|A| <= this
  std::size_t hard_a_cap = 1u << 16;  // refuse frames with |A| beyond this
  unsigned long order_digit_cap = 10000;  // decimal digits for order evaluation
  int closure_horizon = 3;            // probe levels past the element level
  FrameMode mode = FrameMode::Auto;
  std::uint64_t seed = 0;             // recorded; drives structural spot samples
  int spot_samples = 8;               // per-entry samples in structural mode
};

}  // namespace wreathcert::witness
