#pragma once

#include "wreathcert/galg/element.hpp"
#include "wreathcert/witness/certificate.hpp"
#include "wreathcert/witness/config.hpp"

namespace wreathcert::witness {

// Full construction for a nonzero element of the group algebra: normalize,
// pick the working levels, build both frames, run the elimination chain, and
// assemble the witness element together with its membership chain, closure,
// and codimension bound. Deterministic for a fixed input and config; the
// certificate text is byte-stable across reruns.
WitnessCertificate extract_witness(const galg::AlgebraElement& input, const RunConfig& config);

}  // namespace wreathcert::witness
