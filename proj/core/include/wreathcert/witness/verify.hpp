#pragma once

#include <string>
#include <vector>

#include "wreathcert/witness/certificate.hpp"
#include "wreathcert/witness/config.hpp"

namespace wreathcert::witness {

// Replays a certificate from its recorded input: every derived object is
// recomputed and compared against the stored text, the membership chain is
// re-evaluated term by term, and the closure and bound are rechecked. Any
// mismatch lands in failures; dependent stages are then skipped.
struct VerifyReport {
  bool ok = true;
  std::vector<std::string> checks;
  std::vector<std::string> failures;
};

VerifyReport verify_certificate(const WitnessCertificate& cert, const RunConfig& config);

}  // namespace wreathcert::witness
