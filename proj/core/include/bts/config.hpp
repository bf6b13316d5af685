#pragma once

namespace bts {

// Work bounds for certified decisions. All certified operations take a
// Limits value; hitting a bound raises a CertificationError instead of
// guessing.
struct Limits {
  // Maximum number of enclosure halvings per refinement request.
  int refine_cap = 4096;
  // Digit depth for admissibility checks against a streamed alpha(beta),
  // and for orbit cycle detection.
  int admissibility_depth = 512;
};

}  // namespace bts
