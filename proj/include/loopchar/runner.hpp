#pragma once

#include <string>

#include "loopchar/characters.hpp"
#include "loopchar/linalg.hpp"

namespace loopchar {

enum class RunMode { Exact, Modular, Both };

RunMode parse_mode(const std::string& s);

/// Full theorem verification over a window. Exact mode ranks over Q(q);
/// modular mode ranks at the policy's specialization points (max across
/// points, instability resolved by an exact recomputation of the cell); both
/// runs the two and insists they agree.
VerificationReport run_verify_theorem(const CartanData& c, const DegreeVector& r,
                                      const DegreeVector& n_max, long d_max, RunMode mode,
                                      const ModPolicy& policy, bool cap_check);

}  // namespace loopchar
