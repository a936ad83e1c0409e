#pragma once

#include <string>

#include "loopchar/characters.hpp"
#include "loopchar/pairing.hpp"

namespace loopchar {

/// Report serialization. Reports are bit-identical for identical (config,
/// seed) pairs, so cell timings are only emitted when asked for.
std::string report_to_json(const VerificationReport& rep, bool with_timings = false);
std::string report_to_csv(const VerificationReport& rep);

std::string roots_to_json(const RootSystem& rs);
std::string atable_to_json(const ACoefficientTable& at);

template <class K>
std::string basis_to_json(const SubspaceBasis<K>& b);

std::string gram_to_json(const GramComputation<Qq>& g);
std::string gram_to_json(const GramComputation<Fp>& g, std::uint64_t prime, std::uint64_t q_value,
                         std::uint64_t seed);

}  // namespace loopchar
