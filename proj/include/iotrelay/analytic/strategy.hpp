#pragma once

#include <array>
#include <string>
#include <string_view>

namespace iotrelay {

/// Relay-selection rule applied inside the forward half-disc of radius R_t.
enum class Strategy {
  kMfr,  // most forward progress
  kNfp,  // nearest forward neighbour
  kRfp,  // uniformly random forward neighbour
};

inline constexpr std::array<Strategy, 3> kAllStrategies = {
    Strategy::kMfr, Strategy::kNfp, Strategy::kRfp};

std::string_view to_string(Strategy s);

/// Accepts "MFR", "NFP", "RFP" in any case; throws ConfigError otherwise.
Strategy parse_strategy(std::string_view text);

/// Deterministic tie-break order used by the optimizer: NFP < RFP < MFR.
int tie_rank(Strategy s);

}  // namespace iotrelay
