#pragma once

#include <cstdint>
#include <random>

namespace iotrelay::sim {

using Rng = std::mt19937_64;

/// Stream identifiers keep the substreams of one master seed disjoint.
enum class Stream : std::uint64_t {
  kPattern = 1,
  kTrial = 2,
  kHopLaw = 3,
  kIntensity = 4,
  kFading = 5,
};

/// SplitMix64-style hash of (seed, stream, index, sub). Every Monte-Carlo unit
/// of work draws from an engine keyed this way, so results do not depend on
/// how work is scheduled across threads.
std::uint64_t stream_key(std::uint64_t seed, Stream stream, std::uint64_t index,
                         std::uint64_t sub = 0);

Rng make_rng(std::uint64_t seed, Stream stream, std::uint64_t index,
             std::uint64_t sub = 0);

}  // namespace iotrelay::sim
