#include "iotrelay/sim/rng.hpp"

namespace iotrelay::sim {
namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t stream_key(std::uint64_t seed, Stream stream, std::uint64_t index,
                         std::uint64_t sub) {
  std::uint64_t h = splitmix(seed);
  h = splitmix(h ^ static_cast<std::uint64_t>(stream));
  h = splitmix(h ^ index);
  return splitmix(h ^ sub);
}

Rng make_rng(std::uint64_t seed, Stream stream, std::uint64_t index,
             std::uint64_t sub) {
  return Rng(stream_key(seed, stream, index, sub));
}

}  // namespace iotrelay::sim
