#include "diffset/random_stream.hpp"

namespace diffset {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t CounterStream::bits(std::uint64_t counter) const {
  return mix64(mix64(key_) ^ mix64(counter ^ 0xd1b54a32d192ed03ULL));
}

double CounterStream::uniform(std::uint64_t counter) const {
  return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

std::uint64_t CounterStream::below(std::uint64_t counter, std::uint64_t bound) const {
  // Multiply-shift; bias is below 2^-64 * bound, irrelevant at these sizes.
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(bits(counter)) * bound) >> 64);
}

}  // namespace diffset
