#include "alphabet.hpp"

#include <stdexcept>

namespace asymstream {

AlphabetMap::AlphabetMap() { rank_.fill(-1); }

AlphabetMap AlphabetMap::from_bytes(std::span<const uint8_t> bytes) {
  std::array<bool, 256> present{};
  for (uint8_t b : bytes) present[b] = true;
  return from_present(present);
}

AlphabetMap AlphabetMap::from_present(const std::array<bool, 256>& present) {
  AlphabetMap map;
  int16_t next = 0;
  for (int b = 0; b < 256; ++b) {
    if (present[b]) map.rank_[b] = next++;
  }
  map.sigma_ = next;
  return map;
}

AlphabetMap AlphabetMap::byte_identity() {
  AlphabetMap map;
  for (int b = 0; b < 256; ++b) map.rank_[b] = static_cast<int16_t>(b);
  map.sigma_ = 256;
  return map;
}

int AlphabetMap::value(uint8_t c) const {
  int r = rank_[c];
  if (r < 0) throw std::domain_error("character outside alphabet");
  return r;
}

}  // namespace asymstream
