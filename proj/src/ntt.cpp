#include "ntt.hpp"

#include <bit>

namespace asymstream::ntt {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

uint64_t powmod(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return r;
}

void transform(std::vector<uint64_t>& a, bool invert) {
  size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    uint64_t w = powmod(kRoot, (kPrime - 1) / len);
    if (invert) w = powmod(w, kPrime - 2);
    for (size_t i = 0; i < n; i += len) {
      uint64_t wn = 1;
      for (size_t j = 0; j < len / 2; ++j) {
        uint64_t u = a[i + j];
        uint64_t v = mulmod(a[i + j + len / 2], wn);
        a[i + j] = u + v >= kPrime ? u + v - kPrime : u + v;
        a[i + j + len / 2] = u >= v ? u - v : u + kPrime - v;
        wn = mulmod(wn, w);
      }
    }
  }
  if (invert) {
    uint64_t inv_n = powmod(n, kPrime - 2);
    for (auto& x : a) x = mulmod(x, inv_n);
  }
}

}  // namespace

std::vector<uint64_t> convolve(std::vector<uint64_t> a, std::vector<uint64_t> b,
                               SpaceMeter* meter) {
  if (a.empty() || b.empty()) return {};
  size_t out_len = a.size() + b.size() - 1;
  size_t size = std::bit_ceil(out_len);
  MeterCharge work(meter, static_cast<int64_t>(2 * size));
  a.resize(size);
  b.resize(size);
  transform(a, false);
  transform(b, false);
  for (size_t i = 0; i < size; ++i) a[i] = mulmod(a[i], b[i]);
  transform(a, true);
  a.resize(out_len);
  return a;
}

}  // namespace asymstream::ntt
