#include "fingerprint.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"
#include "rng.hpp"

namespace asymstream {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Witness set covering all 64-bit integers.
constexpr uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : kWitnesses) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t select_modulus(int64_t n, uint64_t base, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("select_modulus: text length must be >= 1");
  uint64_t m = std::max<uint64_t>(static_cast<uint64_t>(n), base);
  if (m > (1ULL << 31)) throw std::invalid_argument("select_modulus: input too long");
  uint64_t lo = m * m + 1;
  uint64_t hi = 2 * m * m;
  SplitMix64 rng(seed);
  // A prime exists in (m, 2m] for every m >= 1, so this terminates.
  for (;;) {
    uint64_t q = rng.next_in(lo, hi);
    if (is_prime_u64(q)) return q;
  }
}

uint64_t select_modulus_bits(uint32_t bits, uint64_t seed) {
  if (bits < 2 || bits > 62) throw std::invalid_argument("select_modulus_bits: bits must be in [2, 62]");
  uint64_t lo = (1ULL << (bits - 1)) + 1;
  uint64_t hi = 1ULL << bits;
  SplitMix64 rng(seed);
  for (;;) {
    uint64_t q = rng.next_in(lo, hi);
    if (is_prime_u64(q)) return q;
  }
}

FingerprintContext::FingerprintContext(uint64_t q, AlphabetMap alphabet)
    : q_(q), alphabet_(std::move(alphabet)) {
  if (!is_prime_u64(q_)) throw std::invalid_argument("fingerprint modulus must be prime");
  // Degenerate alphabets (sigma < 2) keep a valid radix; their f values are
  // all zero so the hash is unaffected.
  base_ = std::max<uint64_t>(static_cast<uint64_t>(alphabet_.sigma()), 2);
  if (base_ >= q_) throw std::invalid_argument("fingerprint modulus must exceed the radix");
  inv_base_ = powmod(base_, q_ - 2, q_);
}

FingerprintContext FingerprintContext::for_text(const TextOracle& text, uint64_t seed,
                                                uint32_t modulus_bits) {
  uint64_t base = std::max<uint64_t>(static_cast<uint64_t>(text.alphabet().sigma()), 2);
  uint64_t q = modulus_bits == 0
                   ? select_modulus(std::max<int64_t>(text.length(), 1), base, seed)
                   : select_modulus_bits(modulus_bits, seed);
  return FingerprintContext(q, text.alphabet());
}

Fingerprint append_right(const Fingerprint& fp, uint8_t c, const FingerprintContext& ctx) {
  uint64_t f = ctx.value_of(c);
  return Fingerprint{ctx.add(fp.value, ctx.mul(fp.base_pow, f)), fp.length + 1,
                     ctx.mul(fp.base_pow, ctx.base())};
}

Fingerprint prepend_left(uint8_t c, const Fingerprint& fp, const FingerprintContext& ctx) {
  uint64_t f = ctx.value_of(c);
  return Fingerprint{ctx.add(f, ctx.mul(ctx.base(), fp.value)), fp.length + 1,
                     ctx.mul(fp.base_pow, ctx.base())};
}

Fingerprint slide_window(const Fingerprint& fp, uint8_t out_char, uint8_t in_char,
                         const FingerprintContext& ctx) {
  if (fp.length < 1) throw ContractViolation("slide_window on an empty fingerprint");
  uint64_t without_left = ctx.sub(fp.value, ctx.value_of(out_char));
  uint64_t shifted = ctx.mul(without_left, ctx.inv_base());
  uint64_t top_power = ctx.mul(fp.base_pow, ctx.inv_base());  // base^(length-1)
  return Fingerprint{ctx.add(shifted, ctx.mul(top_power, ctx.value_of(in_char))), fp.length,
                     fp.base_pow};
}

Fingerprint hash_of_string(std::span<const uint8_t> s, const FingerprintContext& ctx) {
  Fingerprint fp;
  for (uint8_t c : s) fp = append_right(fp, c, ctx);
  return fp;
}

Fingerprint substring_hash(const TextView& text, int64_t i, int64_t j,
                           const FingerprintContext& ctx) {
  if (i < 1 || j > text.length() || i > j + 1) throw std::out_of_range("substring range invalid");
  Fingerprint fp;
  for (int64_t p = i; p <= j; ++p) fp = append_right(fp, text.read(p), ctx);
  return fp;
}

}  // namespace asymstream
