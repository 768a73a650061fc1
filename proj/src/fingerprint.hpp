#pragma once

#include <cstdint>
#include <span>

#include "alphabet.hpp"
#include "text_oracle.hpp"

namespace asymstream {

/// Deterministic for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

/// Uniform prime in (M^2, 2*M^2] with M = max(n, base), sampled by rejection.
/// Deterministic given the seed.
uint64_t select_modulus(int64_t n, uint64_t base, uint64_t seed);

/// Uniform prime in (2^(bits-1), 2^bits], 2 <= bits <= 62. Collision odds per
/// comparison drop to ~2^-bits, which matters when a run performs far more
/// comparisons than the squared-input-size modulus can absorb.
uint64_t select_modulus_bits(uint32_t bits, uint64_t seed);

/// Modulus, radix and alphabet map shared by every fingerprint of one run.
/// Immutable after construction and freely shareable between sessions.
class FingerprintContext {
 public:
  static constexpr uint32_t kDefaultModulusBits = 62;

  /// Validates that q is prime and the radix is invertible (base < q).
  FingerprintContext(uint64_t q, AlphabetMap alphabet);

  /// Context sized for this text. modulus_bits == 0 selects the prime from
  /// (M^2, 2*M^2]; otherwise from (2^(bits-1), 2^bits].
  static FingerprintContext for_text(const TextOracle& text, uint64_t seed,
                                     uint32_t modulus_bits = kDefaultModulusBits);

  uint64_t q() const noexcept { return q_; }
  uint64_t base() const noexcept { return base_; }
  uint64_t inv_base() const noexcept { return inv_base_; }
  const AlphabetMap& alphabet() const noexcept { return alphabet_; }

  bool in_alphabet(uint8_t c) const noexcept { return alphabet_.contains(c); }

  /// f(c); throws std::domain_error for bytes outside the alphabet.
  uint64_t value_of(uint8_t c) const { return static_cast<uint64_t>(alphabet_.value(c)); }

  uint64_t add(uint64_t a, uint64_t b) const noexcept {
    uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  uint64_t mul(uint64_t a, uint64_t b) const noexcept {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % q_);
  }

 private:
  uint64_t q_;
  uint64_t base_;
  uint64_t inv_base_;
  AlphabetMap alphabet_;
};

/// Positional hash of a string: sum of base^(i-1) * f(S[i]) mod q, together
/// with the hashed length and the cached power base^length. Plain data, safe
/// to copy between sessions.
struct Fingerprint {
  uint64_t value = 0;
  int64_t length = 0;
  uint64_t base_pow = 1;  // base^length mod q

  static constexpr int64_t kStateWords = 3;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Fingerprint of S*c from the fingerprint of S.
Fingerprint append_right(const Fingerprint& fp, uint8_t c, const FingerprintContext& ctx);

/// Fingerprint of c*S from the fingerprint of S.
Fingerprint prepend_left(uint8_t c, const Fingerprint& fp, const FingerprintContext& ctx);

/// Fingerprint of the length-preserving shift: drops out_char from the left
/// (caller guarantees it is the true leftmost character) and appends in_char
/// on the right. Throws ContractViolation on an empty fingerprint.
Fingerprint slide_window(const Fingerprint& fp, uint8_t out_char, uint8_t in_char,
                         const FingerprintContext& ctx);

Fingerprint hash_of_string(std::span<const uint8_t> s, const FingerprintContext& ctx);

/// Fingerprint of text[i..j], both 1-based inclusive; i == j+1 denotes the
/// empty substring. Linear scan, constant persistent state.
Fingerprint substring_hash(const TextView& text, int64_t i, int64_t j,
                           const FingerprintContext& ctx);

}  // namespace asymstream
