#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "alphabet.hpp"

namespace asymstream {

/// Random-access view of the offline string. Every value query goes through
/// read() and is counted, so tests can assert how much of the text an
/// algorithm actually touched. Shareable by concurrent readers.
class TextOracle {
 public:
  static TextOracle from_bytes(std::vector<uint8_t> bytes);

  /// Backed by buffered seeks into the file; only a fixed-size window of the
  /// file is resident at any time. The alphabet is collected in one scan at
  /// open time.
  static TextOracle from_file(const std::string& path);

  /// Loads the whole file into memory.
  static TextOracle from_file_in_memory(const std::string& path);

  int64_t length() const noexcept;

  /// 1-based; throws std::out_of_range outside [1, length()].
  uint8_t read(int64_t index) const;

  uint64_t reads_performed() const noexcept;
  const AlphabetMap& alphabet() const noexcept;

  /// Number of words a buffered file oracle keeps resident (fixed, not a
  /// function of the text length). Zero for in-memory oracles, whose bytes are
  /// input storage rather than algorithm state.
  int64_t resident_buffer_words() const noexcept;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Directional window over a TextOracle. The reversed view reads index i as
/// position length-i+1 of the underlying text; reads are counted either way.
struct TextView {
  const TextOracle* oracle = nullptr;
  bool reversed = false;

  int64_t length() const noexcept { return oracle->length(); }
  uint8_t read(int64_t index) const {
    return reversed ? oracle->read(oracle->length() - index + 1) : oracle->read(index);
  }
  TextView reverse() const { return TextView{oracle, !reversed}; }
};

}  // namespace asymstream
