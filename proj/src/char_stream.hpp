#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace asymstream {

/// One-way character source for the online string. Characters arrive in a
/// fixed order; replayable sources can be rewound for multi-round algorithms,
/// and every rewind is counted as a new pass.
class CharStream {
 public:
  static CharStream from_bytes(std::vector<uint8_t> bytes);
  static CharStream from_file(const std::string& path);
  static CharStream from_stdin();

  std::optional<uint8_t> next();

  /// Characters delivered in the current pass.
  int64_t position() const noexcept { return position_; }

  uint64_t passes_started() const noexcept { return passes_; }
  bool replayable() const noexcept { return source_ != Source::kStdin; }

  /// Restarts the stream and increments the pass counter. Throws
  /// ContractViolation for non-replayable sources.
  void rewind();

 private:
  enum class Source { kMemory, kFile, kStdin };

  Source source_ = Source::kMemory;
  std::vector<uint8_t> bytes_;
  size_t cursor_ = 0;
  std::ifstream file_;
  int64_t position_ = 0;
  uint64_t passes_ = 1;
};

}  // namespace asymstream
