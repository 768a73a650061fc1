#include "text_oracle.hpp"

#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "errors.hpp"

namespace asymstream {

namespace {
// Window kept resident for a file-backed oracle. Constant by design: the
// oracle must not silently grow with the text.
constexpr int64_t kFileBufferBytes = 4096;
}  // namespace

struct TextOracle::Impl {
  // Memory backend.
  std::vector<uint8_t> bytes;

  // File backend.
  std::FILE* file = nullptr;
  mutable std::mutex file_mutex;
  mutable std::vector<uint8_t> window;
  mutable int64_t window_start = 0;  // 0-based offset of window[0]; -1 when empty
  mutable int64_t window_len = 0;

  int64_t length = 0;
  AlphabetMap alphabet;
  mutable std::atomic<uint64_t> reads{0};

  ~Impl() {
    if (file) std::fclose(file);
  }

  uint8_t at(int64_t index0) const {
    if (!file) return bytes[static_cast<size_t>(index0)];
    std::lock_guard<std::mutex> lock(file_mutex);
    if (index0 < window_start || index0 >= window_start + window_len) {
      window_start = index0;
      if (std::fseek(file, static_cast<long>(index0), SEEK_SET) != 0)
        throw IoError("seek failed");
      size_t got = std::fread(window.data(), 1, window.size(), file);
      if (got == 0) throw IoError("read failed");
      window_len = static_cast<int64_t>(got);
    }
    return window[static_cast<size_t>(index0 - window_start)];
  }
};

TextOracle TextOracle::from_bytes(std::vector<uint8_t> bytes) {
  TextOracle oracle;
  oracle.impl_ = std::make_shared<Impl>();
  oracle.impl_->length = static_cast<int64_t>(bytes.size());
  oracle.impl_->alphabet = AlphabetMap::from_bytes(bytes);
  oracle.impl_->bytes = std::move(bytes);
  return oracle;
}

TextOracle TextOracle::from_file(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw IoError("cannot open " + path);

  TextOracle oracle;
  oracle.impl_ = std::make_shared<Impl>();
  oracle.impl_->file = f;
  oracle.impl_->window.resize(kFileBufferBytes);
  oracle.impl_->window_start = -1;

  // One scan to learn length and alphabet.
  std::array<bool, 256> present{};
  std::vector<uint8_t> chunk(1 << 16);
  int64_t total = 0;
  for (;;) {
    size_t got = std::fread(chunk.data(), 1, chunk.size(), f);
    if (got == 0) break;
    total += static_cast<int64_t>(got);
    for (size_t i = 0; i < got; ++i) present[chunk[i]] = true;
  }
  if (std::ferror(f)) throw IoError("cannot read " + path);
  oracle.impl_->length = total;
  oracle.impl_->alphabet = AlphabetMap::from_present(present);
  return oracle;
}

TextOracle TextOracle::from_file_in_memory(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw IoError("cannot open " + path);
  std::vector<uint8_t> bytes;
  std::vector<uint8_t> chunk(1 << 16);
  for (;;) {
    size_t got = std::fread(chunk.data(), 1, chunk.size(), f);
    if (got == 0) break;
    bytes.insert(bytes.end(), chunk.begin(), chunk.begin() + static_cast<long>(got));
  }
  bool bad = std::ferror(f) != 0;
  std::fclose(f);
  if (bad) throw IoError("cannot read " + path);
  return from_bytes(std::move(bytes));
}

int64_t TextOracle::length() const noexcept { return impl_->length; }

uint8_t TextOracle::read(int64_t index) const {
  if (index < 1 || index > impl_->length) throw std::out_of_range("text index out of range");
  impl_->reads.fetch_add(1, std::memory_order_relaxed);
  return impl_->at(index - 1);
}

uint64_t TextOracle::reads_performed() const noexcept {
  return impl_->reads.load(std::memory_order_relaxed);
}

const AlphabetMap& TextOracle::alphabet() const noexcept { return impl_->alphabet; }

int64_t TextOracle::resident_buffer_words() const noexcept {
  return impl_->file ? kFileBufferBytes / 8 : 0;
}

}  // namespace asymstream
