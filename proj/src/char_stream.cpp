#include "char_stream.hpp"

#include <iostream>

#include "errors.hpp"

namespace asymstream {

CharStream CharStream::from_bytes(std::vector<uint8_t> bytes) {
  CharStream s;
  s.source_ = Source::kMemory;
  s.bytes_ = std::move(bytes);
  return s;
}

CharStream CharStream::from_file(const std::string& path) {
  CharStream s;
  s.source_ = Source::kFile;
  s.file_.open(path, std::ios::binary);
  if (!s.file_) throw IoError("cannot open " + path);
  return s;
}

CharStream CharStream::from_stdin() {
  CharStream s;
  s.source_ = Source::kStdin;
  return s;
}

std::optional<uint8_t> CharStream::next() {
  switch (source_) {
    case Source::kMemory:
      if (cursor_ >= bytes_.size()) return std::nullopt;
      ++position_;
      return bytes_[cursor_++];
    case Source::kFile: {
      int c = file_.get();
      if (c == std::char_traits<char>::eof()) return std::nullopt;
      ++position_;
      return static_cast<uint8_t>(c);
    }
    case Source::kStdin: {
      int c = std::cin.get();
      if (c == std::char_traits<char>::eof()) return std::nullopt;
      ++position_;
      return static_cast<uint8_t>(c);
    }
  }
  return std::nullopt;
}

void CharStream::rewind() {
  if (!replayable()) throw ContractViolation("stream source is not replayable");
  if (source_ == Source::kFile) {
    file_.clear();
    file_.seekg(0);
  }
  cursor_ = 0;
  position_ = 0;
  ++passes_;
}

}  // namespace asymstream
