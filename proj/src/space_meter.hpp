#pragma once

#include <cstdint>

#include "errors.hpp"

namespace asymstream {

/// Cooperative accounting of persistent algorithm state, in machine words.
///
/// Sessions register their persistent fields when they come alive and release
/// them on teardown. Transient loop variables of constant count are not
/// charged. The meter is single-consumer; distinct sessions use distinct
/// meters unless they deliberately share a budget.
class SpaceMeter {
 public:
  void add(int64_t delta_words) {
    if (delta_words < 0 && current_ + delta_words < 0)
      throw ContractViolation("space meter balance would go negative");
    current_ += delta_words;
    if (current_ > peak_) peak_ = current_;
  }

  int64_t current_words() const noexcept { return current_; }
  int64_t peak_words() const noexcept { return peak_; }

 private:
  int64_t current_ = 0;
  int64_t peak_ = 0;
};

/// RAII charge of a fixed number of words against a meter (which may be null).
class MeterCharge {
 public:
  MeterCharge() = default;
  MeterCharge(SpaceMeter* meter, int64_t words) : meter_(meter), words_(words) {
    if (meter_) meter_->add(words_);
  }
  MeterCharge(MeterCharge&& other) noexcept : meter_(other.meter_), words_(other.words_) {
    other.meter_ = nullptr;
    other.words_ = 0;
  }
  MeterCharge& operator=(MeterCharge&& other) noexcept {
    if (this != &other) {
      release();
      meter_ = other.meter_;
      words_ = other.words_;
      other.meter_ = nullptr;
      other.words_ = 0;
    }
    return *this;
  }
  MeterCharge(const MeterCharge&) = delete;
  MeterCharge& operator=(const MeterCharge&) = delete;
  ~MeterCharge() { release(); }

  void release() {
    if (meter_) meter_->add(-words_);
    meter_ = nullptr;
    words_ = 0;
  }

 private:
  SpaceMeter* meter_ = nullptr;
  int64_t words_ = 0;
};

inline int64_t bytes_to_words(int64_t bytes) { return (bytes + 7) / 8; }

}  // namespace asymstream
