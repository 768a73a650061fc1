#pragma once

#include <cstdint>
#include <vector>

#include "space_meter.hpp"

namespace asymstream::ntt {

// 29 * 2^57 + 1; supports transforms up to length 2^57 with primitive root 3.
inline constexpr uint64_t kPrime = 4179340454199820289ULL;
inline constexpr uint64_t kRoot = 3;

/// Exact integer convolution of a and b modulo kPrime. Coefficients below
/// kPrime come back exactly; callers are responsible for keeping true values
/// inside that range.
std::vector<uint64_t> convolve(std::vector<uint64_t> a, std::vector<uint64_t> b,
                               SpaceMeter* meter = nullptr);

}  // namespace asymstream::ntt
