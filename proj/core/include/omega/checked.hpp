#pragma once

#include <cstdint>
#include <optional>

namespace omega {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

// Returns a * b, or nullopt when the product does not fit in 64 bits.
inline std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  const u128 product = static_cast<u128>(a) * b;
  if (product > UINT64_MAX) return std::nullopt;
  return static_cast<std::uint64_t>(product);
}

// Returns base^exp, or nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    auto next = checked_mul(result, base);
    if (!next) return std::nullopt;
    result = *next;
  }
  return result;
}

}  // namespace omega
