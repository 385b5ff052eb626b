#pragma once

#include <cstdint>
#include <string_view>

namespace taptest {

std::uint64_t splitmix64(std::uint64_t x);

/// FNV-1a over the bytes of `s`. Stable across platforms, unlike std::hash.
std::uint64_t fnv1a64(std::string_view s);

/// Derives an independent stream seed from a base seed, a purpose tag and an
/// index. Every random stream in the library is seeded this way so results do
/// not depend on call order.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::uint64_t index = 0);

}  // namespace taptest
