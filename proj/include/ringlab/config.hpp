#pragma once

#include <cstddef>
#include <cstdint>

namespace ringlab {

inline constexpr std::size_t kDefaultSizeLimit = 256;
inline constexpr int kDefaultDegreeBound = 3;
inline constexpr int kMaxDegree = 8;
inline constexpr int kDefaultFacCap = 3;
inline constexpr int kDefaultWitnessBound = 10;
inline constexpr std::uint64_t kDefaultSeed = 0x5EED2024ULL;

/// Largest ring (element count) any constructor will build. Reads
/// RINGLAB_SIZE_LIMIT once; falls back to kDefaultSizeLimit.
std::size_t size_limit();

}  // namespace ringlab
