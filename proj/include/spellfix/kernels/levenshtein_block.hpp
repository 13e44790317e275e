#pragma once

// Batched bounded Levenshtein: one query against a block of up to eight
// equal-length words. Words are stored position-major, so position p of
// lane l lives at chars[p * kBlockLanes + l]. The scalar kernel is the
// reference; vector kernels must agree with it exactly.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace spellfix::kernels {

inline constexpr std::size_t kBlockLanes = 8;

// Padding value for unused lanes. Never a valid scalar value.
inline constexpr char32_t kPadChar = 0xFFFFFFFFu;

// Writes min(levenshtein(query, lane word), bound + 1) to out[0..8).
using BlockDistanceFn = void (*)(std::u32string_view query,
                                 const char32_t* chars, std::size_t length,
                                 std::uint32_t bound, std::uint32_t* out);

void block_distances_scalar(std::u32string_view query, const char32_t* chars,
                            std::size_t length, std::uint32_t bound,
                            std::uint32_t* out);

#if defined(SPELLFIX_WITH_AVX2)
void block_distances_avx2(std::u32string_view query, const char32_t* chars,
                          std::size_t length, std::uint32_t bound,
                          std::uint32_t* out);
#endif

enum class Backend { scalar, avx2 };

std::string_view to_string(Backend backend);

// Whether the running CPU and this build both support the backend.
bool backend_available(Backend backend);

// Best available backend, unless SPELLFIX_KERNEL=scalar forces the reference.
Backend active_backend();

BlockDistanceFn block_distance_fn(Backend backend);

inline void block_distances(std::u32string_view query, const char32_t* chars,
                            std::size_t length, std::uint32_t bound,
                            std::uint32_t* out) {
  static const BlockDistanceFn fn = block_distance_fn(active_backend());
  fn(query, chars, length, bound, out);
}

}  // namespace spellfix::kernels
