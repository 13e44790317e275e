#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spellfix/kernels/levenshtein_block.hpp"
#include "spellfix/rng.hpp"

using namespace spellfix;
using namespace spellfix::kernels;

namespace {

struct Block {
  std::size_t length = 0;
  std::vector<std::u32string> words;  // kBlockLanes entries, empty = padding
  std::vector<char32_t> chars;
};

Block random_block(Rng& rng, const std::vector<char32_t>& alpha, std::size_t length) {
  Block b;
  b.length = length;
  b.chars.assign(length * kBlockLanes, kPadChar);
  const std::size_t used = 1 + rng.below(kBlockLanes);
  for (std::size_t lane = 0; lane < kBlockLanes; ++lane) {
    std::u32string w;
    if (lane < used) w = spellfix::testing::random_word(rng, alpha, length, length);
    for (std::size_t p = 0; p < w.size(); ++p) b.chars[p * kBlockLanes + lane] = w[p];
    b.words.push_back(w);
  }
  return b;
}

void check_against_oracle(BlockDistanceFn fn, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<char32_t> alpha{U'a', U'b', U'c', U'd'};
  for (int iter = 0; iter < 3000; ++iter) {
    const Block b = random_block(rng, alpha, rng.below(9));
    const auto q = spellfix::testing::random_word(rng, alpha, 0, 10);
    const std::uint32_t bound = static_cast<std::uint32_t>(rng.below(5));
    std::array<std::uint32_t, kBlockLanes> out{};
    fn(q, b.chars.data(), b.length, bound, out.data());
    for (std::size_t lane = 0; lane < b.words.size(); ++lane) {
      if (b.words[lane].empty() && b.length > 0) continue;
      const auto d = spellfix::testing::dp_levenshtein(q, b.words[lane]);
      ASSERT_EQ(out[lane], std::min<std::size_t>(d, bound + 1));
    }
  }
}

}  // namespace

TEST(BlockKernel, ScalarMatchesOracle) { check_against_oracle(block_distances_scalar, 1); }

TEST(BlockKernel, ScalarIsAlwaysAvailable) {
  EXPECT_TRUE(backend_available(Backend::scalar));
  EXPECT_NE(block_distance_fn(Backend::scalar), nullptr);
}

#if defined(SPELLFIX_WITH_AVX2)
TEST(BlockKernel, Avx2MatchesScalar) {
  if (!backend_available(Backend::avx2)) GTEST_SKIP() << "no AVX2 on this CPU";
  Rng rng(9);
  const auto& alpha = spellfix::testing::persian_letters();
  for (int iter = 0; iter < 20000; ++iter) {
    const Block b = random_block(rng, alpha, rng.below(12));
    const auto q = spellfix::testing::random_word(rng, alpha, 0, 14);
    const std::uint32_t bound = static_cast<std::uint32_t>(rng.below(16));
    std::array<std::uint32_t, kBlockLanes> scalar{}, vec{};
    block_distances_scalar(q, b.chars.data(), b.length, bound, scalar.data());
    block_distances_avx2(q, b.chars.data(), b.length, bound, vec.data());
    ASSERT_EQ(scalar, vec) << "iteration " << iter;
  }
}

TEST(BlockKernel, Avx2MatchesOracle) {
  if (!backend_available(Backend::avx2)) GTEST_SKIP() << "no AVX2 on this CPU";
  check_against_oracle(block_distances_avx2, 2);
}

TEST(BlockKernel, Avx2HandlesLargeScalars) {
  if (!backend_available(Backend::avx2)) GTEST_SKIP() << "no AVX2 on this CPU";
  Rng rng(10);
  const std::vector<char32_t> alpha{U'\U0010FFFF', U'\U0001F600', U'a', U'\u200C'};
  for (int iter = 0; iter < 2000; ++iter) {
    const Block b = random_block(rng, alpha, rng.below(7));
    const auto q = spellfix::testing::random_word(rng, alpha, 0, 8);
    std::array<std::uint32_t, kBlockLanes> scalar{}, vec{};
    block_distances_scalar(q, b.chars.data(), b.length, 3, scalar.data());
    block_distances_avx2(q, b.chars.data(), b.length, 3, vec.data());
    ASSERT_EQ(scalar, vec);
  }
}
#endif

TEST(BlockKernel, ForcedScalarBackend) {
  ::setenv("SPELLFIX_KERNEL", "scalar", 1);
  EXPECT_EQ(active_backend(), Backend::scalar);
  ::unsetenv("SPELLFIX_KERNEL");
  EXPECT_EQ(to_string(Backend::scalar), "scalar");
  EXPECT_EQ(to_string(Backend::avx2), "avx2");
}
