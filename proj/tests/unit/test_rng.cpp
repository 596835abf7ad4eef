#include <gtest/gtest.h>

#include <set>

#include "darp/rng.hpp"

namespace darp {
namespace {

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
}

TEST(Rng, UniformIntStaysInRangeAndCoversIt) {
  Rng rng(7);
  std::set<int> seen;
  for (int i = 0; i < 2000; ++i) {
    const int x = rng.uniform_int(-2, 3);
    ASSERT_GE(x, -2);
    ASSERT_LE(x, 3);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 6u);
}

TEST(Rng, UniformRealStaysInRange) {
  Rng rng(9);
  for (int i = 0; i < 2000; ++i) {
    const double x = rng.uniform_real(0.05, 0.1);
    ASSERT_GE(x, 0.05);
    ASSERT_LE(x, 0.1);
  }
}

TEST(Rng, SplitStreamsAreReproducibleAndDistinct) {
  const Rng root(5);
  Rng a = root.split(1), b = root.split(1), c = root.split(2);
  const auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
}

TEST(Rng, SampleDrawsDistinctElements) {
  Rng rng(3);
  const std::vector<int> items = {1, 2, 3, 4, 5};
  const auto picked = rng.sample(items, 3);
  EXPECT_EQ(picked.size(), 3u);
  EXPECT_EQ(std::set<int>(picked.begin(), picked.end()).size(), 3u);
}

TEST(Rng, ShuffleIsAPermutation) {
  Rng rng(11);
  std::vector<int> v = {0, 1, 2, 3, 4, 5, 6, 7};
  rng.shuffle(v);
  std::multiset<int> s(v.begin(), v.end());
  EXPECT_EQ(s, (std::multiset<int>{0, 1, 2, 3, 4, 5, 6, 7}));
}

}  // namespace
}  // namespace darp
