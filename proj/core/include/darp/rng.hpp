#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace darp {

/// Seeded random stream. Draws are computed from raw mt19937_64 output so a
/// given seed yields the same sequence on every standard library.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0);

  static constexpr result_type min() { return std::numeric_limits<result_type>::min(); }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return engine_(); }

  std::uint64_t seed() const { return seed_; }

  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  /// Uniform real in [lo, hi].
  double uniform_real(double lo, double hi);

  /// Independent stream derived from this stream's seed and `stream`.
  Rng split(std::uint64_t stream) const;

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) {
      std::swap(items[i], items[uniform_int(0, i)]);
    }
  }

  /// `count` distinct elements of `items`, in draw order.
  template <class T>
  std::vector<T> sample(std::vector<T> items, int count) {
    std::vector<T> out;
    for (int k = 0; k < count && !items.empty(); ++k) {
      const int idx = uniform_int(0, static_cast<int>(items.size()) - 1);
      out.push_back(items[idx]);
      items.erase(items.begin() + idx);
    }
    return out;
  }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[uniform_int(0, static_cast<int>(items.size()) - 1)];
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace darp
