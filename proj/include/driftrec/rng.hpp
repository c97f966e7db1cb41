#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace driftrec {

/// SplitMix64 finalizer; used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t value) noexcept;

/// Seeded random stream. Child streams are derived from the seed and a key
/// only, never from how many numbers the parent has drawn, so work can be
/// split across threads without changing results.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  Rng child(std::uint64_t key) const;

  std::uint64_t next_u64();
  double uniform();                         // [0, 1)
  double uniform(double lo, double hi);     // [lo, hi)
  int uniform_int(int lo, int hi);          // inclusive
  double normal();
  void fill_normal(std::span<double> out);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace driftrec
