#pragma once

#include <cstdint>
#include <deque>
#include <random>
#include <vector>

namespace cardzk {

// Seeded source of unbiased bounded integers. Bounded draws use bitmask
// rejection sampling so results are exactly uniform and depend only on the
// engine's output stream, never on platform distribution internals.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, n). n must be positive.
  uint64_t below(uint64_t n);

  // Uniform integer in [lo, hi] inclusive.
  int between(int lo, int hi);

  uint64_t raw() { return engine_(); }

  // Test hook: skew below() low by taking the min of two draws, so
  // distribution checks can prove they detect a bad source.
  void plant_bias(bool enabled) { biased_ = enabled; }

 private:
  std::mt19937_64 engine_;
  bool biased_ = false;
};

// Uniformly random permutation of {lo..hi} via Fisher-Yates over `rng`.
// result[i - lo] is the destination of element i.
std::vector<int> random_permutation(int lo, int hi, Rng& rng);

// Uniformly random size-c subset of {lo..hi}, returned sorted.
std::vector<int> random_subset(int lo, int hi, int c, Rng& rng);

// Source of uniformly random permutations, the sole randomness the shuffle
// operations consume. Seeded in production, scripted in tests so every
// shuffle outcome can be enumerated exhaustively.
class PermutationSource {
 public:
  virtual ~PermutationSource() = default;

  // Permutation of {lo..hi}; result[i - lo] is the destination of i.
  virtual std::vector<int> draw(int lo, int hi) = 0;
};

class SeededPermutationSource final : public PermutationSource {
 public:
  explicit SeededPermutationSource(uint64_t seed) : rng_(seed) {}

  std::vector<int> draw(int lo, int hi) override {
    return random_permutation(lo, hi, rng_);
  }

 private:
  Rng rng_;
};

// Replays a preset list of permutations in order.
class ScriptedPermutationSource final : public PermutationSource {
 public:
  void push(std::vector<int> perm) { script_.push_back(std::move(perm)); }

  std::vector<int> draw(int lo, int hi) override;

  bool exhausted() const { return script_.empty(); }

 private:
  std::deque<std::vector<int>> script_;
};

}  // namespace cardzk
