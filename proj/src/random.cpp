#include "cardzk/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cardzk {

uint64_t Rng::below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  if (n == 1) return 0;
  uint64_t mask = ~uint64_t{0};
  uint64_t limit = n - 1;
  // smallest all-ones mask covering n-1
  mask >>= __builtin_clzll(limit | 1);
  auto draw = [&] {
    for (;;) {
      uint64_t v = engine_() & mask;
      if (v < n) return v;
    }
  };
  uint64_t v = draw();
  if (biased_) v = std::min(v, draw());
  return v;
}

int Rng::between(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("Rng::between: empty range");
  return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo) + 1));
}

std::vector<int> random_permutation(int lo, int hi, Rng& rng) {
  if (lo > hi) return {};
  std::vector<int> arr(static_cast<size_t>(hi - lo + 1));
  std::iota(arr.begin(), arr.end(), lo);
  for (size_t i = arr.size() - 1; i > 0; --i) {
    size_t j = static_cast<size_t>(rng.below(i + 1));
    std::swap(arr[i], arr[j]);
  }
  return arr;
}

std::vector<int> random_subset(int lo, int hi, int c, Rng& rng) {
  int n = hi - lo + 1;
  if (c < 0 || c > n) throw std::invalid_argument("random_subset: bad size");
  std::vector<int> arr(static_cast<size_t>(n));
  std::iota(arr.begin(), arr.end(), lo);
  // partial Fisher-Yates: the first c entries form a uniform subset
  for (int i = 0; i < c; ++i) {
    int j = i + static_cast<int>(rng.below(static_cast<uint64_t>(n - i)));
    std::swap(arr[static_cast<size_t>(i)], arr[static_cast<size_t>(j)]);
  }
  std::vector<int> out(arr.begin(), arr.begin() + c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ScriptedPermutationSource::draw(int lo, int hi) {
  if (script_.empty())
    throw std::logic_error("ScriptedPermutationSource: script exhausted");
  std::vector<int> perm = std::move(script_.front());
  script_.pop_front();
  if (static_cast<int>(perm.size()) != (lo > hi ? 0 : hi - lo + 1))
    throw std::logic_error("ScriptedPermutationSource: size mismatch");
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != lo + static_cast<int>(i))
      throw std::logic_error("ScriptedPermutationSource: not a permutation");
  return perm;
}

}  // namespace cardzk
