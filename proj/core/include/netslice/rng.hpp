#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace netslice {

/// Deterministic random stream used by every stochastic component.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are not portable across library
/// implementations, so bounded integers and reals are mapped here:
///   - uniform_index(n): Lemire's multiply-shift with rejection, exactly
///     uniform on [0, n).
///   - uniform01(): top 53 bits of one draw scaled by 2^-53, in [0, 1).
/// Identical seeds give identical streams on every platform.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::uint64_t uniform_index(std::uint64_t n);

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finaliser; a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

/// Derives an independent substream seed from a master seed and a path of
/// stream coordinates (model, replication, walk, ...). Order matters.
std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> path);

}  // namespace netslice
