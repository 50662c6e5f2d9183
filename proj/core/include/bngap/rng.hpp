#pragma once

#include <cstdint>

namespace bngap {

/// splitmix64. State advances by the golden gamma; output goes through the
/// usual xor-shift-multiply finalizer. uniform01 keeps the top 53 bits.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Stream seed for sub-task `index`: seed XOR (index + 1) * golden gamma,
  /// advanced one step. Trials seeded this way are order-independent.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ ((index + 1) * 0x9e3779b97f4a7c15ULL));
    return g.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace bngap
