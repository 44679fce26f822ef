#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace airhockey {

// Source of uniform doubles in [0, 1). Virtual so tests can script the
// values a sampling rule consumes.
struct UniformSource {
  virtual ~UniformSource() = default;
  virtual double uniform() = 0;
};

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

// Deterministic random stream. The engine sequence is fixed by the C++
// standard and all conversions to doubles are done by hand, so a given
// seed produces bit-identical draws on every platform.
class Rng final : public UniformSource {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // 53-bit uniform in [0, 1).
  double uniform() override {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; consumes exactly two uniforms.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(2.0 * M_PI * u2);
  }

  // Uniform integer in [0, n), n >= 1.
  uint32_t below(uint32_t n) {
    return static_cast<uint32_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  uint64_t raw() { return engine_(); }

  // Derives an independent stream seed from a base seed, a label and an
  // index. Consumers keyed on distinct labels (or indices) never share a
  // stream, so adding draws to one does not perturb the others.
  static uint64_t derive(uint64_t base, std::string_view tag,
                         uint64_t index = 0) {
    uint64_t h = detail::splitmix64(base ^ detail::fnv1a(tag));
    return detail::splitmix64(h ^ (index * 0x9e3779b97f4a7c15ULL + 1));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace airhockey
