#pragma once

#include <cstdint>
#include <random>

namespace mutloop {

/// mt19937_64 output is fixed by the standard; the distributions are not,
/// so bounded draws are done by hand to keep runs reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [lo, hi]; modulo bias is negligible at these ranges.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mutloop
