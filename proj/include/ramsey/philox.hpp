#pragma once

#include <array>
#include <cstdint>

namespace ramsey {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// Stateless: each (key, counter) pair maps to 128 independent bits, which
// is what makes sample-parallel simulation reproducible — substreams are
// keyed by (seed, sample index) and never depend on worker scheduling.
struct Philox4x32 {
  static constexpr std::uint32_t kM0 = 0xD2511F53u;
  static constexpr std::uint32_t kM1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kW0 = 0x9E3779B9u;
  static constexpr std::uint32_t kW1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kW0;
      key[1] += kW1;
    }
    return ctr;
  }

  // 128 bits for (seed, sample, block) packed as two 64-bit words,
  // little-endian within the block output.
  static std::array<std::uint64_t, 2> words(std::uint64_t seed, std::uint64_t sample,
                                            std::uint32_t block_index) {
    std::array<std::uint32_t, 4> ctr = {static_cast<std::uint32_t>(sample),
                                        static_cast<std::uint32_t>(sample >> 32), block_index,
                                        0u};
    std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                        static_cast<std::uint32_t>(seed >> 32)};
    auto out = block(ctr, key);
    return {out[0] | (static_cast<std::uint64_t>(out[1]) << 32),
            out[2] | (static_cast<std::uint64_t>(out[3]) << 32)};
  }
};

}  // namespace ramsey
