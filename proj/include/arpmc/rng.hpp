#pragma once

#include <array>
#include <cstdint>

namespace arpmc {

// Recorded in run manifests so results stay auditable.
inline constexpr const char* kRngAlgorithm = "philox4x32-10";

// Philox 4x32-10 block function (counter-based). Maps a 128-bit counter and
// 64-bit key to four 32-bit output words through ten multiply-xor rounds.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key);

// Uniform draw stream keyed by (seed, stream_id).
//
// The key is the seed; counter words 2..3 hold the stream id and words 0..1
// a per-stream block index. Identical (seed, stream_id) therefore replays
// the identical sequence regardless of scheduling or how many other streams
// exist, and distinct stream ids address disjoint counter blocks.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed), stream_(stream_id) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_; }

  std::uint64_t next_u64();

  // 53-bit uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int used_ = 2;  // u64 lanes consumed from buf_; 2 forces a refill
};

}  // namespace arpmc
