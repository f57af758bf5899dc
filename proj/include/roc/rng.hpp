// Reproducible random number streams.
//
// Each stream is a SplitMix64 sequence (Steele, Lea & Flood, "Fast splittable
// pseudorandom number generators", OOPSLA 2014) whose start state is a hash
// of (seed, stream_id). A fixed (seed, stream_id) pair therefore yields a
// bit-identical variate sequence regardless of thread count or scheduling,
// and distinct stream ids give statistically independent sequences. One
// stream is assigned per bootstrap or simulation replicate.

#pragma once

#include <cstdint>

namespace roc {

// Stafford variant 13 of the SplitMix64 output mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

// Derives an independent 64-bit seed for a nested family of streams
// (e.g. the bootstrap streams living inside simulation replicate `id`).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t id) {
  return mix64(mix64(seed + 0x6A09E667F3BCC909ull) ^ (id + 0x9E3779B97F4A7C15ull));
}

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed),
        stream_id_(stream_id),
        state_(mix64(mix64(seed + 0x9E3779B97F4A7C15ull) ^ stream_id)) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next_u64() noexcept {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  // Uniform on the open interval (0, 1); never returns an exact 0 or 1, so
  // inverse-transform sampling stays finite.
  double next_unit() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). Multiply-shift mapping of the 64-bit output;
  // the residual bias is below n / 2^64.
  std::uint64_t next_index(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Standard normal via inverse transform (one draw per variate).
  double next_normal();

  // Exponential with the given rate via inverse transform.
  double next_exponential(double rate);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_;
};

}  // namespace roc
