#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace cclab {

// Identifies one reproducible random stream. Equal keys give bit-identical
// sequences across runs and thread schedules; distinct stream ids give
// statistically independent streams.
struct StreamKey {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Hash-combines structured indices (experiment id, pair index, purpose tag,
// ...) into a stream id, so parallel workers derive disjoint streams without
// coordination.
std::uint64_t derive_stream_id(std::initializer_list<std::uint64_t> parts) noexcept;

inline StreamKey derive_stream(std::uint64_t master_seed,
                               std::initializer_list<std::uint64_t> parts) noexcept {
    return StreamKey{master_seed, derive_stream_id(parts)};
}

// Counter-based Philox4x32-10 stream: the key is the master seed, counter
// words 2-3 carry the stream id, words 0-1 the block counter. 2^65 32-bit
// words per stream, random-access by construction, no shared state.
class RandomStream {
public:
    explicit RandomStream(StreamKey key) noexcept;

    std::uint64_t next_u64() noexcept;
    // Uniform integer in [0, bound) via 128-bit multiply-shift.
    std::uint64_t uniform_below(std::uint64_t bound) noexcept;
    double uniform01() noexcept;  // open interval (0, 1)
    double uniform(double lo, double hi) noexcept;
    double normal() noexcept;     // standard normal (Box-Muller, cached spare)
    double gamma(double shape);   // unit scale, Marsaglia-Tsang
    double chi_square(double dof);

private:
    void generate_block() noexcept;

    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_id_ = 0;
    std::uint64_t block_index_ = 0;
    std::array<std::uint32_t, 4> block_{};
    unsigned word_pos_ = 4;  // 4 == exhausted
    bool have_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

}  // namespace cclab
