#pragma once

#include <array>
#include <cstdint>

namespace nonconv {

// Philox4x32-10 keyed block function (Salmon et al., SC 2011).
// Pure function of (counter, key): no generator state to carry around.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Counter-based random source keyed by (seed, stream). The value at any index
// is directly addressable, so sub-sampling a path at arbitrary indices needs
// no skip-ahead state and parallel workers never share mutable state.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    // 128 random bits for the given index.
    std::array<std::uint64_t, 2> bits128(std::uint64_t index) const;

    std::uint64_t bits64(std::uint64_t index) const { return bits128(index)[0]; }

    // Uniform on [0, 1) with 53 random bits.
    double uniform(std::uint64_t index) const;

    double uniform(std::uint64_t index, double lo, double hi) const {
        return lo + uniform(index) * (hi - lo);
    }

    // A standard normal pair (Box-Muller on the two 64-bit halves).
    std::array<double, 2> normal_pair(std::uint64_t index) const;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
};

// Stream-id layout shared by the drivers so that trials, process copies and
// auxiliary draws never collide: stream = trial * 32 + role.
namespace stream_role {
inline constexpr std::uint64_t kPath = 0;       // i.i.d. draws / Markov transitions
inline constexpr std::uint64_t kInit = 1;       // Markov initial state
inline constexpr std::uint64_t kCopyPath = 2;   // kCopyPath + i for copy i (i < 8)
inline constexpr std::uint64_t kCopyInit = 10;  // kCopyInit + i for copy i
inline constexpr std::uint64_t kAux = 18;
}  // namespace stream_role

inline std::uint64_t stream_id(std::uint64_t trial, std::uint64_t role) {
    return trial * 32 + role;
}

}  // namespace nonconv
