#ifndef LTDIM_SAMPLING_HPP
#define LTDIM_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "ltdim/rational_matrix.hpp"

namespace ltdim {

/// SplitMix64. Small, seedable and identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : m_state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (m_state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [1, bound]; `bound` is expected to be small next to 2^64.
    std::uint64_t uniform(std::uint64_t bound) { return 1 + next() % bound; }

private:
    std::uint64_t m_state;
};

/// Independent stream for (seed, stream, trial); the same triple always
/// yields the same sequence.
SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

inline constexpr std::uint64_t kDefaultBound = std::uint64_t{1} << 20;

/// A strictly positive probability vector over `states` states: integers drawn
/// from [1, bound], divided by their sum.
std::vector<Rational> draw_simplex_interior(std::size_t states, SplitMix64& rng, std::uint64_t bound);

}  // namespace ltdim

#endif  // LTDIM_SAMPLING_HPP
