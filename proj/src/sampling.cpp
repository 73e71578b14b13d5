#include "ltdim/sampling.hpp"

#include <stdexcept>

namespace ltdim {

SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
    SplitMix64 mixer(seed);
    std::uint64_t key = mixer.next();
    key = SplitMix64(key ^ stream).next();
    key = SplitMix64(key ^ trial).next();
    return SplitMix64(key);
}

std::vector<Rational> draw_simplex_interior(std::size_t states, SplitMix64& rng, std::uint64_t bound) {
    if (states == 0) throw std::invalid_argument("draw_simplex_interior: no states");
    if (bound == 0) throw std::invalid_argument("draw_simplex_interior: bound must be positive");
    std::vector<Integer> draws(states);
    Integer total = 0;
    for (auto& d : draws) {
        d = static_cast<unsigned long>(rng.uniform(bound));
        total += d;
    }
    std::vector<Rational> out(states);
    for (std::size_t i = 0; i < states; ++i) {
        out[i] = Rational(draws[i], total);
        out[i].canonicalize();
    }
    return out;
}

}  // namespace ltdim
