#pragma once

// Seeded random instances. A pair is a pure function of
// (seed, size_a, size_b, rep, alphabet): the five values are folded through
// splitmix64 into the seed of a std::mt19937_64, and symbols are drawn with
// a multiply-shift reduction so no library-specific distribution is
// involved. Both engines are fully specified, so pairs reproduce across
// platforms and standard libraries.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>

#include "plcs/seqcore.hpp"

namespace plcs::harness {

inline constexpr const char* kGeneratorDescription =
    "mt19937_64 seeded with splitmix64 fold of (seed,size_a,size_b,rep,alphabet); "
    "symbol = (draw>>32)*alphabet>>32";

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t size_a, std::uint64_t size_b,
                                   std::uint64_t rep, std::uint64_t alphabet) {
    std::uint64_t h = splitmix64(seed);
    for (std::uint64_t v : {size_a, size_b, rep, alphabet}) {
        h = splitmix64(h ^ v);
    }
    return h;
}

// Symbols are 'a'.. for alphabets up to 26, raw octets 0..alphabet-1 above.
inline Sequence random_sequence(std::mt19937_64& rng, std::size_t len, unsigned alphabet) {
    Sequence s;
    s.symbols.resize(len);
    for (auto& sym : s.symbols) {
        const std::uint64_t v = ((rng() >> 32) * alphabet) >> 32;
        sym = static_cast<Symbol>(alphabet <= 26 ? 'a' + v : v);
    }
    return s;
}

inline std::pair<Sequence, Sequence> generate_pair(std::uint64_t seed, std::size_t size_a,
                                                   std::size_t size_b, std::size_t rep,
                                                   unsigned alphabet) {
    std::mt19937_64 rng(instance_seed(seed, size_a, size_b, rep, alphabet));
    Sequence a = random_sequence(rng, size_a, alphabet);
    Sequence b = random_sequence(rng, size_b, alphabet);
    return {std::move(a), std::move(b)};
}

} // namespace plcs::harness
