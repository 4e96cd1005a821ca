#ifndef PSOLAB_RNG_HPP
#define PSOLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace psolab {

/// SplitMix64 finalizer. Used to mix seeds, never as a run's generator.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// FNV-1a over the bytes of a label.
constexpr std::uint64_t fnv1a64(std::string_view s) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Deterministic uniform stream over a Mersenne Twister (mt19937_64).
///
/// The engine and the uint64->double mapping are both fully specified, so a
/// seed reproduces the identical sequence on every platform. Consumers agree
/// on draw order: position initialization draws particle-major,
/// dimension-minor; velocity updates draw r1 then r2 per dimension.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [low, high).
    double uniform(double low, double high) { return low + (high - low) * uniform01(); }

    /// Raw 64-bit draw.
    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace psolab

#endif // PSOLAB_RNG_HPP
