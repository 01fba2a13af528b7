#ifndef KCLUSTER_INSTANCE_GEN_HPP
#define KCLUSTER_INSTANCE_GEN_HPP

#include <cstdint>
#include <optional>

#include "kcluster/nir.hpp"
#include "kcluster/realization.hpp"

namespace kcluster {

enum class GraphClass { interval, proper };

// Seeded generator request. The seed fully determines the output; the
// generator never touches ambient entropy.
struct GenSpec {
    int n = 1;
    GraphClass cls = GraphClass::interval;
    std::uint64_t seed = 0;
    int coord_range = 0; // 0 picks a default of 2n
};

// splitmix64: the one stream every seeded component draws from, so runs
// are reproducible across platforms (no std::uniform_int_distribution,
// whose mapping is implementation-defined).
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d4a08685e7f013ull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection-free multiply-shift.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

// interval class: both endpoints of every node drawn uniformly from the
// integer grid [0, coord_range], ordered so left <= right. proper class:
// unit intervals with uniform integer left endpoints, which cannot contain
// one another.
IntervalRealization gen_random(const GenSpec& spec);

// Streams every reach vector with x_i in 0..n-i exactly once: n! forms,
// covering every interval graph on n ordered nodes. Mixed-radix counter
// order, deterministic.
class CanonicalEnumerator {
public:
    explicit CanonicalEnumerator(int n);

    std::optional<NirForm> next();

    // Total number of forms the stream yields: n!.
    static std::uint64_t count(int n);

private:
    int n_;
    bool done_ = false;
    std::vector<int> reach_;
};

} // namespace kcluster

#endif // KCLUSTER_INSTANCE_GEN_HPP
