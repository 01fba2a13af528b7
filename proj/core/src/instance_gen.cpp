#include "kcluster/instance_gen.hpp"

#include <algorithm>

#include "kcluster/errors.hpp"

namespace kcluster {

IntervalRealization gen_random(const GenSpec& spec) {
    if (spec.n < 1) throw ArgumentError("generator needs n >= 1");
    const std::int64_t range = spec.coord_range > 0 ? spec.coord_range : 2 * spec.n;
    SplitMix rng(spec.seed);

    IntervalRealization r;
    r.intervals.reserve(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i) {
        if (spec.cls == GraphClass::proper) {
            const std::int64_t left =
                static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(range) + 1));
            r.intervals.push_back(ClosedInterval{Rational(left), Rational(left + 1)});
        } else {
            std::int64_t a =
                static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(range) + 1));
            std::int64_t b =
                static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(range) + 1));
            if (b < a) std::swap(a, b);
            r.intervals.push_back(ClosedInterval{Rational(a), Rational(b)});
        }
    }
    return r;
}

CanonicalEnumerator::CanonicalEnumerator(int n) : n_(n) {
    if (n < 1) throw ArgumentError("enumeration needs n >= 1");
    if (n > 12) throw BudgetError("canonical enumeration limited to n <= 12");
    reach_.assign(static_cast<std::size_t>(n), 0);
}

std::optional<NirForm> CanonicalEnumerator::next() {
    if (done_) return std::nullopt;
    NirForm out{reach_};

    // Mixed-radix increment, digit i counting up to n - i.
    int pos = n_ - 1;
    while (pos >= 0) {
        if (reach_[static_cast<std::size_t>(pos)] < n_ - (pos + 1)) {
            ++reach_[static_cast<std::size_t>(pos)];
            break;
        }
        reach_[static_cast<std::size_t>(pos)] = 0;
        --pos;
    }
    if (pos < 0) done_ = true;
    return out;
}

std::uint64_t CanonicalEnumerator::count(int n) {
    std::uint64_t total = 1;
    for (int i = 2; i <= n; ++i) total *= static_cast<std::uint64_t>(i);
    return total;
}

} // namespace kcluster
