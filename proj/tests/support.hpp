#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cbel/cbba.hpp"

namespace cbel::test {

/// Frame with single-letter labels a, b, c, ...
inline Frame make_frame(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
    return Frame(std::move(labels));
}

inline double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

/// The two-event fixture used throughout: masses 0.3+0.4i on {a},
/// 0.3-0.4i on {b} and 0.4 on {a,b}; magnitudes 0.5, 0.5, 0.4.
inline Cbba worked_cbba() {
    Frame frame = make_frame(2);
    const std::vector<Cbba::Entry> entries = {
        {Proposition{0b01}, ComplexScalar{0.3, 0.4}},
        {Proposition{0b10}, ComplexScalar{0.3, -0.4}},
        {Proposition{0b11}, ComplexScalar{0.4, 0.0}},
    };
    return Cbba::build(frame, entries);
}

/// Classical generator for oracle sweeps, independent of random_cbba: picks
/// focal_count distinct non-empty sets, draws focal_count - 1 masses
/// uniformly from (0, 1/focal_count] and forces the last one to top the sum
/// up to 1, so every mass stays in (0, 1].
inline ClassicalBba random_classical_bba(const Frame& frame, int focal_count, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
    const std::uint64_t nonempty = frame.proposition_count() - 1;
    std::vector<std::uint32_t> pool(nonempty);
    std::iota(pool.begin(), pool.end(), 1u);
    for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(focal_count); ++k)
        std::swap(pool[k], pool[k + rng() % (nonempty - k)]);
    std::vector<Proposition> sets;
    for (int k = 0; k < focal_count; ++k) sets.emplace_back(pool[k]);
    std::sort(sets.begin(), sets.end());

    std::vector<ClassicalBba::Entry> entries;
    double partial = 0.0;
    for (int k = 0; k + 1 < focal_count; ++k) {
        const double m = (1.0 - uniform01(rng)) / focal_count;
        entries.emplace_back(sets[k], m);
        partial += m;
    }
    entries.emplace_back(sets[focal_count - 1], 1.0 - partial);
    return ClassicalBba::build(frame, std::move(entries));
}

} // namespace cbel::test
