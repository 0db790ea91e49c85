#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "cbel/frame.hpp"

namespace cbel {

/// Tolerance applied per component to the sum-to-one condition when
/// ingesting masses written as decimals.
inline constexpr double default_mass_tolerance = 1e-9;

/// Classical basic belief assignment: a sparse map from non-empty
/// propositions to masses in (0, 1] that sum to one.
class ClassicalBba {
public:
    using Entry = std::pair<Proposition, double>;

    /// Validates and builds. Entries with exactly zero mass are dropped;
    /// duplicate propositions, masses outside [0, 1], an assignment to the
    /// empty set, and a sum away from one are rejected.
    static ClassicalBba build(Frame frame, std::vector<Entry> entries,
                              double tolerance = default_mass_tolerance) {
        std::erase_if(entries, [](const Entry& e) { return e.second == 0.0; });
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        for (std::size_t i = 0; i + 1 < entries.size(); ++i)
            if (entries[i].first == entries[i + 1].first)
                throw DuplicateEntry(frame.format(entries[i].first));
        double sum = 0.0;
        for (const auto& [set, m] : entries) {
            if (set.empty()) throw EmptySetAssigned();
            if (m < 0.0 || m > 1.0 + tolerance) throw MagnitudeOutOfRange(frame.format(set), m);
            sum += m;
        }
        if (std::abs(sum - 1.0) > tolerance) throw SumNotUnity(sum, 0.0);
        return ClassicalBba(std::move(frame), std::move(entries));
    }

    const Frame& frame() const noexcept { return frame_; }
    std::span<const Entry> entries() const noexcept { return entries_; }

    /// Stored mass, or 0 when the proposition carries none.
    double mass(Proposition a) const noexcept {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), a,
                                   [](const Entry& e, Proposition p) { return e.first < p; });
        return (it != entries_.end() && it->first == a) ? it->second : 0.0;
    }

    std::vector<Proposition> focal_elements() const {
        std::vector<Proposition> out;
        out.reserve(entries_.size());
        for (const auto& [set, m] : entries_) out.push_back(set);
        return out;
    }

    /// Belief: total mass of the non-empty subsets of a.
    double bel(Proposition a) const noexcept {
        double acc = 0.0;
        for (const auto& [set, m] : entries_)
            if (set.is_subset_of(a)) acc += m;
        return acc;
    }

    /// Plausibility: total mass of the sets meeting a.
    double pl(Proposition a) const noexcept {
        double acc = 0.0;
        for (const auto& [set, m] : entries_)
            if (set.intersects(a)) acc += m;
        return acc;
    }

private:
    ClassicalBba(Frame frame, std::vector<Entry> entries)
        : frame_(std::move(frame)), entries_(std::move(entries)) {}

    Frame frame_;
    std::vector<Entry> entries_; // ascending bitmask order
};

} // namespace cbel
