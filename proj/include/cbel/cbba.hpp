#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cbel/classical.hpp"
#include "cbel/complex.hpp"
#include "cbel/frame.hpp"

namespace cbel {

/// Largest imaginary component (and smallest real sign slack) under which a
/// complex assignment still counts as classical.
inline constexpr double classical_imag_tolerance = 1e-12;

namespace detail {
inline std::string format_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}
} // namespace detail

enum class Condition {
    empty_set_assigned,
    magnitude_out_of_range,
    sum_not_unity,
    duplicate_entry,
};

inline std::string_view condition_name(Condition c) {
    switch (c) {
    case Condition::empty_set_assigned: return "EmptySetAssigned";
    case Condition::magnitude_out_of_range: return "MagnitudeOutOfRange";
    case Condition::sum_not_unity: return "SumNotUnity";
    case Condition::duplicate_entry: return "DuplicateEntry";
    }
    return "?";
}

/// One violated construction condition. subject is meaningful for the
/// per-proposition conditions; sum_not_unity is global and carries the
/// measured sum in (value_a, value_b).
struct Violation {
    Condition condition;
    Proposition subject{};
    double value_a = 0.0;
    double value_b = 0.0;

    std::string describe(const Frame& frame) const {
        std::string out{condition_name(condition)};
        switch (condition) {
        case Condition::empty_set_assigned:
            out += ": the empty set carries mass of magnitude " + detail::format_g(value_a);
            break;
        case Condition::magnitude_out_of_range:
            out += ": " + frame.format(subject) + " has magnitude " + detail::format_g(value_a) +
                   " outside [0, 1]";
            break;
        case Condition::sum_not_unity:
            out += ": masses sum to " + detail::format_g(value_a) + (value_b < 0 ? "-" : "+") +
                   detail::format_g(std::abs(value_b)) + "i instead of 1";
            break;
        case Condition::duplicate_entry:
            out += ": " + frame.format(subject) + " is assigned more than once";
            break;
        }
        return out;
    }
};

/// Result of checking a candidate assignment: ok() iff nothing is violated.
/// Unlike the building constructor, the check reports every violation.
struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Complex basic belief assignment over a frame: a sparse map from non-empty
/// propositions to complex masses M(A) with |M(A)| in (0, 1] and
/// sum M(A) = 1 + 0i (within a per-component tolerance).
///
/// Immutable after construction; all accessors are safe to call from many
/// threads at once.
class Cbba {
public:
    using Entry = std::pair<Proposition, ComplexScalar>;

    /// Checks the construction conditions without building. Entries with an
    /// exactly zero value are ignored, matching build(). Reported violations
    /// come in a fixed order: duplicates, then per-proposition conditions in
    /// ascending bitmask order, then the global sum condition.
    static ValidationReport validate(const Frame& frame, const std::vector<Entry>& raw,
                                     double tolerance = default_mass_tolerance) {
        require_positive(tolerance);
        auto entries = normalized(raw);
        ValidationReport report;
        for (std::size_t i = 0; i + 1 < entries.size(); ++i)
            if (entries[i].first == entries[i + 1].first &&
                (i == 0 || entries[i - 1].first != entries[i].first))
                report.violations.push_back(
                    {Condition::duplicate_entry, entries[i].first, 0.0, 0.0});
        ComplexScalar sum;
        for (const auto& [set, value] : entries) {
            if (!frame.contains(set))
                throw ValidationError("proposition does not fit the frame");
            const double magnitude = value.modulus();
            if (set.empty()) {
                // The sum condition ranges over non-empty propositions only.
                report.violations.push_back({Condition::empty_set_assigned, set, magnitude, 0.0});
                continue;
            }
            if (magnitude > 1.0 + tolerance)
                report.violations.push_back(
                    {Condition::magnitude_out_of_range, set, magnitude, 0.0});
            sum = sum + value;
        }
        if (std::abs(sum.re() - 1.0) > tolerance || std::abs(sum.im()) > tolerance)
            report.violations.push_back({Condition::sum_not_unity, {}, sum.re(), sum.im()});
        return report;
    }

    /// Validates and builds; throws the error of the first violation.
    static Cbba build(const Frame& frame, const std::vector<Entry>& raw,
                      double tolerance = default_mass_tolerance) {
        auto report = validate(frame, raw, tolerance);
        if (!report.ok()) throw_violation(frame, report.violations.front());
        return Cbba(frame, normalized(raw));
    }

    const Frame& frame() const noexcept { return frame_; }

    /// Stored entries, ascending bitmask order. Every entry has a nonzero
    /// value, so the keys are exactly the focal elements.
    std::span<const Entry> entries() const noexcept { return entries_; }

    /// Mass of a proposition: the stored value, or 0 when not assigned.
    /// The empty set always carries 0.
    ComplexScalar mass(Proposition a) const noexcept {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), a,
                                   [](const Entry& e, Proposition p) { return e.first < p; });
        return (it != entries_.end() && it->first == a) ? it->second : ComplexScalar{};
    }

    double magnitude(Proposition a) const noexcept { return mass(a).modulus(); }

    /// Full-quadrant phase of the stored mass, in (-pi, pi]. Only focal
    /// elements have one.
    double phase(Proposition a) const {
        const ComplexScalar value = mass(a);
        if (value.is_zero()) throw ZeroMassPhase(frame_.format(a));
        return value.argument();
    }

    std::vector<Proposition> focal_elements() const {
        std::vector<Proposition> out;
        out.reserve(entries_.size());
        for (const auto& [set, value] : entries_) out.push_back(set);
        return out;
    }

    /// Sum of the magnitudes over all focal elements. At least the magnitude
    /// of the mass sum, hence always >= 1 for a valid assignment (up to the
    /// construction tolerance).
    double total_magnitude() const noexcept { return total_magnitude_; }

    /// Commitment degree: magnitude(a) / total_magnitude(). The empty set
    /// has commitment 0.
    double commitment(Proposition a) const noexcept {
        if (a.empty()) return 0.0;
        return magnitude(a) / total_magnitude_;
    }

    /// commitment(), but rejecting the empty set instead of returning 0.
    double commitment_strict(Proposition a) const {
        if (a.empty()) throw EmptyProposition();
        return commitment(a);
    }

    /// True when every mass is a non-negative real (imaginary part within
    /// classical_imag_tolerance), i.e. the assignment is an ordinary BBA.
    bool is_classical() const noexcept {
        for (const auto& [set, value] : entries_)
            if (value.re() < 0.0 || std::abs(value.im()) > classical_imag_tolerance) return false;
        return true;
    }

    /// Degenerates to the classical assignment with m(A) = Re M(A).
    ClassicalBba to_classical(double tolerance = default_mass_tolerance) const {
        if (!is_classical()) throw NotClassical();
        std::vector<ClassicalBba::Entry> entries;
        entries.reserve(entries_.size());
        for (const auto& [set, value] : entries_) entries.emplace_back(set, value.re());
        return ClassicalBba::build(frame_, std::move(entries), tolerance);
    }

private:
    Cbba(Frame frame, std::vector<Entry> entries)
        : frame_(std::move(frame)), entries_(std::move(entries)) {
        double total = 0.0;
        for (const auto& [set, value] : entries_) total += value.modulus();
        total_magnitude_ = total;
    }

    static void require_positive(double tolerance) {
        if (!(tolerance > 0.0)) throw ValidationError("tolerance must be positive");
    }

    /// Drops exactly-zero entries and sorts by ascending bitmask.
    static std::vector<Entry> normalized(const std::vector<Entry>& raw) {
        std::vector<Entry> entries(raw.begin(), raw.end());
        std::erase_if(entries, [](const Entry& e) { return e.second.is_zero(); });
        std::stable_sort(entries.begin(), entries.end(),
                         [](const Entry& a, const Entry& b) { return a.first < b.first; });
        return entries;
    }

    [[noreturn]] static void throw_violation(const Frame& frame, const Violation& v) {
        switch (v.condition) {
        case Condition::empty_set_assigned: throw EmptySetAssigned();
        case Condition::magnitude_out_of_range:
            throw MagnitudeOutOfRange(frame.format(v.subject), v.value_a);
        case Condition::sum_not_unity: throw SumNotUnity(v.value_a, v.value_b);
        case Condition::duplicate_entry: throw DuplicateEntry(frame.format(v.subject));
        }
        throw ValidationError("unreachable");
    }

    Frame frame_;
    std::vector<Entry> entries_; // ascending bitmask order, no zeros, no empty set
    double total_magnitude_ = 0.0;
};

/// Lifts a classical assignment to a complex one with zero phases.
inline Cbba embed(const ClassicalBba& bba, double tolerance = default_mass_tolerance) {
    std::vector<Cbba::Entry> entries;
    entries.reserve(bba.entries().size());
    for (const auto& [set, m] : bba.entries()) entries.emplace_back(set, ComplexScalar{m, 0.0});
    return Cbba::build(bba.frame(), entries, tolerance);
}

/// Deterministic pseudo-random valid assignment with exactly focal_count
/// focal elements. The first focal_count - 1 masses are drawn uniformly from
/// the disc of radius 1 / focal_count; the mass of the largest focal element
/// is forced to 1 minus their sum, so the sum condition holds by
/// construction. Draws are rejected and repeated (up to 1000 attempts) if
/// the forced mass leaves (0, 1].
inline Cbba random_cbba(const Frame& frame, int focal_count, std::uint64_t seed) {
    const std::uint64_t nonempty = frame.proposition_count() - 1;
    if (focal_count < 1 || static_cast<std::uint64_t>(focal_count) > nonempty)
        throw Unsatisfiable("Unsatisfiable: focal count " + std::to_string(focal_count) +
                            " not in [1, " + std::to_string(nonempty) + "]");

    std::mt19937_64 rng(seed);
    const auto uniform01 = [&rng] { return (rng() >> 11) * 0x1.0p-53; };

    // Partial Fisher-Yates over all non-empty masks.
    std::vector<std::uint32_t> pool(nonempty);
    std::iota(pool.begin(), pool.end(), 1u);
    for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(focal_count); ++k)
        std::swap(pool[k], pool[k + rng() % (nonempty - k)]);
    std::vector<Proposition> sets;
    sets.reserve(focal_count);
    for (int k = 0; k < focal_count; ++k) sets.emplace_back(pool[k]);
    std::sort(sets.begin(), sets.end());

    const double radius = 1.0 / focal_count;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<ComplexScalar> draws;
        draws.reserve(focal_count);
        ComplexScalar sum;
        bool zero_draw = false;
        for (int k = 0; k + 1 < focal_count; ++k) {
            const double r = radius * std::sqrt(uniform01());
            const double theta = 2.0 * std::numbers::pi * uniform01() - std::numbers::pi;
            const ComplexScalar z = from_polar(r, theta);
            zero_draw |= z.is_zero();
            draws.push_back(z);
            sum = sum + z;
        }
        const ComplexScalar forced = ComplexScalar{1.0, 0.0} - sum;
        const double forced_magnitude = forced.modulus();
        if (zero_draw || forced_magnitude == 0.0 || forced_magnitude > 1.0) continue;
        draws.push_back(forced);

        std::vector<Cbba::Entry> entries;
        entries.reserve(focal_count);
        for (int k = 0; k < focal_count; ++k) entries.emplace_back(sets[k], draws[k]);
        return Cbba::build(frame, entries);
    }
    throw Unsatisfiable("Unsatisfiable: no valid draw within 1000 attempts");
}

} // namespace cbel
