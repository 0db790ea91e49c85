#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cbel/cbba.hpp"

namespace cbel {

/// Dense whole-lattice tables are limited to 2^20 entries.
inline constexpr int max_dense_frame_size = 20;

/// The per-proposition enumeration paths cost O(3^N) over a whole table and
/// are refused above this size; they exist as oracles for the fast sweeps.
inline constexpr int max_naive_frame_size = 14;

/// Slack for identities that hold exactly in real arithmetic but accumulate
/// rounding over the lattice sweeps.
inline constexpr double monotonicity_slack = 1e-12;

enum class TableKind { commitment, belief, plausibility };

inline std::string_view table_kind_name(TableKind kind) {
    switch (kind) {
    case TableKind::commitment: return "commitment";
    case TableKind::belief: return "belief";
    case TableKind::plausibility: return "plausibility";
    }
    return "?";
}

/// Dense array over all 2^N propositions of a frame, indexed by bitmask.
class BeliefTable {
public:
    BeliefTable(Frame frame, TableKind kind, std::vector<double> values)
        : frame_(std::move(frame)), kind_(kind), values_(std::move(values)) {
        if (frame_.size() > max_dense_frame_size)
            throw FrameTooLarge(frame_.size(), max_dense_frame_size);
        if (values_.size() != frame_.proposition_count())
            throw ValidationError("table size does not match the frame");
    }

    const Frame& frame() const noexcept { return frame_; }
    TableKind kind() const noexcept { return kind_; }
    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    double operator[](Proposition a) const noexcept { return values_[a.bits()]; }

private:
    Frame frame_;
    TableKind kind_;
    std::vector<double> values_;
};

/// In-place subset-sum (zeta) sweep: values[A] becomes the sum of the input
/// over all subsets of A. One pass per bit, ascending bit index then
/// ascending mask, O(N * 2^N) additions; the fixed order makes results
/// bit-for-bit reproducible.
template <typename T>
void subset_sum_in_place(std::span<T> values) {
    const std::size_t n = values.size();
    assert(std::has_single_bit(n));
    for (std::size_t bit = 1; bit < n; bit <<= 1)
        for (std::size_t mask = bit; mask < n; ++mask)
            if (mask & bit) values[mask] += values[mask ^ bit];
}

/// Inverse of subset_sum_in_place (the fast Moebius sweep): recovers the
/// per-subset increments from cumulative subset sums. Same order, same cost.
template <typename T>
void subset_sum_invert_in_place(std::span<T> values) {
    const std::size_t n = values.size();
    assert(std::has_single_bit(n));
    for (std::size_t bit = 1; bit < n; bit <<= 1)
        for (std::size_t mask = bit; mask < n; ++mask)
            if (mask & bit) values[mask] -= values[mask ^ bit];
}

/// Generalized belief of one proposition: the commitment degrees of its
/// non-empty subsets, accumulated by direct submask enumeration (cost
/// 2^|A|). The whole-table route (gbel_table) is the fast alternative.
inline double gbel(const Cbba& cbba, Proposition a) {
    double acc = 0.0;
    const std::uint32_t bits = a.bits();
    for (std::uint32_t sub = bits; sub != 0; sub = (sub - 1) & bits)
        acc += cbba.commitment(Proposition{sub});
    return acc;
}

/// Generalized plausibility of one proposition: 1 - gbel of the complement.
/// The empty set meets nothing, so its plausibility is 0 by definition.
inline double gpl(const Cbba& cbba, Proposition a) {
    if (a.empty()) return 0.0;
    return 1.0 - gbel(cbba, cbba.frame().complement(a));
}

/// Dense table of commitment degrees; zero off the focal set.
inline BeliefTable commitment_table(const Cbba& cbba) {
    if (cbba.frame().size() > max_dense_frame_size)
        throw FrameTooLarge(cbba.frame().size(), max_dense_frame_size);
    std::vector<double> values(cbba.frame().proposition_count(), 0.0);
    for (const auto& [set, value] : cbba.entries())
        values[set.bits()] = value.modulus() / cbba.total_magnitude();
    return {cbba.frame(), TableKind::commitment, std::move(values)};
}

/// Generalized belief for every proposition at once: commitment table plus
/// one zeta sweep, O(N * 2^N).
inline BeliefTable gbel_table(const Cbba& cbba) {
    BeliefTable com = commitment_table(cbba);
    std::vector<double> values(com.values().begin(), com.values().end());
    subset_sum_in_place(std::span<double>(values));
    return {cbba.frame(), TableKind::belief, std::move(values)};
}

/// Whole-table belief by per-proposition enumeration; O(3^N) oracle for
/// gbel_table, refused above max_naive_frame_size.
inline BeliefTable gbel_table_naive(const Cbba& cbba) {
    const int n = cbba.frame().size();
    if (n > max_naive_frame_size) throw FrameTooLarge(n, max_naive_frame_size);
    std::vector<double> values(cbba.frame().proposition_count());
    for (std::uint32_t mask = 0; mask < values.size(); ++mask)
        values[mask] = gbel(cbba, Proposition{mask});
    return {cbba.frame(), TableKind::belief, std::move(values)};
}

/// Generalized plausibility for every proposition, from the belief table via
/// Pl(A) = 1 - Bel(complement of A); Pl of the empty set is 0 by definition.
inline BeliefTable gpl_table(const Cbba& cbba) {
    BeliefTable bel = gbel_table(cbba);
    const Frame& frame = bel.frame();
    std::vector<double> values(bel.size());
    for (std::uint32_t mask = 1; mask < values.size(); ++mask)
        values[mask] = 1.0 - bel[frame.complement(Proposition{mask})];
    values[0] = 0.0;
    return {frame, TableKind::plausibility, std::move(values)};
}

namespace detail {
inline void require_belief_table(const BeliefTable& bel) {
    if (bel.kind() != TableKind::belief)
        throw InvalidTable(std::string{"InvalidTable: expected a belief table, got "} +
                           std::string{table_kind_name(bel.kind())});
    if (bel.values()[0] != 0.0)
        throw InvalidTable("InvalidTable: belief of the empty set must be 0");
}
} // namespace detail

/// Recovers the commitment table from a belief table with the fast Moebius
/// sweep. Inverse of gbel_table up to rounding.
inline BeliefTable mobius_invert(const BeliefTable& bel) {
    detail::require_belief_table(bel);
    std::vector<double> values(bel.values().begin(), bel.values().end());
    subset_sum_invert_in_place(std::span<double>(values));
    return {bel.frame(), TableKind::commitment, std::move(values)};
}

/// Literal alternating-sum Moebius inversion,
///   Com(A) = sum over B subset of A of (-1)^|A - B| Bel(B),
/// enumerated per proposition (O(3^N)); oracle for mobius_invert, refused
/// above max_naive_frame_size.
inline BeliefTable mobius_invert_naive(const BeliefTable& bel) {
    detail::require_belief_table(bel);
    const int n = bel.frame().size();
    if (n > max_naive_frame_size) throw FrameTooLarge(n, max_naive_frame_size);
    std::vector<double> values(bel.size());
    for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
        double acc = 0.0;
        std::uint32_t sub = mask;
        while (true) {
            const int dropped = std::popcount(mask ^ sub);
            acc += (dropped & 1) ? -bel.values()[sub] : bel.values()[sub];
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
        values[mask] = acc;
    }
    return {bel.frame(), TableKind::commitment, std::move(values)};
}

/// Outcome of checking the two exact axioms plus monotonicity on the whole
/// lattice. worst_monotonicity_gap is the largest drop Bel(A) - Bel(A + one
/// event) observed; monotone tables keep it within monotonicity_slack.
struct AxiomReport {
    double bel_empty = 0.0;
    double bel_omega = 0.0;
    double worst_monotonicity_gap = 0.0;
    Proposition worst_subset{};
    Proposition worst_superset{};
    bool axiom1_ok = false;
    bool axiom2_ok = false;
    bool monotonic_ok = false;

    bool ok() const noexcept { return axiom1_ok && axiom2_ok && monotonic_ok; }
};

/// Verifies Bel(empty) = 0 exactly, Bel(frame) = 1 within tolerance, and
/// monotonicity along every single-event extension.
inline AxiomReport check_axioms(const Cbba& cbba, double tolerance = default_mass_tolerance) {
    BeliefTable bel = gbel_table(cbba);
    const std::size_t n = bel.size();
    AxiomReport report;
    report.bel_empty = bel.values()[0];
    report.bel_omega = bel.values()[n - 1];
    report.axiom1_ok = report.bel_empty == 0.0;
    report.axiom2_ok = std::abs(report.bel_omega - 1.0) <= tolerance;
    report.worst_monotonicity_gap = 0.0;
    for (std::size_t bit = 1; bit < n; bit <<= 1) {
        for (std::size_t mask = 0; mask < n; ++mask) {
            if (mask & bit) continue;
            const double gap = bel.values()[mask] - bel.values()[mask | bit];
            if (gap > report.worst_monotonicity_gap) {
                report.worst_monotonicity_gap = gap;
                report.worst_subset = Proposition{static_cast<std::uint32_t>(mask)};
                report.worst_superset = Proposition{static_cast<std::uint32_t>(mask | bit)};
            }
        }
    }
    report.monotonic_ok = report.worst_monotonicity_gap <= monotonicity_slack;
    return report;
}

/// Which function supplies the right-hand side terms of the superadditivity
/// inequality: commitment degrees (as printed) or belief values (the
/// classical total-monotonicity form).
enum class Axiom3Mode { commitment, belief };

struct Axiom3Result {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

/// Evaluates Bel(union of the sets) against the inclusion-exclusion sum over
/// every non-empty subfamily, with terms taken at the subfamily's
/// intersection. Cost 2^m for m sets; m is capped at 20.
inline Axiom3Result axiom3_check(const Cbba& cbba, std::span<const Proposition> sets,
                                 double tolerance = monotonicity_slack,
                                 Axiom3Mode mode = Axiom3Mode::commitment) {
    const std::size_t m = sets.size();
    if (m < 1 || m > 20) throw ValidationError("axiom3_check needs between 1 and 20 sets");
    Proposition all_union;
    for (Proposition a : sets) all_union = all_union | a;

    Axiom3Result result;
    result.lhs = gbel(cbba, all_union);
    for (std::uint32_t family = 1; family < (std::uint32_t{1} << m); ++family) {
        Proposition intersection = cbba.frame().universe();
        for (std::size_t i = 0; i < m; ++i)
            if ((family >> i) & 1) intersection = intersection & sets[i];
        const double term = mode == Axiom3Mode::commitment ? cbba.commitment(intersection)
                                                           : gbel(cbba, intersection);
        result.rhs += (std::popcount(family) & 1) ? term : -term;
    }
    result.holds = result.lhs >= result.rhs - tolerance;
    return result;
}

} // namespace cbel
