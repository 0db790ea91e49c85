#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbel/errors.hpp"

namespace cbel {

/// Hard cap on the number of events in a frame. Dense whole-lattice
/// operations impose the tighter max_dense_frame_size on top of this.
inline constexpr int max_frame_size = 24;

/// A subset of a frame's events, encoded as a bitmask: bit i set means event
/// i (in the frame's declared order) belongs to the set. The all-zero mask is
/// the empty set, the all-ones mask (up to the frame size) the whole frame.
class Proposition {
public:
    constexpr Proposition() = default;
    constexpr explicit Proposition(std::uint32_t bits) : bits_(bits) {}

    constexpr std::uint32_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool contains(int event) const noexcept { return (bits_ >> event) & 1u; }
    constexpr int cardinality() const noexcept { return std::popcount(bits_); }
    constexpr bool is_subset_of(Proposition other) const noexcept {
        return (bits_ & other.bits_) == bits_;
    }
    constexpr bool intersects(Proposition other) const noexcept {
        return (bits_ & other.bits_) != 0;
    }

    friend constexpr Proposition operator&(Proposition a, Proposition b) noexcept {
        return Proposition{a.bits_ & b.bits_};
    }
    friend constexpr Proposition operator|(Proposition a, Proposition b) noexcept {
        return Proposition{a.bits_ | b.bits_};
    }
    friend constexpr auto operator<=>(Proposition, Proposition) noexcept = default;

private:
    std::uint32_t bits_ = 0;
};

inline constexpr Proposition empty_set{0};

/// Frame of discernment: an ordered set of distinct, non-empty event labels.
/// Labels may not contain '|', ',', '"' or control characters; they appear
/// verbatim in the CSV and CLI surfaces.
class Frame {
public:
    explicit Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
        const int n = static_cast<int>(labels_.size());
        if (n < 1) throw InvalidFrame("InvalidFrame: a frame needs at least one event");
        if (n > max_frame_size) throw FrameTooLarge(n, max_frame_size);
        for (const auto& label : labels_) {
            if (label.empty())
                throw InvalidFrame("InvalidFrame: event labels must be non-empty");
            for (unsigned char c : label)
                if (c < 0x20 || c == '|' || c == ',' || c == '"')
                    throw InvalidFrame("InvalidFrame: label \"" + label +
                                       "\" contains a reserved character");
        }
        auto sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidFrame("InvalidFrame: event labels must be distinct");
    }

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Number of propositions over this frame, 2^N.
    std::size_t proposition_count() const noexcept { return std::size_t{1} << size(); }

    Proposition universe() const noexcept {
        return Proposition{static_cast<std::uint32_t>(proposition_count() - 1)};
    }

    bool contains(Proposition a) const noexcept { return a.bits() < proposition_count(); }

    Proposition complement(Proposition a) const noexcept {
        return Proposition{~a.bits() & universe().bits()};
    }

    /// Bit index of a label, or -1 when the label is not in the frame.
    int index_of(std::string_view label) const noexcept {
        for (int i = 0; i < size(); ++i)
            if (labels_[i] == label) return i;
        return -1;
    }

    /// Builds the proposition holding exactly the named events; duplicates
    /// collapse. Throws UnknownLabel for a label outside the frame.
    Proposition parse(std::span<const std::string> labels) const {
        std::uint32_t bits = 0;
        for (const auto& label : labels) {
            const int i = index_of(label);
            if (i < 0) throw UnknownLabel(label);
            bits |= std::uint32_t{1} << i;
        }
        return Proposition{bits};
    }

    /// Labels of the events in a proposition, in frame order.
    std::vector<std::string> labels_of(Proposition a) const {
        std::vector<std::string> out;
        for (int i = 0; i < size(); ++i)
            if (a.contains(i)) out.push_back(labels_[i]);
        return out;
    }

    /// Joins the labels of a proposition with a separator, e.g. "a|b".
    std::string join(Proposition a, std::string_view separator) const {
        std::string out;
        bool first = true;
        for (int i = 0; i < size(); ++i) {
            if (!a.contains(i)) continue;
            if (!first) out += separator;
            out += labels_[i];
            first = false;
        }
        return out;
    }

    /// Braced rendering for messages: "{a,b}"; the empty set renders as "{}".
    std::string format(Proposition a) const { return "{" + join(a, ",") + "}"; }

    /// All 2^N propositions in ascending bitmask order: empty set first,
    /// the whole frame last.
    std::vector<Proposition> powerset() const {
        if (size() > max_frame_size) throw FrameTooLarge(size(), max_frame_size);
        std::vector<Proposition> out;
        out.reserve(proposition_count());
        for (std::uint32_t bits = 0; bits < proposition_count(); ++bits)
            out.emplace_back(bits);
        return out;
    }

    friend bool operator==(const Frame& a, const Frame& b) { return a.labels_ == b.labels_; }

private:
    std::vector<std::string> labels_;
};

} // namespace cbel
