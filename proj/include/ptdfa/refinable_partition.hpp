#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ptdfa {

namespace detail {
class PartitionBuilder;
}

/**
 * A partition of {0, ..., max-1} that can only be refined.
 *
 * Elements of one set are contiguous in `elems_`; set s owns the half-open
 * slice [first_[s], end_[s]). Marked elements of s sit in the prefix
 * [first_[s], mid_[s]). All operations are O(1) except split(), which is
 * linear in the number of marked elements and therefore amortized O(1)
 * against the mark() calls that preceded it.
 *
 * Elements of a set must not be marked or split while that same instance is
 * being scanned with first()/next() or elements(). Scanning one instance while
 * mutating another is fine.
 */
class RefinablePartition {
public:
    using Element = std::uint32_t;
    using SetIndex = std::uint32_t;

    /// One set holding every element, nothing marked. Throws
    /// std::invalid_argument when max is 0.
    explicit RefinablePartition(std::uint32_t max);

    std::uint32_t max() const noexcept { return static_cast<std::uint32_t>(elems_.size()); }
    std::uint32_t sets() const noexcept { return sets_; }

    std::uint32_t size(SetIndex s) const noexcept {
        assert(s < sets_);
        return end_[s] - first_[s];
    }

    SetIndex set_of(Element e) const noexcept {
        assert(e < max());
        return sidx_[e];
    }

    Element first(SetIndex s) const noexcept {
        assert(s < sets_);
        return elems_[first_[s]];
    }

    /// Successor of e in the scan of its set; std::nullopt past the last one.
    std::optional<Element> next(Element e) const noexcept {
        assert(e < max());
        const std::uint32_t at = loc_[e] + 1;
        if (at >= end_[sidx_[e]]) {
            return std::nullopt;
        }
        return elems_[at];
    }

    /// Contiguous view of set s. Same validity rules as a first()/next() scan.
    std::span<const Element> elements(SetIndex s) const noexcept {
        assert(s < sets_);
        return std::span<const Element>(elems_).subspan(first_[s], end_[s] - first_[s]);
    }

    /// Marking an already marked element does nothing.
    void mark(Element e) noexcept {
        assert(e < max());
        ++mark_calls_;
        const SetIndex s = sidx_[e];
        const std::uint32_t at = loc_[e];
        const std::uint32_t m = mid_[s];
        if (at >= m) {
            elems_[at] = elems_[m];
            loc_[elems_[at]] = at;
            elems_[m] = e;
            loc_[e] = m;
            mid_[s] = m + 1;
        }
    }

    /// Moves the marked elements of s into a fresh set and returns its index.
    /// Returns std::nullopt when none or all of s was marked. Marks of s are
    /// cleared in every case.
    std::optional<SetIndex> split(SetIndex s) noexcept {
        assert(s < sets_);
        ++split_calls_;
        if (mid_[s] == end_[s]) {
            mid_[s] = first_[s];
        }
        if (mid_[s] == first_[s]) {
            return std::nullopt;
        }
        const SetIndex fresh = sets_++;
        first_[fresh] = first_[s];
        mid_[fresh] = first_[s];
        end_[fresh] = mid_[s];
        first_[s] = mid_[s];
        for (std::uint32_t at = first_[fresh]; at < end_[fresh]; ++at) {
            sidx_[elems_[at]] = fresh;
        }
        relabels_ += end_[fresh] - first_[fresh];
        return fresh;
    }

    bool no_marks(SetIndex s) const noexcept {
        assert(s < sets_);
        return mid_[s] == first_[s];
    }

    std::uint32_t marked_count(SetIndex s) const noexcept {
        assert(s < sets_);
        return mid_[s] - first_[s];
    }

    // Work counters for amortization checks.
    std::uint64_t mark_calls() const noexcept { return mark_calls_; }
    std::uint64_t split_calls() const noexcept { return split_calls_; }
    std::uint64_t split_relabels() const noexcept { return relabels_; }

    /// Checks every structural invariant in O(max). Returns a description of
    /// the first violation, or std::nullopt.
    std::optional<std::string> check_invariants() const;

    /// One line per set: `<index>: [marked...] | unmarked...`. Not a stable format.
    std::string dump() const;

private:
    struct Uninitialized {};
    RefinablePartition(std::uint32_t max, Uninitialized);

    friend class detail::PartitionBuilder;

    std::vector<Element> elems_;
    std::vector<std::uint32_t> loc_;
    std::vector<SetIndex> sidx_;
    std::vector<std::uint32_t> first_;
    std::vector<std::uint32_t> end_;
    std::vector<std::uint32_t> mid_;
    std::uint32_t sets_ = 0;

    std::uint64_t mark_calls_ = 0;
    std::uint64_t split_calls_ = 0;
    std::uint64_t relabels_ = 0;
};

} // namespace ptdfa
