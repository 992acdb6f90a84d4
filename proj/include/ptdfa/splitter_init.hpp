#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "ptdfa/refinable_partition.hpp"
#include "ptdfa/types.hpp"

namespace ptdfa {

class PresortViolation : public std::invalid_argument {
public:
    explicit PresortViolation(std::uint32_t transition);
    std::uint32_t transition() const noexcept { return transition_; }

private:
    std::uint32_t transition_;
};

/// Partition of transition indices into one set per label, for label
/// sequences where equal labels are already contiguous. O(m) time, O(1)
/// extra memory beyond the partition. Requires at least one transition.
RefinablePartition init_trp_presorted(std::span<const Label> labels);

/// Same partition for labels in any order, grouped by counting in O(m) time.
/// `idx` is scratch space of at least `alpha` entries whose contents are never
/// trusted: every entry read is validated against the partition being built.
RefinablePartition init_trp_grouping(std::span<const Label> labels, std::span<std::uint32_t> idx);

/// Convenience overload that allocates the scratch array itself.
RefinablePartition init_trp_grouping(std::span<const Label> labels, std::uint32_t alpha);

} // namespace ptdfa
