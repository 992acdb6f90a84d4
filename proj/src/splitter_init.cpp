#include "ptdfa/splitter_init.hpp"

#include <string>
#include <unordered_set>
#include <vector>

namespace ptdfa {

namespace detail {

// Fills a partition's arrays directly. During construction mid_ and end_ are
// scratch: mid_[i] holds the label owning set i and end_[i] its count.
class PartitionBuilder {
public:
    static RefinablePartition group_by_label(std::span<const Label> labels, std::span<std::uint32_t> idx) {
        const auto m = static_cast<std::uint32_t>(labels.size());
        RefinablePartition trp(m, RefinablePartition::Uninitialized{});
        auto& first = trp.first_;
        auto& mid = trp.mid_;
        auto& end = trp.end_;
        std::uint32_t sets = 0;

        for (std::uint32_t t = 0; t < m; ++t) {
            const Label a = labels[t];
            std::uint32_t i = idx[a];
            if (i >= sets || mid[i] != a) {
                i = sets++;
                idx[a] = i;
                mid[i] = a;
                end[i] = 1;
            } else {
                ++end[i];
            }
        }

        first[0] = 0;
        mid[0] = end[0];
        for (std::uint32_t i = 1; i < sets; ++i) {
            first[i] = end[i - 1];
            end[i] = first[i] + end[i];
            mid[i] = end[i];
        }

        for (std::uint32_t t = 0; t < m; ++t) {
            const std::uint32_t i = idx[labels[t]];
            const std::uint32_t at = --mid[i];
            trp.elems_[at] = t;
            trp.loc_[t] = at;
            trp.sidx_[t] = i;
        }
        // Every mid[i] has walked back to first[i]: nothing is marked.
        trp.sets_ = sets;
        return trp;
    }
};

} // namespace detail

PresortViolation::PresortViolation(std::uint32_t transition)
    : std::invalid_argument("label of transition " + std::to_string(transition) +
                            " already occurred earlier in a different run"),
      transition_(transition) {}

RefinablePartition init_trp_presorted(std::span<const Label> labels) {
    if (labels.empty()) {
        throw std::invalid_argument("cannot partition an empty transition set");
    }
    {
        std::unordered_set<Label> closed;
        for (std::size_t t = 1; t < labels.size(); ++t) {
            if (labels[t] != labels[t - 1]) {
                closed.insert(labels[t - 1]);
                if (closed.contains(labels[t])) {
                    throw PresortViolation(static_cast<std::uint32_t>(t));
                }
            }
        }
    }

    RefinablePartition trp(static_cast<std::uint32_t>(labels.size()));
    std::size_t run = 0;
    while (run < labels.size()) {
        std::size_t stop = run;
        while (stop < labels.size() && labels[stop] == labels[run]) {
            trp.mark(static_cast<std::uint32_t>(stop));
            ++stop;
        }
        // The last run leaves set 0 fully marked; split() then only unmarks.
        trp.split(0);
        run = stop;
    }
    return trp;
}

RefinablePartition init_trp_grouping(std::span<const Label> labels, std::span<std::uint32_t> idx) {
    if (labels.empty()) {
        throw std::invalid_argument("cannot partition an empty transition set");
    }
    for (std::size_t t = 0; t < labels.size(); ++t) {
        if (labels[t] >= idx.size()) {
            throw std::out_of_range("label " + std::to_string(labels[t]) + " of transition " + std::to_string(t) +
                                    " is outside the alphabet");
        }
    }
    return detail::PartitionBuilder::group_by_label(labels, idx);
}

RefinablePartition init_trp_grouping(std::span<const Label> labels, std::uint32_t alpha) {
    std::vector<std::uint32_t> idx(alpha);
    return init_trp_grouping(labels, idx);
}

} // namespace ptdfa
