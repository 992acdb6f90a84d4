#include "ptdfa/refinable_partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptdfa {

RefinablePartition::RefinablePartition(std::uint32_t max)
    : RefinablePartition(max, Uninitialized{}) {
    std::iota(elems_.begin(), elems_.end(), 0u);
    std::iota(loc_.begin(), loc_.end(), 0u);
    std::fill(sidx_.begin(), sidx_.end(), 0u);
    sets_ = 1;
    first_[0] = 0;
    mid_[0] = 0;
    end_[0] = max;
}

RefinablePartition::RefinablePartition(std::uint32_t max, Uninitialized)
    : elems_(max), loc_(max), sidx_(max), first_(max), end_(max), mid_(max) {
    if (max == 0) {
        throw std::invalid_argument("refinable partition needs at least one element");
    }
}

std::optional<std::string> RefinablePartition::check_invariants() const {
    const std::uint32_t n = max();
    std::ostringstream why;
    if (sets_ == 0 || sets_ > n) {
        why << "set count " << sets_ << " out of range";
        return why.str();
    }
    std::vector<bool> seen(n, false);
    for (std::uint32_t at = 0; at < n; ++at) {
        const Element e = elems_[at];
        if (e >= n || seen[e]) {
            why << "elems is not a permutation at position " << at;
            return why.str();
        }
        seen[e] = true;
        if (loc_[e] != at) {
            why << "loc[" << e << "] = " << loc_[e] << ", expected " << at;
            return why.str();
        }
    }
    std::vector<std::uint32_t> owner(n, sets_);
    for (SetIndex s = 0; s < sets_; ++s) {
        if (!(first_[s] <= mid_[s] && mid_[s] <= end_[s] && end_[s] <= n && first_[s] < end_[s])) {
            why << "bad slice for set " << s << ": first=" << first_[s] << " mid=" << mid_[s]
                << " end=" << end_[s];
            return why.str();
        }
        for (std::uint32_t at = first_[s]; at < end_[s]; ++at) {
            if (owner[at] != sets_) {
                why << "position " << at << " is owned by sets " << owner[at] << " and " << s;
                return why.str();
            }
            owner[at] = s;
            if (sidx_[elems_[at]] != s) {
                why << "sidx[" << elems_[at] << "] = " << sidx_[elems_[at]] << ", expected " << s;
                return why.str();
            }
        }
    }
    for (std::uint32_t at = 0; at < n; ++at) {
        if (owner[at] == sets_) {
            why << "position " << at << " belongs to no set";
            return why.str();
        }
    }
    return std::nullopt;
}

std::string RefinablePartition::dump() const {
    std::ostringstream out;
    for (SetIndex s = 0; s < sets_; ++s) {
        out << s << ": [";
        for (std::uint32_t at = first_[s]; at < mid_[s]; ++at) {
            out << (at == first_[s] ? "" : " ") << elems_[at];
        }
        out << "] |";
        for (std::uint32_t at = mid_[s]; at < end_[s]; ++at) {
            out << ' ' << elems_[at];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace ptdfa
