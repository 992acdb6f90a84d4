#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ptdfa {

/// Transition indices grouped by a per-transition key (a head or tail state),
/// built with one counting sort in O(keys + transitions).
class Adjacency {
public:
    Adjacency(std::span<const std::uint32_t> keys, std::uint32_t key_count)
        : offsets_(static_cast<std::size_t>(key_count) + 1, 0), items_(keys.size()) {
        for (const std::uint32_t k : keys) {
            ++offsets_[k + 1];
        }
        for (std::uint32_t k = 0; k < key_count; ++k) {
            offsets_[k + 1] += offsets_[k];
        }
        std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
        for (std::uint32_t t = 0; t < keys.size(); ++t) {
            items_[fill[keys[t]]++] = t;
        }
    }

    std::span<const std::uint32_t> of(std::uint32_t key) const noexcept {
        return std::span<const std::uint32_t>(items_).subspan(offsets_[key], offsets_[key + 1] - offsets_[key]);
    }

private:
    std::vector<std::uint32_t> offsets_;
    std::vector<std::uint32_t> items_;
};

} // namespace ptdfa
