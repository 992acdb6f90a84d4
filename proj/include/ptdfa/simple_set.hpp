#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace ptdfa {

/// Bag of integers below a fixed capacity with O(1) add/remove. add() does
/// not check for duplicates; callers keep the contents duplicate-free.
/// remove() pops the most recently added number.
class SimpleSet {
public:
    explicit SimpleSet(std::uint32_t capacity) : items_(capacity) {}

    bool empty() const noexcept { return size_ == 0; }
    std::uint32_t size() const noexcept { return size_; }

    void add(std::uint32_t i) noexcept {
        assert(size_ < items_.size());
        items_[size_++] = i;
    }

    std::uint32_t remove() noexcept {
        assert(size_ > 0);
        return items_[--size_];
    }

    std::vector<std::uint32_t> snapshot() const {
        return {items_.begin(), items_.begin() + size_};
    }

private:
    std::vector<std::uint32_t> items_;
    std::uint32_t size_ = 0;
};

/// Same contract as SimpleSet, but remove() returns the oldest entry.
class FifoSimpleSet {
public:
    explicit FifoSimpleSet(std::uint32_t capacity) : items_(capacity == 0 ? 1 : capacity) {}

    bool empty() const noexcept { return size_ == 0; }
    std::uint32_t size() const noexcept { return size_; }

    void add(std::uint32_t i) noexcept {
        assert(size_ < items_.size());
        std::uint32_t at = head_ + size_;
        if (at >= items_.size()) {
            at -= static_cast<std::uint32_t>(items_.size());
        }
        items_[at] = i;
        ++size_;
    }

    std::uint32_t remove() noexcept {
        assert(size_ > 0);
        const std::uint32_t i = items_[head_];
        if (++head_ == items_.size()) {
            head_ = 0;
        }
        --size_;
        return i;
    }

    std::vector<std::uint32_t> snapshot() const {
        std::vector<std::uint32_t> out;
        out.reserve(size_);
        for (std::uint32_t k = 0; k < size_; ++k) {
            out.push_back(items_[(head_ + k) % items_.size()]);
        }
        return out;
    }

private:
    std::vector<std::uint32_t> items_;
    std::uint32_t head_ = 0;
    std::uint32_t size_ = 0;
};

} // namespace ptdfa
