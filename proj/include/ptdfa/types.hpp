#pragma once

#include <compare>
#include <cstdint>

namespace ptdfa {

using State = std::uint32_t;
using Label = std::uint32_t;

/// One defined entry of the partial transition function.
struct Transition {
    State tail;
    Label label;
    State head;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

} // namespace ptdfa
