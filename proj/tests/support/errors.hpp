#pragma once

#include "effbound/error.hpp"

#include <optional>

namespace testing_support {

/// The library error code raised by f, or nullopt when f returns normally.
template <typename F>
std::optional<effbound::Errc> error_of(F&& f)
{
    try {
        f();
    } catch (const effbound::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace testing_support
